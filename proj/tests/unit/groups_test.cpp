#include "jetcalc/groups.hpp"

#include "builders.hpp"

#include <gtest/gtest.h>

namespace jetcalc {
namespace {

using testing::mat;
using testing::ten;

PrincipalJetElement p1d(double aphi, double asigma, double b) {
  return {mat(1, 1, {aphi}), mat(1, 1, {asigma}), ten(1, 1, 1, {b})};
}

void expect_p1d(const PrincipalJetElement& p, double aphi, double asigma, double b) {
  EXPECT_NEAR(p.Aphi()(0, 0), aphi, 1e-15);
  EXPECT_NEAR(p.Asigma()(0, 0), asigma, 1e-15);
  EXPECT_NEAR(p.B()(0, 0, 0), b, 1e-15);
}

TEST(JetGroup, ComposeAndInverse) {
  EXPECT_EQ(compose_L(JetGroupElement(mat(1, 1, {2})), JetGroupElement(mat(1, 1, {7}))).A(), mat(1, 1, {14}));
  EXPECT_EQ(compose_L(JetGroupElement(mat(2, 2, {1, 1, 0, 1})), JetGroupElement(mat(2, 2, {1, 0, 1, 1}))).A(),
            mat(2, 2, {2, 1, 1, 1}));
  EXPECT_EQ(inverse_L(JetGroupElement(mat(1, 1, {2}))).A(), mat(1, 1, {0.5}));
  EXPECT_EQ(inverse_L(JetGroupElement::identity(3)).A(), Matrix::Identity(3, 3));
  EXPECT_THROW(JetGroupElement(mat(2, 2, {1, 2, 2, 4})), SingularError);
  EXPECT_THROW(compose_L(JetGroupElement::identity(1), JetGroupElement::identity(2)), DimensionError);
}

TEST(Principal, ComposeWorkedValue) {
  expect_p1d(compose_P(p1d(2, 3, 5), p1d(7, 11, 13)), 14, 33, 424);
  expect_p1d(compose_P(p1d(2, 3, 5), identity_P(1)), 2, 3, 5);
  EXPECT_THROW(compose_P(identity_P(1), identity_P(2)), DimensionError);
}

TEST(Principal, ProductLawSlotOrder) {
  // B1 = e_0 ⊗ e^0 ⊗ e^1; the second slot pairs with Asigma2, the third with Aphi2.
  Tensor3 B1(2, 2, 2);
  B1(0, 0, 1) = 1;
  const PrincipalJetElement p1(Matrix::Identity(2, 2), Matrix::Identity(2, 2), B1);
  const Matrix Aphi2 = mat(2, 2, {1, 0, 2, 1});
  const Matrix Asig2 = mat(2, 2, {1, 3, 0, 1});
  const PrincipalJetElement p2(Aphi2, Asig2, Tensor3(2, 2, 2));
  const Tensor3 B = compose_P(p1, p2).B();
  // B(0,j,k) = Asig2(0,j)·Aphi2(1,k)
  EXPECT_EQ(B, ten(2, 2, 2, {2, 1, 6, 3, 0, 0, 0, 0}));
}

TEST(Principal, Inverse) {
  expect_p1d(inverse_P(p1d(2, 3, 5)), 0.5, 1.0 / 3.0, -5.0 / 18.0);
  expect_p1d(inverse_P(identity_P(1)), 1, 1, 0);
  const PrincipalJetElement p = p1d(2, 3, 5);
  EXPECT_LE(distance(compose_P(p, inverse_P(p)), identity_P(1)), 1e-15);
  EXPECT_LE(distance(inverse_P(inverse_P(p)), p), 1e-15);
}

TEST(Principal, ExchangeAndProjections) {
  expect_p1d(exchange_P(p1d(2, 3, 5)), 3, 2, 5);
  EXPECT_EQ(lambda_P(p1d(2, 3, 5)).A(), mat(1, 1, {2}));
  EXPECT_EQ(mu_P(p1d(2, 3, 5)).A(), mat(1, 1, {3}));

  const Tensor3 B = ten(1, 2, 2, {1, 2, 3, 4});
  const PrincipalJetElement p(Matrix::Identity(1, 1) * 2, Matrix::Identity(1, 1) * 3, ten(1, 1, 1, {0}));
  EXPECT_EQ(exchange_P(exchange_P(p)).B(), p.B());
  const PrincipalJetElement q(Matrix::Identity(2, 2), 2 * Matrix::Identity(2, 2),
                              ten(2, 2, 2, {1, 2, 3, 4, 5, 6, 7, 8}));
  EXPECT_EQ(exchange_P(q).B(), ten(2, 2, 2, {1, 3, 2, 4, 5, 7, 6, 8}));
  EXPECT_EQ(exchange_P(q).Aphi(), q.Asigma());
}

TEST(Principal, Chi) {
  const ChiCoefficients c = to_chi(p1d(2, 3, 5));
  EXPECT_EQ(c.Cs(), mat(1, 1, {3}));
  EXPECT_EQ(c.Ct(), mat(1, 1, {2}));
  EXPECT_EQ(c.Cst(), ten(1, 1, 1, {5}));
  expect_p1d(from_chi(c), 2, 3, 5);
  const ChiCoefficients id = to_chi(identity_P(2));
  EXPECT_EQ(id.Cs(), Matrix::Identity(2, 2));
  EXPECT_EQ(id.Cst().max_abs(), 0.0);
}

TEST(Subgroups, Predicates) {
  EXPECT_TRUE(is_semiholonomic_P(identity_P(2)));
  EXPECT_TRUE(is_holonomic_P(identity_P(2)));
  EXPECT_TRUE(is_curvature_P(identity_P(2)));

  const PrincipalJetElement p = p1d(2, 2, 5);
  EXPECT_TRUE(is_semiholonomic_P(p));
  EXPECT_TRUE(is_holonomic_P(p));
  EXPECT_FALSE(is_curvature_P(p));
  EXPECT_FALSE(is_semiholonomic_P(p1d(2, 3, 0)));

  const Matrix I2 = Matrix::Identity(2, 2);
  const PrincipalJetElement k(I2, I2, ten(2, 2, 2, {0, 1, -1, 0, 0, 0, 0, 0}));
  EXPECT_TRUE(is_curvature_P(k));
  EXPECT_FALSE(is_holonomic_P(k));
  EXPECT_TRUE(is_semiholonomic_P(k));
}

TEST(Subgroups, Symmetrize) {
  const Matrix I2 = Matrix::Identity(2, 2);
  const PrincipalJetElement p(I2, I2, ten(2, 2, 2, {0, 2, 0, 0, 0, 0, 0, 0}));
  EXPECT_EQ(symmetrize_P(p).B(), ten(2, 2, 2, {0, 1, 1, 0, 0, 0, 0, 0}));
  const PrincipalJetElement h = p1d(3, 3, 4);
  expect_p1d(symmetrize_P(h), 3, 3, 4);
  EXPECT_THROW(symmetrize_P(p1d(2, 3, 0)), DomainError);
}

TEST(Subgroups, FactorSemiholonomic) {
  const Matrix A = mat(2, 2, {2, 1, 1, 1});
  const PrincipalJetElement p(A, A, ten(2, 2, 2, {1, 3, 1, 0, 0, 2, 0, 4}));
  const auto [h, c] = factor_semiholonomic(p);
  EXPECT_TRUE(is_holonomic_P(h));
  EXPECT_TRUE(is_curvature_P(c));
  EXPECT_EQ(c.Aphi(), Matrix::Identity(2, 2));
  EXPECT_LE(distance(compose_P(h, c), p), 1e-15);

  const PrincipalJetElement hol = p1d(3, 3, 4);
  const auto [h2, c2] = factor_semiholonomic(hol);
  EXPECT_EQ(distance(h2, hol), 0.0);
  EXPECT_EQ(distance(c2, identity_P(1)), 0.0);
}

TEST(Subgroups, EmbedAndFactorP) {
  expect_p1d(embed_L(JetGroupElement(mat(1, 1, {2}))), 2, 2, 0);
  EXPECT_EQ(distance(embed_L(JetGroupElement::identity(2)), identity_P(2)), 0.0);

  const PrincipalJetElement p(mat(2, 2, {1, 2, 0, 1}), mat(2, 2, {3, 0, 1, 1}),
                              ten(2, 2, 2, {1, -2, 3, 0, 4, 1, -1, 2}));
  const auto [t, l] = factor_P(p);
  EXPECT_EQ(t.Aphi(), Matrix::Identity(2, 2));
  EXPECT_LE(distance(compose_P(t, l), p), 1e-14);
  EXPECT_EQ(distance(l, embed_L(lambda_P(p))), 0.0);

  const auto [t2, l2] = factor_P(embed_L(JetGroupElement(mat(1, 1, {5}))));
  EXPECT_EQ(distance(t2, identity_P(1)), 0.0);
}

TEST(SecondOrder, WorkedComposition) {
  const PrincipalJetElement p = compose_P(p1d(2, 2, 6), p1d(3, 3, 4));
  expect_p1d(p, 6, 6, 62);
  const SecondOrderJetElement q1 = to_second_order(p1d(2, 2, 6));
  const SecondOrderJetElement q2 = to_second_order(p1d(3, 3, 4));
  const SecondOrderJetElement q = compose_second_order_jets(q1, q2);
  EXPECT_EQ(q.A(), mat(1, 1, {6}));
  EXPECT_EQ(q.S(), ten(1, 1, 1, {62}));
  expect_p1d(from_second_order(q), 6, 6, 62);
  EXPECT_THROW(to_second_order(p1d(2, 3, 0)), DomainError);
  EXPECT_THROW(SecondOrderJetElement(Matrix::Identity(2, 2), ten(2, 2, 2, {0, 1, 0, 0, 0, 0, 0, 0})),
               DomainError);
}

}  // namespace
}  // namespace jetcalc
