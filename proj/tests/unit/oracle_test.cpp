#include "jetcalc/oracle.hpp"
#include "jetcalc/actions.hpp"
#include "jetcalc/sampling.hpp"

#include "builders.hpp"

#include <gtest/gtest.h>

namespace jetcalc {
namespace {

using testing::mat;
using testing::ten;
using testing::vec;

using oracle::Polynomial;
using oracle::Truncation;

TEST(Polynomial, TruncatedProducts) {
  const auto x = Polynomial::variable(2, Truncation::total_degree_2, 0);
  const auto y = Polynomial::variable(2, Truncation::total_degree_2, 1);
  const Polynomial p = (x + x.constant_like(1)) * (y + y.constant_like(2));
  EXPECT_DOUBLE_EQ(p.constant_term(), 2);
  EXPECT_DOUBLE_EQ(p.linear(0), 2);
  EXPECT_DOUBLE_EQ(p.linear(1), 1);
  EXPECT_DOUBLE_EQ(p.quadratic(0, 1), 1);
  EXPECT_DOUBLE_EQ((p * x).quadratic(0, 0), 2);
  EXPECT_DOUBLE_EQ((p * x * y).quadratic(0, 1), 2);  // cubic terms dropped

  const auto s = Polynomial::variable(2, Truncation::bidegree_1_1, 0);
  const auto t = Polynomial::variable(2, Truncation::bidegree_1_1, 1);
  EXPECT_DOUBLE_EQ((s * s).quadratic(0, 0), 0);
  EXPECT_DOUBLE_EQ((s * t).quadratic(0, 1), 1);
}

TEST(Polynomial, Substitute) {
  const auto x = Polynomial::variable(1, Truncation::total_degree_2, 0);
  const Polynomial f = 3.0 * x + x * x;
  const Polynomial g = f.substitute({2.0 * x + x.constant_like(1)});
  EXPECT_DOUBLE_EQ(g.constant_term(), 4);  // 3 + 1
  EXPECT_DOUBLE_EQ(g.linear(0), 10);       // 6 + 4
  EXPECT_DOUBLE_EQ(g.quadratic(0, 0), 4);
}

TEST(Oracle, ProlongOfParabola) {
  const oracle::PolyMap gamma(vec({0, 0}), mat(2, 1, {1, 0}), ten(2, 1, 1, {0, 2}));
  const DoubleVelocity dv = oracle::prolong(gamma);
  EXPECT_EQ(dv.Ui(), mat(2, 1, {1, 0}));
  EXPECT_EQ(dv.Uo(), mat(2, 1, {1, 0}));
  EXPECT_EQ(dv.W(), ten(2, 1, 1, {0, 2}));
  EXPECT_EQ(distance(dv, make_holonomic(vec({0, 0}), mat(2, 1, {1, 0}), ten(2, 1, 1, {0, 2}))), 0.0);
}

TEST(Oracle, ActionWorkedValue) {
  const DoubleVelocity dv(Dims{1, 2}, vec({0, 0}), mat(2, 1, {1, 2}), mat(2, 1, {3, 4}), ten(2, 1, 1, {5, 6}));
  const PrincipalJetElement p(mat(1, 1, {2}), mat(1, 1, {3}), ten(1, 1, 1, {7}));
  const DoubleVelocity out = oracle::double_jet_of(oracle::act_oracle(oracle::to_bipoly(dv), p));
  EXPECT_EQ(out.Ui(), mat(2, 1, {3, 6}));
  EXPECT_EQ(out.Uo(), mat(2, 1, {6, 8}));
  EXPECT_EQ(out.W(), ten(2, 1, 1, {37, 50}));
}

TEST(Oracle, SecondOrderComposition) {
  const oracle::PolyMap f1(vec({0}), mat(1, 1, {2}), ten(1, 1, 1, {6}));
  const oracle::PolyMap f2(vec({0}), mat(1, 1, {3}), ten(1, 1, 1, {4}));
  const oracle::PolyMap f = oracle::compose_second_order(f1, f2);
  EXPECT_DOUBLE_EQ(f.c1(0, 0), 6);
  EXPECT_DOUBLE_EQ(f.c2(0, 0, 0), 62);
}

TEST(Oracle, ChainRule) {
  // f(x) = x² (c2 = 2) after g(y) = 1 + 3y: (1 + 3y)² = 1 + 6y + 9y².
  const oracle::PolyMap f(vec({0}), mat(1, 1, {0}), ten(1, 1, 1, {2}));
  const oracle::PolyMap g(vec({1}), mat(1, 1, {3}), ten(1, 1, 1, {0}));
  const oracle::PolyMap h = oracle::compose(f, g);
  EXPECT_DOUBLE_EQ(h.c0(0), 1);
  EXPECT_DOUBLE_EQ(h.c1(0, 0), 6);
  EXPECT_DOUBLE_EQ(h.c2(0, 0, 0), 18);
  EXPECT_THROW(oracle::compose(f, oracle::PolyMap(vec({0, 0}), Matrix::Zero(2, 1), Tensor3(2, 1, 1))),
               DimensionError);
}

TEST(Oracle, SwapAndRoundTrip) {
  Sampler s(3);
  for (int k = 0; k < 10; ++k) {
    const DoubleVelocity dv = s.double_velocity({2, 3});
    EXPECT_EQ(distance(oracle::double_jet_of(oracle::to_bipoly(dv)), dv), 0.0);
    EXPECT_EQ(distance(oracle::double_jet_of(oracle::swap_arguments(oracle::to_bipoly(dv))), exchange(dv)), 0.0);
  }
}

TEST(Oracle, AgreesWithClosedFormAction) {
  Sampler s(5);
  for (int k = 0; k < 20; ++k) {
    const DoubleVelocity dv = s.double_velocity({2, 4});
    const PrincipalJetElement p = s.principal(2);
    const DoubleVelocity a = act_P_double(dv, p);
    const DoubleVelocity b = oracle::double_jet_of(oracle::act_oracle(oracle::to_bipoly(dv), p));
    EXPECT_LE(distance(a, b), 1e-12);
  }
}

TEST(Oracle, FiniteDifferenceRho) {
  const Dims d{1, 2};
  const DoubleVelocity flat(d, vec({0, 0}), mat(2, 1, {1, 0}), mat(2, 1, {0, 0}), ten(2, 1, 1, {0, 0}));
  const DoubleVelocity turning(d, vec({0, 0}), mat(2, 1, {1, 0}), mat(2, 1, {0, 0}), ten(2, 1, 1, {0, 1}));
  EXPECT_FALSE(oracle::rho_regular_fd(flat));
  EXPECT_TRUE(oracle::rho_regular_fd(turning));
  EXPECT_NEAR(oracle::rho_difference_matrix(turning)(2, 0), 1.0, 1e-9);
}

}  // namespace
}  // namespace jetcalc
