#include "jetcalc/contact.hpp"
#include "jetcalc/sampling.hpp"

#include "builders.hpp"

#include <gtest/gtest.h>

namespace jetcalc {
namespace {

using testing::mat;
using testing::ten;
using testing::vec;

const Dims d12{1, 2};

DoubleVelocity worked() {
  return {d12, vec({0, 0}), mat(2, 1, {2, 3}), mat(2, 1, {4, 6}), ten(2, 1, 1, {8, 14})};
}

TEST(Contact, EchelonCanonicalForm) {
  const ContactElement c = contact_of(Velocity(d12, vec({0, 0}), mat(2, 1, {2, 4})));
  EXPECT_EQ(c.P(), mat(2, 1, {1, 2}));
  EXPECT_EQ(contact_of(Velocity(d12, vec({0, 0}), c.P())).P(), c.P());
  EXPECT_TRUE(contact_equal(c, c));
  EXPECT_FALSE(contact_equal(c, contact_of(Velocity(d12, vec({1, 0}), mat(2, 1, {2, 4})))));
  EXPECT_TRUE(contact_equal(c, contact_of(Velocity(d12, vec({0, 0}), mat(2, 1, {-1, -2})))));
  EXPECT_THROW(contact_of(Velocity(d12, vec({0, 0}), mat(2, 1, {0, 0}))), DomainError);
}

TEST(Contact, PlaneChart) {
  const ContactElement c = plane_contact(d12, vec({0, 0}), mat(1, 1, {2}), {0});
  EXPECT_EQ(c.P(), mat(2, 1, {1, 2}));
  const ContactElement c2 = plane_contact(d12, vec({0, 0}), mat(1, 1, {2}), {1});
  EXPECT_EQ(c2.P(), mat(2, 1, {1, 0.5}));
}

TEST(DoubleContact, WorkedCanonicalForm) {
  const DoubleVelocity dv = worked();
  const DoubleContactElement d = double_contact_of(dv);
  EXPECT_EQ(d.I(), PivotSet{0});
  EXPECT_DOUBLE_EQ(d.X()(0, 0), 1.5);
  EXPECT_DOUBLE_EQ(d.Y()(0, 0), 1.5);
  EXPECT_DOUBLE_EQ(d.Z()(0, 0, 0), 0.25);
  EXPECT_TRUE(is_semiholonomic_contact(d));
  EXPECT_TRUE(is_holonomic_contact(d));

  const PrincipalJetElement p = normalizing_element(dv, {0});
  EXPECT_DOUBLE_EQ(p.Aphi()(0, 0), 0.25);
  EXPECT_DOUBLE_EQ(p.Asigma()(0, 0), 0.5);
  EXPECT_DOUBLE_EQ(p.B()(0, 0, 0), -0.5);

  const DoubleVelocity rep = representative(d);
  EXPECT_EQ(rep.Ui(), mat(2, 1, {1, 1.5}));
  EXPECT_EQ(rep.W(), ten(2, 1, 1, {0, 0.25}));
}

TEST(DoubleContact, OrbitInvariance) {
  const DoubleVelocity dv = worked();
  const PrincipalJetElement p(mat(1, 1, {-3}), mat(1, 1, {2}), ten(1, 1, 1, {5}));
  const DoubleContactElement a = double_contact_of(dv);
  const DoubleContactElement b = double_contact_of(act_P_double(dv, p));
  EXPECT_LE(distance(a, b), 1e-15);
  EXPECT_TRUE(double_contact_equal(a, b));
}

TEST(DoubleContact, ChartSelectionAndErrors) {
  const DoubleVelocity dv(d12, vec({0, 0}), mat(2, 1, {0, 3}), mat(2, 1, {1, 6}), ten(2, 1, 1, {1, 1}));
  EXPECT_EQ(double_contact_of(dv).I(), PivotSet{1});
  const DoubleVelocity none(d12, vec({0, 0}), mat(2, 1, {0, 3}), mat(2, 1, {1, 0}), ten(2, 1, 1, {1, 1}));
  EXPECT_THROW(double_contact_of(none), ChartError);
  EXPECT_THROW(double_contact_at(worked(), {2}), DimensionError);
}

TEST(DoubleContact, NonSemiholonomicContact) {
  const DoubleContactElement d(d12, {0}, vec({0, 0}), mat(1, 1, {1}), mat(1, 1, {2}), ten(1, 1, 1, {0}));
  EXPECT_FALSE(is_semiholonomic_contact(d));
  EXPECT_FALSE(is_holonomic_contact(d));
  EXPECT_THROW(decompose_contact(d), DomainError);

  const Dims d23{2, 3};
  const DoubleContactElement twisted(d23, {0, 1}, vec({0, 0, 0}), mat(1, 2, {1, 2}), mat(1, 2, {1, 2}),
                                     ten(1, 2, 2, {0, 1, 0, 0}));
  EXPECT_TRUE(is_semiholonomic_contact(twisted));
  EXPECT_FALSE(is_holonomic_contact(twisted));
}

TEST(VerticalQuotient, WorkedValue) {
  const DoubleVelocity dv(d12, vec({0, 0}), mat(2, 1, {2, 3}), mat(2, 1, {0, 0}), ten(2, 1, 1, {4, 10}));
  const QuotientVerticalVector q = vertical_quotient(dv);
  EXPECT_DOUBLE_EQ(q.V()(0, 0, 0), 1.0);
  EXPECT_EQ(q.I(), PivotSet{0});
  EXPECT_EQ(q.base().P(), mat(2, 1, {1, 1.5}));
  EXPECT_NEAR(vertical_quotient_transported(dv).V()(0, 0, 0), 1.0, 1e-15);

  const DoubleVelocity flat(d12, vec({0, 0}), mat(2, 1, {2, 3}), mat(2, 1, {0, 0}), ten(2, 1, 1, {0, 0}));
  EXPECT_EQ(vertical_quotient(flat).V().max_abs(), 0.0);
  EXPECT_THROW(vertical_quotient(worked()), DomainError);
}

TEST(VerticalQuotient, KindIsPreserved) {
  const Dims d23{2, 3};
  const Velocity base(d23, vec({0, 0, 0}), mat(3, 2, {1, 0, 0, 1, 2, 3}));
  const VerticalVector k(base, ten(3, 2, 2, {0, 1, -1, 0, 0, 2, -2, 0, 0, 3, -3, 0}), TensorKind::alt);
  const QuotientVerticalVector q = vertical_quotient(k);
  EXPECT_EQ(q.kind(), TensorKind::alt);
  EXPECT_TRUE(has_kind(q.V(), TensorKind::alt));
  // v = K_α − (U_α·r)·K_I with r = id: 3 − (2·1 + 3·2) = −5
  EXPECT_DOUBLE_EQ(q.V()(0, 0, 1), -5.0);
}

TEST(VerticalQuotient, Split) {
  const Dims d23{2, 3};
  const ContactElement base = contact_of(Velocity(d23, vec({0, 0, 0}), mat(3, 2, {1, 0, 0, 1, 0, 0})));
  const QuotientVerticalVector q(base, {0, 1}, ten(1, 2, 2, {0, 1, 0, 0}));
  const auto [s, a] = split_quotient(q);
  EXPECT_EQ(s.V(), ten(1, 2, 2, {0, 0.5, 0.5, 0}));
  EXPECT_EQ(a.V(), ten(1, 2, 2, {0, 0.5, -0.5, 0}));
  EXPECT_EQ(s.kind(), TensorKind::sym);
  EXPECT_EQ(a.kind(), TensorKind::alt);
  EXPECT_EQ(distance(s + a, q), 0.0);

  const QuotientVerticalVector q1(contact_of(Velocity(d12, vec({0, 0}), mat(2, 1, {1, 0}))), {0},
                                  ten(1, 1, 1, {3}));
  EXPECT_EQ(split_quotient(q1).second.V().max_abs(), 0.0);
}

TEST(Affine, DecomposeAndRecombine) {
  const Dims d23{2, 3};
  const DoubleContactElement d(d23, {0, 1}, vec({1, 2, 3}), mat(1, 2, {1, 2}), mat(1, 2, {1, 2}),
                               ten(1, 2, 2, {4, 3, 1, 5}));
  const auto [h, k] = decompose_contact(d);
  EXPECT_TRUE(is_holonomic_contact(h));
  EXPECT_EQ(h.Z(), ten(1, 2, 2, {4, 2, 2, 5}));
  EXPECT_EQ(k.V(), ten(1, 2, 2, {0, 1, -1, 0}));
  EXPECT_EQ(k.kind(), TensorKind::alt);
  EXPECT_EQ(distance(affine_add_contact(h, k), d), 0.0);

  const DoubleContactElement hol = double_contact_of(worked());
  const auto [h1, k1] = decompose_contact(hol);
  EXPECT_EQ(distance(h1, hol), 0.0);
  EXPECT_EQ(k1.V().max_abs(), 0.0);
}

TEST(Affine, AdditivityAndKinds) {
  const Dims d23{2, 3};
  const DoubleContactElement h(d23, {0, 1}, vec({0, 0, 0}), mat(1, 2, {1, 2}), mat(1, 2, {1, 2}),
                               ten(1, 2, 2, {4, 2, 2, 5}));
  const ContactElement base = plane_contact(d23, h.u(), h.X(), h.I());
  const QuotientVerticalVector s(base, {0, 1}, ten(1, 2, 2, {1, 2, 2, 0}), TensorKind::sym);
  const QuotientVerticalVector a(base, {0, 1}, ten(1, 2, 2, {0, 3, -3, 0}), TensorKind::alt);
  EXPECT_TRUE(is_holonomic_contact(affine_add_contact(h, s)));
  const DoubleContactElement twisted = affine_add_contact(h, a);
  EXPECT_FALSE(is_holonomic_contact(twisted));
  EXPECT_TRUE(is_semiholonomic_contact(twisted));
  EXPECT_EQ(decompose_contact(twisted).second.V(), a.V());
  EXPECT_EQ(distance(affine_add_contact(affine_add_contact(h, s), a), affine_add_contact(h, s + a)), 0.0);
}

TEST(Representative, RoundTripThroughCanonicalForm) {
  Sampler s(11);
  for (int k = 0; k < 20; ++k) {
    const DoubleVelocity dv = s.chart_admissible({2, 4});
    const DoubleContactElement d = double_contact_of(dv);
    EXPECT_LE(distance(double_contact_of(representative(d)), d), 1e-12);
  }
}

}  // namespace
}  // namespace jetcalc
