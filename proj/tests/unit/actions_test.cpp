#include "jetcalc/actions.hpp"
#include "jetcalc/sampling.hpp"

#include "builders.hpp"

#include <gtest/gtest.h>

namespace jetcalc {
namespace {

using testing::mat;
using testing::ten;
using testing::vec;

const Dims d12{1, 2};

TEST(ActL, RightMultiplication) {
  const Velocity v(d12, vec({0, 0}), mat(2, 1, {1, 2}));
  EXPECT_EQ(act_L_velocity(v, JetGroupElement(mat(1, 1, {3}))).U(), mat(2, 1, {3, 6}));
  EXPECT_EQ(act_L_velocity(v, JetGroupElement::identity(1)).U(), v.U());
  EXPECT_THROW(act_L_velocity(v, JetGroupElement::identity(2)), DimensionError);
}

TEST(ActP, WorkedValue) {
  const DoubleVelocity dv(d12, vec({0, 0}), mat(2, 1, {1, 2}), mat(2, 1, {3, 4}), ten(2, 1, 1, {5, 6}));
  const PrincipalJetElement p(mat(1, 1, {2}), mat(1, 1, {3}), ten(1, 1, 1, {7}));
  const DoubleVelocity out = act_P_double(dv, p);
  EXPECT_EQ(out.Ui(), mat(2, 1, {3, 6}));
  EXPECT_EQ(out.Uo(), mat(2, 1, {6, 8}));
  EXPECT_EQ(out.W(), ten(2, 1, 1, {37, 50}));
  EXPECT_EQ(out.u(), dv.u());
  EXPECT_EQ(distance(act_P_double(dv, identity_P(1)), dv), 0.0);
}

TEST(ActP, HolonomicStaysHolonomic) {
  Sampler s(7);
  for (int k = 0; k < 20; ++k) {
    const DoubleVelocity dv = s.holonomic({2, 4});
    EXPECT_TRUE(is_holonomic(act_P_double(dv, s.holonomic_principal(2))));
  }
}

TEST(RhoRegular, Examples) {
  const DoubleVelocity flat(d12, vec({0, 0}), mat(2, 1, {1, 0}), mat(2, 1, {0, 0}), ten(2, 1, 1, {0, 0}));
  EXPECT_FALSE(is_rho_regular(flat));
  const DoubleVelocity turning(d12, vec({0, 0}), mat(2, 1, {1, 0}), mat(2, 1, {0, 0}), ten(2, 1, 1, {0, 1}));
  EXPECT_TRUE(is_rho_regular(turning));
  const DoubleVelocity moving(d12, vec({0, 0}), mat(2, 1, {1, 0}), mat(2, 1, {1, 1}), ten(2, 1, 1, {0, 0}));
  EXPECT_TRUE(is_rho_regular(moving));
  // Moving along the line itself without turning: the projected curve still moves.
  const DoubleVelocity along(d12, vec({0, 0}), mat(2, 1, {1, 0}), mat(2, 1, {1, 0}), ten(2, 1, 1, {0, 0}));
  EXPECT_TRUE(is_rho_regular(along));
}

TEST(RhoRegular, TangentMatrixColumns) {
  const DoubleVelocity turning(d12, vec({0, 0}), mat(2, 1, {2, 0}), mat(2, 1, {0, 0}), ten(2, 1, 1, {0, 4}));
  // u-part 0, plane coordinate x = U(1)/U(0) with derivative W(1)/U(0) − U(1)·W(0)/U(0)² = 2.
  EXPECT_EQ(rho_tangent_matrix(turning, {0}), mat(3, 1, {0, 0, 2}));
}

TEST(Transporter, RecoversElementAndRejectsOffOrbit) {
  const DoubleVelocity dv(d12, vec({1, -1}), mat(2, 1, {2, 3}), mat(2, 1, {4, 6}), ten(2, 1, 1, {8, 14}));
  const PrincipalJetElement p(mat(1, 1, {-2}), mat(1, 1, {3}), ten(1, 1, 1, {5}));
  const auto found = solve_transporter(dv, act_P_double(dv, p), {0});
  ASSERT_TRUE(found.has_value());
  EXPECT_LE(distance(*found, p), 1e-15);

  const auto same = solve_transporter(dv, dv, {0});
  ASSERT_TRUE(same.has_value());
  EXPECT_LE(distance(*same, identity_P(1)), 1e-15);

  DoubleVelocity target = act_P_double(dv, p);
  Tensor3 W = target.W();
  W(1, 0, 0) += 1;
  const DoubleVelocity off(d12, target.u(), target.Ui(), target.Uo(), W);
  EXPECT_FALSE(solve_transporter(dv, off, {0}).has_value());

  const DoubleVelocity singular(d12, vec({0, 0}), mat(2, 1, {0, 1}), mat(2, 1, {1, 1}), ten(2, 1, 1, {0, 0}));
  EXPECT_THROW(solve_transporter(singular, singular, {0}), SingularError);
}

}  // namespace
}  // namespace jetcalc
