#include "jetcalc/jets.hpp"

#include "builders.hpp"

#include <gtest/gtest.h>

namespace jetcalc {
namespace {

using testing::mat;
using testing::ten;
using testing::vec;

const Dims d12{1, 2};

DoubleVelocity sample_m1() {
  return {d12, vec({0, 0}), mat(2, 1, {1, 2}), mat(2, 1, {3, 4}), ten(2, 1, 1, {5, 6})};
}

TEST(Dims, RejectsNonPositive) {
  EXPECT_THROW(Dims(0, 2), DimensionError);
  EXPECT_THROW(Dims(1, -1), DimensionError);
}

TEST(DoubleVelocity, ShapeChecked) {
  EXPECT_THROW(DoubleVelocity(d12, vec({0}), mat(2, 1, {1, 2}), mat(2, 1, {3, 4}), ten(2, 1, 1, {5, 6})),
               DimensionError);
  EXPECT_THROW(DoubleVelocity(d12, vec({0, 0}), mat(2, 1, {1, 2}), mat(2, 1, {3, 4}), ten(1, 1, 1, {5})),
               DimensionError);
}

TEST(Projections, CoordinateProjections) {
  const DoubleVelocity dv = sample_m1();
  EXPECT_EQ(inner_projection(dv).U(), mat(2, 1, {1, 2}));
  EXPECT_EQ(outer_projection(dv).U(), mat(2, 1, {3, 4}));
  EXPECT_EQ(inner_projection(exchange(dv)).U(), outer_projection(dv).U());
  EXPECT_EQ(outer_projection(exchange(dv)).U(), inner_projection(dv).U());
}

TEST(Exchange, SwapsAndTransposes) {
  const DoubleVelocity e = exchange(sample_m1());
  EXPECT_EQ(e.Ui(), mat(2, 1, {3, 4}));
  EXPECT_EQ(e.Uo(), mat(2, 1, {1, 2}));
  EXPECT_EQ(e.W(), ten(2, 1, 1, {5, 6}));

  const Dims d{2, 3};
  const Matrix U = mat(3, 2, {1, 0, 0, 1, 1, 1});
  const DoubleVelocity dv(d, vec({1, 2, 3}), U, 2 * U, ten(3, 2, 2, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}));
  EXPECT_EQ(exchange(dv).W(), ten(3, 2, 2, {1, 3, 2, 4, 5, 7, 6, 8, 9, 11, 10, 12}));
  EXPECT_EQ(distance(exchange(exchange(dv)), dv), 0.0);
}

TEST(Regularity, Velocity) {
  EXPECT_TRUE(is_regular(Velocity(d12, vec({0, 0}), mat(2, 1, {1, 2}))));
  EXPECT_FALSE(is_regular(Velocity(d12, vec({0, 0}), mat(2, 1, {0, 0}))));
  EXPECT_FALSE(is_regular(Velocity({2, 3}, vec({0, 0, 0}), mat(3, 2, {1, 1, 2, 2, 3, 3}))));
}

TEST(Regularity, DoubleVelocity) {
  const Tensor3 zero(2, 1, 1);
  const DoubleVelocity vert(d12, vec({0, 0}), mat(2, 1, {1, 0}), mat(2, 1, {0, 0}), zero);
  EXPECT_FALSE(is_tau_regular(vert));
  EXPECT_TRUE(is_inner_regular(vert));
  EXPECT_TRUE(is_vertical(vert));
  EXPECT_FALSE(is_double_regular(vert));

  const DoubleVelocity rot(d12, vec({0, 0}), mat(2, 1, {1, 0}), mat(2, 1, {0, 0}), ten(2, 1, 1, {0, 1}));
  EXPECT_TRUE(is_double_regular(rot));

  const DoubleVelocity dv(d12, vec({0, 0}), mat(2, 1, {0, 0}), mat(2, 1, {4, 6}), zero);
  EXPECT_TRUE(is_tau_regular(dv));
  EXPECT_FALSE(is_inner_regular(dv));
  EXPECT_TRUE(is_double_regular(dv));
  EXPECT_TRUE(is_inner_regular(exchange(dv)));
  EXPECT_FALSE(is_vertical(dv));
}

TEST(Holonomy, Predicates) {
  const DoubleVelocity dv = sample_m1();
  EXPECT_FALSE(is_semiholonomic(dv));
  EXPECT_FALSE(is_holonomic(dv));

  const Dims d{2, 2};
  const Matrix U = Matrix::Identity(2, 2);
  const DoubleVelocity semi(d, vec({0, 0}), U, U, ten(2, 2, 2, {0, 1, 0, 0, 0, 0, 0, 0}));
  EXPECT_TRUE(is_semiholonomic(semi));
  EXPECT_FALSE(is_holonomic(semi));
}

TEST(MakeHolonomic, ProducesExchangeFixedPoint) {
  const DoubleVelocity h = make_holonomic(vec({0, 0}), mat(2, 1, {1, 0}), ten(2, 1, 1, {0, 2}));
  EXPECT_TRUE(is_holonomic(h));
  EXPECT_EQ(distance(exchange(h), h), 0.0);

  const Tensor3 S = ten(1, 2, 2, {0, 3, 3, 0});
  EXPECT_TRUE(is_holonomic(make_holonomic(vec({0}), mat(1, 2, {1, 1}), S)));
  EXPECT_THROW(make_holonomic(vec({0}), mat(1, 2, {1, 1}), ten(1, 2, 2, {0, 3, 2, 0})), DomainError);
}

TEST(Split, SymmetricAndSkewParts) {
  const Dims d{2, 2};
  const Matrix U = Matrix::Identity(2, 2);
  const Tensor3 W = ten(2, 2, 2, {0, 1, 0, 0, 0, 0, 0, 0});
  const DoubleVelocity dv(d, vec({0, 0}), U, U, W);
  const auto [h, k] = split_semiholonomic(dv);
  EXPECT_EQ(h.W(), ten(2, 2, 2, {0, 0.5, 0.5, 0, 0, 0, 0, 0}));
  EXPECT_EQ(k.K(), ten(2, 2, 2, {0, 0.5, -0.5, 0, 0, 0, 0, 0}));
  EXPECT_EQ(k.kind(), TensorKind::alt);
  EXPECT_EQ(distance(affine_add_vertical(h, k), dv), 0.0);

  const DoubleVelocity m1(d12, vec({0, 0}), mat(2, 1, {1, 2}), mat(2, 1, {1, 2}), ten(2, 1, 1, {5, 6}));
  EXPECT_EQ(split_semiholonomic(m1).second.K().max_abs(), 0.0);
  EXPECT_THROW(split_semiholonomic(sample_m1()), DomainError);
}

TEST(Vertical, KindIsChecked) {
  const Velocity base({2, 1}, vec({0}), mat(1, 2, {1, 0}));
  EXPECT_NO_THROW(VerticalVector(base, ten(1, 2, 2, {0, 1, -1, 0}), TensorKind::alt));
  EXPECT_THROW(VerticalVector(base, ten(1, 2, 2, {0, 1, 1, 0}), TensorKind::alt), DomainError);
  EXPECT_THROW(VerticalVector(base, ten(1, 2, 2, {0, 1, 0, 0}), TensorKind::sym), DomainError);
  EXPECT_EQ(tensor_kind_from_string(to_string(TensorKind::sym)), TensorKind::sym);
}

TEST(Affine, AddIsAnActionAndChecksBase) {
  const DoubleVelocity dv = sample_m1();
  const Velocity base = inner_projection(dv);
  const VerticalVector k1(base, ten(2, 1, 1, {1, 2}));
  const VerticalVector k2(base, ten(2, 1, 1, {-3, 4}));
  EXPECT_EQ(distance(affine_add_vertical(affine_add_vertical(dv, k1), k2), affine_add_vertical(dv, k1 + k2)),
            0.0);
  EXPECT_EQ(affine_add_vertical(dv, k1).W(), ten(2, 1, 1, {6, 8}));

  const VerticalVector other(Velocity(d12, vec({1, 0}), mat(2, 1, {1, 2})), ten(2, 1, 1, {1, 2}));
  EXPECT_THROW(affine_add_vertical(dv, other), DomainError);
}

}  // namespace
}  // namespace jetcalc
