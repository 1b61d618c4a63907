#pragma once

// Deterministic random values with small integer coordinates.
//
// Coordinates are drawn uniformly from [−5, 5]; invertible blocks are
// re-drawn until |det| ≥ 1. A sampler can be keyed by (seed, stream name,
// index) so that every verification trial owns an independent stream and
// results do not depend on execution order.

#include "jetcalc/groups.hpp"
#include "jetcalc/jets.hpp"
#include "jetcalc/oracle.hpp"

#include <cstdint>
#include <random>
#include <string_view>

namespace jetcalc {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed);
  Sampler(std::uint64_t seed, std::string_view stream, std::uint64_t index);

  static constexpr int kLow = -5;
  static constexpr int kHigh = 5;

  int integer(int lo, int hi);
  double coordinate() { return integer(kLow, kHigh); }
  bool coin() { return integer(0, 1) == 1; }

  Vector vector(int n);
  Matrix matrix(int rows, int cols);
  Tensor3 tensor(int d0, int d1, int d2);
  Tensor3 symmetric_tensor(int n, int m);
  /// Skew in the lower slots, integer-valued.
  Tensor3 skew_tensor(int n, int m);

  Matrix invertible(int m);
  /// n×m of rank m (requires m ≤ n).
  Matrix full_rank(int n, int m);

  JetGroupElement jet_group(int m);
  PrincipalJetElement principal(int m);
  PrincipalJetElement semiholonomic_principal(int m);
  PrincipalJetElement holonomic_principal(int m);
  PrincipalJetElement curvature_principal(int m);
  SecondOrderJetElement second_order(int m);

  Velocity velocity(const Dims& d);
  /// Unconstrained double velocity with full-rank Ui and Uo.
  DoubleVelocity double_velocity(const Dims& d);
  DoubleVelocity semiholonomic(const Dims& d);
  DoubleVelocity holonomic(const Dims& d);
  /// Uo = 0, Ui of full rank.
  DoubleVelocity vertical(const Dims& d);
  /// Ui and Uo both invertible on some common pivot set (m < n).
  DoubleVelocity chart_admissible(const Dims& d);

  oracle::PolyMap poly_map(int m, int n, bool fix_origin = false);
  oracle::BiPolyMap bipoly_map(int m, int n);

 private:
  std::mt19937_64 rng_;
};

}  // namespace jetcalc
