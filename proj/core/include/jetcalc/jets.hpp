#pragma once

// Velocities and double velocities of maps ℝᵐ → E = ℝⁿ in a single global
// chart.
//
// Index convention, used throughout the library: the mixed part of a double
// velocity is W(a, i, j) = u^a_{ij} with i the inner (s) slot and j the outer
// (t) slot. Ui holds the s-derivatives u^a_i and Uo the t-derivatives
// u^a_{·j}. The exchange map transposes (i, j) and swaps Ui with Uo.

#include "jetcalc/numeric.hpp"

#include <string_view>
#include <utility>

namespace jetcalc {

struct Dims {
  int m = 1;  ///< source dimension
  int n = 1;  ///< target dimension

  Dims() = default;
  Dims(int m_, int n_);

  std::size_t um() const { return static_cast<std::size_t>(m); }
  std::size_t un() const { return static_cast<std::size_t>(n); }

  friend bool operator==(const Dims&, const Dims&) = default;
};

/// A first-order m-velocity: base point u and linear part U (n×m).
class Velocity {
 public:
  Velocity(Dims dims, Vector u, Matrix U);

  const Dims& dims() const { return dims_; }
  const Vector& u() const { return u_; }
  const Matrix& U() const { return U_; }

 private:
  Dims dims_;
  Vector u_;
  Matrix U_;
};

/// A double velocity (u, Ui, Uo, W); no algebraic constraint between parts.
class DoubleVelocity {
 public:
  DoubleVelocity(Dims dims, Vector u, Matrix Ui, Matrix Uo, Tensor3 W);

  const Dims& dims() const { return dims_; }
  const Vector& u() const { return u_; }
  const Matrix& Ui() const { return Ui_; }
  const Matrix& Uo() const { return Uo_; }
  const Tensor3& W() const { return W_; }

 private:
  Dims dims_;
  Vector u_;
  Matrix Ui_;
  Matrix Uo_;
  Tensor3 W_;
};

enum class TensorKind { general, sym, alt };

std::string_view to_string(TensorKind kind);
TensorKind tensor_kind_from_string(std::string_view s);

/// Whether K(a,i,j) = K(a,j,i) (sym) or −K(a,j,i) (alt) within tol.
bool has_kind(const Tensor3& K, TensorKind kind, double tol = kDefaultTol);

/// A fibre element K (n×m×m) of the vertical bundle over `base`.
class VerticalVector {
 public:
  VerticalVector(Velocity base, Tensor3 K, TensorKind kind = TensorKind::general,
                 double tol = kDefaultTol);

  const Dims& dims() const { return base_.dims(); }
  const Velocity& base() const { return base_; }
  const Tensor3& K() const { return K_; }
  TensorKind kind() const { return kind_; }

 private:
  Velocity base_;
  Tensor3 K_;
  TensorKind kind_;
};

// --- projections and exchange ----------------------------------------------

Velocity inner_projection(const DoubleVelocity& dv);
Velocity outer_projection(const DoubleVelocity& dv);
DoubleVelocity exchange(const DoubleVelocity& dv);

// --- regularity ------------------------------------------------------------

bool is_regular(const Velocity& v, double tol = kDefaultTol);
bool is_tau_regular(const DoubleVelocity& dv, double tol = kDefaultTol);
bool is_inner_regular(const DoubleVelocity& dv, double tol = kDefaultTol);

/// Rank test on Uo stacked over the slices W(·,·,j); see is_tau_regular for
/// the weaker-looking but stronger condition used by the group actions.
bool is_double_regular(const DoubleVelocity& dv, double tol = kDefaultTol);

// --- (semi)holonomic structure ---------------------------------------------

bool is_semiholonomic(const DoubleVelocity& dv, double tol = kDefaultTol);
bool is_holonomic(const DoubleVelocity& dv, double tol = kDefaultTol);
bool is_vertical(const DoubleVelocity& dv, double tol = kDefaultTol);

/// The second-order velocity (u, U, S) viewed as a holonomic double velocity.
DoubleVelocity make_holonomic(const Vector& u, const Matrix& U, const Tensor3& S,
                              double tol = kDefaultTol);

/// Holonomic part and skew curvature part of a semiholonomic double velocity.
std::pair<DoubleVelocity, VerticalVector> split_semiholonomic(const DoubleVelocity& dv,
                                                              double tol = kDefaultTol);

/// Affine action of the vertical bundle: W ↦ W + K.
DoubleVelocity affine_add_vertical(const DoubleVelocity& dv, const VerticalVector& k,
                                   double tol = kDefaultTol);

/// Entrywise scaled distance over all coordinates; +∞ on dimension mismatch.
double distance(const Velocity& a, const Velocity& b);
double distance(const DoubleVelocity& a, const DoubleVelocity& b);

/// Largest absolute coordinate difference; +∞ on dimension mismatch.
double sup_norm_diff(const DoubleVelocity& a, const DoubleVelocity& b);

VerticalVector operator+(const VerticalVector& a, const VerticalVector& b);

}  // namespace jetcalc
