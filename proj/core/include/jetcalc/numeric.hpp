#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace jetcalc {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Default comparison tolerance, combined absolute/relative.
inline constexpr double kDefaultTol = 1e-9;

/// Determinant floor for group elements at construction.
inline constexpr double kDetFloor = 1e-12;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands have incompatible shapes or dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An operation's precondition does not hold for its arguments.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A matrix block that must be invertible is numerically singular.
class SingularError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// No admissible pivot set exists for a chart-based canonical form.
class ChartError : public DomainError {
 public:
  using DomainError::DomainError;
};

// ---------------------------------------------------------------------------
// Tensor3
// ---------------------------------------------------------------------------

/// Dense rank-3 array with row-major storage. Used for the mixed parts of
/// double velocities (n×m×m) and the B-block of principal jet group
/// elements (m×m×m). Entry (a, i, j) sits at a*d1*d2 + i*d2 + j.
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(std::size_t d0, std::size_t d1, std::size_t d2, double fill = 0.0)
      : d0_(d0), d1_(d1), d2_(d2), data_(d0 * d1 * d2, fill) {}

  static Tensor3 zeros(std::size_t d0, std::size_t d1, std::size_t d2) { return {d0, d1, d2}; }

  std::size_t dim0() const { return d0_; }
  std::size_t dim1() const { return d1_; }
  std::size_t dim2() const { return d2_; }
  std::size_t size() const { return data_.size(); }

  double& operator()(std::size_t a, std::size_t i, std::size_t j) {
    return data_[(a * d1_ + i) * d2_ + j];
  }
  double operator()(std::size_t a, std::size_t i, std::size_t j) const {
    return data_[(a * d1_ + i) * d2_ + j];
  }

  const std::vector<double>& data() const { return data_; }

  bool same_shape(const Tensor3& o) const { return d0_ == o.d0_ && d1_ == o.d1_ && d2_ == o.d2_; }

  /// Swaps the last two slots: result(a,i,j) = (*this)(a,j,i).
  Tensor3 transposed() const;
  /// ½(T + Tᵀ) in the last two slots.
  Tensor3 sym() const;
  /// ½(T − Tᵀ) in the last two slots.
  Tensor3 alt() const;

  /// The d1×d2 matrix at first index a.
  Matrix slab(std::size_t a) const;
  /// The d0×d1 matrix with the last index fixed to j.
  Matrix last_slice(std::size_t j) const;

  /// Keeps the listed first-index rows, in order.
  Tensor3 select_rows(const std::vector<std::size_t>& rows) const;

  double max_abs() const;

  Tensor3& operator+=(const Tensor3& o);
  Tensor3& operator-=(const Tensor3& o);
  Tensor3& operator*=(double s);

  friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
  friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
  friend Tensor3 operator*(double s, Tensor3 a) { return a *= s; }
  friend Tensor3 operator-(Tensor3 a) { return a *= -1.0; }

  friend bool operator==(const Tensor3& a, const Tensor3& b) {
    return a.same_shape(b) && a.data_ == b.data_;
  }

 private:
  std::size_t d0_ = 0, d1_ = 0, d2_ = 0;
  std::vector<double> data_;
};

/// T(a,i,j) ↦ Σ_{h,k} T(a,h,k) L(h,i) R(k,j): bilinear substitution in the two lower slots.
Tensor3 contract_lower(const Tensor3& t, const Matrix& left, const Matrix& right);

/// (M·T)(a,i,j) = Σ_h M(a,h) T(h,i,j).
Tensor3 apply_first(const Matrix& m, const Tensor3& t);

// ---------------------------------------------------------------------------
// Comparison
// ---------------------------------------------------------------------------

/// |x − y| / max(1, |x|, |y|).
double scaled_diff(double x, double y);

/// Combined absolute/relative closeness: |x − y| ≤ tol·max(1, |x|, |y|).
inline bool approx_equal(double x, double y, double tol = kDefaultTol) {
  return scaled_diff(x, y) <= tol;
}

/// Largest entrywise scaled difference; +∞ on shape mismatch.
double max_scaled_diff(const Matrix& a, const Matrix& b);
double max_scaled_diff(const Tensor3& a, const Tensor3& b);

double max_abs(const Matrix& m);

bool approx_equal(const Matrix& a, const Matrix& b, double tol = kDefaultTol);
bool approx_equal(const Tensor3& a, const Tensor3& b, double tol = kDefaultTol);

// ---------------------------------------------------------------------------
// Linear algebra helpers
// ---------------------------------------------------------------------------

/// Numerical rank. Integer-valued matrices of small size are ranked exactly
/// by fraction-free elimination; everything else by singular values against
/// the threshold tol·max(1, σ_max).
int numerical_rank(const Matrix& m, double tol = kDefaultTol);

/// Inverse of a square matrix; throws SingularError when |det| ≤ det_floor.
Matrix checked_inverse(const Matrix& m, double det_floor = kDetFloor);

using WideMatrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;

/// checked_inverse without the final rounding to double.
WideMatrix checked_inverse_wide(const Matrix& m, double det_floor = kDetFloor);

/// Reduced column-echelon basis of the column space of `m` (n×k, rank k):
/// the pivot rows carry the identity pattern. Throws DomainError on rank
/// deficiency.
struct Echelon {
  Matrix basis;
  std::vector<std::size_t> pivots;
};
Echelon column_echelon(const Matrix& m, double tol = kDefaultTol);

/// The rows of `m` listed in `rows`, in order.
Matrix select_rows(const Matrix& m, const std::vector<std::size_t>& rows);

/// Row indices 0..n-1 not contained in the (sorted) pivot list.
std::vector<std::size_t> complement(std::size_t n, const std::vector<std::size_t>& pivots);

/// Lexicographically smallest m-subset I of row indices such that every
/// block in `blocks` has |det(block_I)| > tol·Π‖row‖ over the chosen rows.
std::optional<std::vector<std::size_t>> first_admissible_pivots(
    const std::vector<const Matrix*>& blocks, double tol = kDefaultTol);

/// Whether `rows` is admissible for every block in the sense above.
bool pivots_admissible(const std::vector<const Matrix*>& blocks,
                       const std::vector<std::size_t>& rows, double tol = kDefaultTol);

}  // namespace jetcalc
