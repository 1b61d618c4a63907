#include "jetcalc/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace jetcalc {

// ---------------------------------------------------------------------------
// Tensor3
// ---------------------------------------------------------------------------

Tensor3 Tensor3::transposed() const {
  Tensor3 out(d0_, d2_, d1_);
  for (std::size_t a = 0; a < d0_; ++a)
    for (std::size_t i = 0; i < d1_; ++i)
      for (std::size_t j = 0; j < d2_; ++j) out(a, j, i) = (*this)(a, i, j);
  return out;
}

Tensor3 Tensor3::sym() const {
  if (d1_ != d2_) throw DimensionError("sym: lower slots must have equal extent");
  Tensor3 out(d0_, d1_, d2_);
  for (std::size_t a = 0; a < d0_; ++a)
    for (std::size_t i = 0; i < d1_; ++i)
      for (std::size_t j = 0; j < d2_; ++j)
        out(a, i, j) = 0.5 * ((*this)(a, i, j) + (*this)(a, j, i));
  return out;
}

Tensor3 Tensor3::alt() const {
  if (d1_ != d2_) throw DimensionError("alt: lower slots must have equal extent");
  Tensor3 out(d0_, d1_, d2_);
  for (std::size_t a = 0; a < d0_; ++a)
    for (std::size_t i = 0; i < d1_; ++i)
      for (std::size_t j = 0; j < d2_; ++j)
        out(a, i, j) = 0.5 * ((*this)(a, i, j) - (*this)(a, j, i));
  return out;
}

Matrix Tensor3::slab(std::size_t a) const {
  Matrix out(d1_, d2_);
  for (std::size_t i = 0; i < d1_; ++i)
    for (std::size_t j = 0; j < d2_; ++j) out(i, j) = (*this)(a, i, j);
  return out;
}

Matrix Tensor3::last_slice(std::size_t j) const {
  Matrix out(d0_, d1_);
  for (std::size_t a = 0; a < d0_; ++a)
    for (std::size_t i = 0; i < d1_; ++i) out(a, i) = (*this)(a, i, j);
  return out;
}

Tensor3 Tensor3::select_rows(const std::vector<std::size_t>& rows) const {
  Tensor3 out(rows.size(), d1_, d2_);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r] >= d0_) throw DimensionError("select_rows: index out of range");
    for (std::size_t i = 0; i < d1_; ++i)
      for (std::size_t j = 0; j < d2_; ++j) out(r, i, j) = (*this)(rows[r], i, j);
  }
  return out;
}

double Tensor3::max_abs() const {
  double best = 0.0;
  for (double x : data_) best = std::max(best, std::abs(x));
  return best;
}

Tensor3& Tensor3::operator+=(const Tensor3& o) {
  if (!same_shape(o)) throw DimensionError("Tensor3: shape mismatch in +");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& o) {
  if (!same_shape(o)) throw DimensionError("Tensor3: shape mismatch in -");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Tensor3& Tensor3::operator*=(double s) {
  for (double& x : data_) x *= s;
  return *this;
}

Tensor3 contract_lower(const Tensor3& t, const Matrix& left, const Matrix& right) {
  if (static_cast<std::size_t>(left.rows()) != t.dim1() ||
      static_cast<std::size_t>(right.rows()) != t.dim2())
    throw DimensionError("contract_lower: shape mismatch");
  const auto p = static_cast<std::size_t>(left.cols());
  const auto q = static_cast<std::size_t>(right.cols());
  Tensor3 out(t.dim0(), p, q);
  for (std::size_t a = 0; a < t.dim0(); ++a)
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < q; ++j) {
        long double acc = 0.0L;
        for (std::size_t h = 0; h < t.dim1(); ++h)
          for (std::size_t k = 0; k < t.dim2(); ++k)
            acc += static_cast<long double>(t(a, h, k)) * left(h, i) * right(k, j);
        out(a, i, j) = static_cast<double>(acc);
      }
  return out;
}

Tensor3 apply_first(const Matrix& m, const Tensor3& t) {
  if (static_cast<std::size_t>(m.cols()) != t.dim0())
    throw DimensionError("apply_first: shape mismatch");
  const auto rows = static_cast<std::size_t>(m.rows());
  Tensor3 out(rows, t.dim1(), t.dim2());
  for (std::size_t a = 0; a < rows; ++a)
    for (std::size_t i = 0; i < t.dim1(); ++i)
      for (std::size_t j = 0; j < t.dim2(); ++j) {
        long double acc = 0.0L;
        for (std::size_t h = 0; h < t.dim0(); ++h) acc += static_cast<long double>(m(a, h)) * t(h, i, j);
        out(a, i, j) = static_cast<double>(acc);
      }
  return out;
}

// ---------------------------------------------------------------------------
// Comparison
// ---------------------------------------------------------------------------

double scaled_diff(double x, double y) {
  const double scale = std::max({1.0, std::abs(x), std::abs(y)});
  return std::abs(x - y) / scale;
}

double max_scaled_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return std::numeric_limits<double>::infinity();
  double best = 0.0;
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c) best = std::max(best, scaled_diff(a(r, c), b(r, c)));
  return best;
}

double max_scaled_diff(const Tensor3& a, const Tensor3& b) {
  if (!a.same_shape(b)) return std::numeric_limits<double>::infinity();
  double best = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k)
    best = std::max(best, scaled_diff(a.data()[k], b.data()[k]));
  return best;
}

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

bool approx_equal(const Matrix& a, const Matrix& b, double tol) {
  return max_scaled_diff(a, b) <= tol;
}

bool approx_equal(const Tensor3& a, const Tensor3& b, double tol) {
  return max_scaled_diff(a, b) <= tol;
}

// ---------------------------------------------------------------------------
// Rank
// ---------------------------------------------------------------------------

namespace {

constexpr double kExactEntryLimit = 4096.0;
constexpr Eigen::Index kExactDimLimit = 4;

bool small_integer_valued(const Matrix& m) {
  if (std::min(m.rows(), m.cols()) > kExactDimLimit) return false;
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const double x = m(r, c);
      if (!(std::abs(x) <= kExactEntryLimit) || x != std::round(x)) return false;
    }
  return true;
}

// Fraction-free (Bareiss) elimination; every intermediate is a minor of the
// input, so the divisions are exact.
int exact_rank(const Matrix& m) {
  __extension__ typedef __int128 Int;
  const auto rows = static_cast<std::size_t>(m.rows());
  const auto cols = static_cast<std::size_t>(m.cols());
  std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = static_cast<Int>(std::llround(m(r, c)));

  Int prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k)
        a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / prev;
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return static_cast<int>(rank);
}

}  // namespace

int numerical_rank(const Matrix& m, double tol) {
  if (m.size() == 0) return 0;
  if (small_integer_valued(m)) return exact_rank(m);
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& sv = svd.singularValues();
  const double threshold = tol * std::max(1.0, sv(0));
  int rank = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k)
    if (sv(k) > threshold) ++rank;
  return rank;
}

WideMatrix checked_inverse_wide(const Matrix& m, double det_floor) {
  if (m.rows() != m.cols()) throw DimensionError("inverse: matrix is not square");
  // Pivot blocks are small, so extended precision costs nothing.
  Eigen::FullPivLU<WideMatrix> lu(m.cast<long double>());
  if (!(std::abs(static_cast<double>(lu.determinant())) > det_floor))
    throw SingularError("inverse: matrix is singular");
  return lu.inverse();
}

Matrix checked_inverse(const Matrix& m, double det_floor) {
  return checked_inverse_wide(m, det_floor).cast<double>();
}

// ---------------------------------------------------------------------------
// Echelon forms and pivots
// ---------------------------------------------------------------------------

Echelon column_echelon(const Matrix& m, double tol) {
  // Gauss-Jordan on the transpose; pivot columns of mᵀ are pivot rows of m.
  Matrix r = m.transpose();
  const Eigen::Index k = r.rows();
  const Eigen::Index n = r.cols();
  const double zero = tol * std::max(1.0, max_abs(m));
  std::vector<std::size_t> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index c = 0; c < n && row < k; ++c) {
    Eigen::Index best = row;
    for (Eigen::Index q = row + 1; q < k; ++q)
      if (std::abs(r(q, c)) > std::abs(r(best, c))) best = q;
    if (std::abs(r(best, c)) <= zero) continue;
    r.row(row).swap(r.row(best));
    r.row(row) /= r(row, c);
    for (Eigen::Index q = 0; q < k; ++q)
      if (q != row && r(q, c) != 0.0) r.row(q) -= r(q, c) * r.row(row);
    for (Eigen::Index q = 0; q < k; ++q) r(q, c) = (q == row) ? 1.0 : 0.0;
    pivots.push_back(static_cast<std::size_t>(c));
    ++row;
  }
  if (row < k) throw DomainError("column_echelon: matrix does not have full column rank");
  return {r.transpose(), std::move(pivots)};
}

Matrix select_rows(const Matrix& m, const std::vector<std::size_t>& rows) {
  Matrix out(static_cast<Eigen::Index>(rows.size()), m.cols());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (rows[k] >= static_cast<std::size_t>(m.rows()))
      throw DimensionError("select_rows: index out of range");
    out.row(static_cast<Eigen::Index>(k)) = m.row(static_cast<Eigen::Index>(rows[k]));
  }
  return out;
}

std::vector<std::size_t> complement(std::size_t n, const std::vector<std::size_t>& pivots) {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < n; ++a)
    if (std::find(pivots.begin(), pivots.end(), a) == pivots.end()) out.push_back(a);
  return out;
}

bool pivots_admissible(const std::vector<const Matrix*>& blocks,
                       const std::vector<std::size_t>& rows, double tol) {
  for (const Matrix* b : blocks) {
    if (static_cast<std::size_t>(b->cols()) != rows.size()) return false;
    const Matrix sub = select_rows(*b, rows);
    double scale = 1.0;
    for (Eigen::Index r = 0; r < sub.rows(); ++r) scale *= sub.row(r).norm();
    if (!(std::abs(sub.determinant()) > tol * scale) || scale == 0.0) return false;
  }
  return true;
}

std::optional<std::vector<std::size_t>> first_admissible_pivots(
    const std::vector<const Matrix*>& blocks, double tol) {
  if (blocks.empty()) return std::nullopt;
  const auto n = static_cast<std::size_t>(blocks.front()->rows());
  const auto m = static_cast<std::size_t>(blocks.front()->cols());
  if (m == 0 || m > n) return std::nullopt;
  std::vector<std::size_t> idx(m);
  for (std::size_t k = 0; k < m; ++k) idx[k] = k;
  while (true) {
    if (pivots_admissible(blocks, idx, tol)) return idx;
    // next combination in lexicographic order
    std::size_t k = m;
    while (k > 0 && idx[k - 1] == n - m + (k - 1)) --k;
    if (k == 0) return std::nullopt;
    ++idx[k - 1];
    for (std::size_t q = k; q < m; ++q) idx[q] = idx[q - 1] + 1;
  }
}

}  // namespace jetcalc
