#include "jetcalc/jets.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace jetcalc {

Dims::Dims(int m_, int n_) : m(m_), n(n_) {
  if (m < 1 || n < 1) throw DimensionError("dims: m and n must be positive");
}

namespace {

void check_vector(const Vector& v, const Dims& d, const char* what) {
  if (v.size() != d.n) throw DimensionError(std::string(what) + ": base point must have n entries");
}

void check_linear(const Matrix& M, const Dims& d, const char* what) {
  if (M.rows() != d.n || M.cols() != d.m)
    throw DimensionError(std::string(what) + ": linear part must be n×m");
}

void check_mixed(const Tensor3& T, const Dims& d, const char* what) {
  if (T.dim0() != d.un() || T.dim1() != d.um() || T.dim2() != d.um())
    throw DimensionError(std::string(what) + ": mixed part must be n×m×m");
}

}  // namespace

Velocity::Velocity(Dims dims, Vector u, Matrix U) : dims_(dims), u_(std::move(u)), U_(std::move(U)) {
  check_vector(u_, dims_, "Velocity");
  check_linear(U_, dims_, "Velocity");
}

DoubleVelocity::DoubleVelocity(Dims dims, Vector u, Matrix Ui, Matrix Uo, Tensor3 W)
    : dims_(dims), u_(std::move(u)), Ui_(std::move(Ui)), Uo_(std::move(Uo)), W_(std::move(W)) {
  check_vector(u_, dims_, "DoubleVelocity");
  check_linear(Ui_, dims_, "DoubleVelocity");
  check_linear(Uo_, dims_, "DoubleVelocity");
  check_mixed(W_, dims_, "DoubleVelocity");
}

std::string_view to_string(TensorKind kind) {
  switch (kind) {
    case TensorKind::general: return "general";
    case TensorKind::sym: return "sym";
    case TensorKind::alt: return "alt";
  }
  return "general";
}

TensorKind tensor_kind_from_string(std::string_view s) {
  if (s == "general") return TensorKind::general;
  if (s == "sym") return TensorKind::sym;
  if (s == "alt") return TensorKind::alt;
  throw DomainError("unknown tensor kind '" + std::string(s) + "'");
}

bool has_kind(const Tensor3& K, TensorKind kind, double tol) {
  switch (kind) {
    case TensorKind::general: return true;
    case TensorKind::sym: return approx_equal(K, K.transposed(), tol);
    case TensorKind::alt: return approx_equal(K, -K.transposed(), tol);
  }
  return false;
}

VerticalVector::VerticalVector(Velocity base, Tensor3 K, TensorKind kind, double tol)
    : base_(std::move(base)), K_(std::move(K)), kind_(kind) {
  check_mixed(K_, base_.dims(), "VerticalVector");
  if (!has_kind(K_, kind_, tol))
    throw DomainError("VerticalVector: K does not have the declared symmetry type");
}

Velocity inner_projection(const DoubleVelocity& dv) { return {dv.dims(), dv.u(), dv.Ui()}; }

Velocity outer_projection(const DoubleVelocity& dv) { return {dv.dims(), dv.u(), dv.Uo()}; }

DoubleVelocity exchange(const DoubleVelocity& dv) {
  return {dv.dims(), dv.u(), dv.Uo(), dv.Ui(), dv.W().transposed()};
}

bool is_regular(const Velocity& v, double tol) { return numerical_rank(v.U(), tol) == v.dims().m; }

bool is_tau_regular(const DoubleVelocity& dv, double tol) {
  return numerical_rank(dv.Uo(), tol) == dv.dims().m;
}

bool is_inner_regular(const DoubleVelocity& dv, double tol) {
  return numerical_rank(dv.Ui(), tol) == dv.dims().m;
}

bool is_double_regular(const DoubleVelocity& dv, double tol) {
  const Eigen::Index n = dv.dims().n;
  const Eigen::Index m = dv.dims().m;
  Matrix stacked(n + n * m, m);
  stacked.topRows(n) = dv.Uo();
  for (Eigen::Index j = 0; j < m; ++j)
    stacked.block(n + j * n, 0, n, m) = dv.W().last_slice(static_cast<std::size_t>(j));
  return numerical_rank(stacked, tol) == m;
}

bool is_semiholonomic(const DoubleVelocity& dv, double tol) {
  return max_abs(dv.Ui() - dv.Uo()) <= tol;
}

bool is_holonomic(const DoubleVelocity& dv, double tol) {
  return is_semiholonomic(dv, tol) && (dv.W() - dv.W().transposed()).max_abs() <= tol;
}

bool is_vertical(const DoubleVelocity& dv, double tol) { return max_abs(dv.Uo()) <= tol; }

DoubleVelocity make_holonomic(const Vector& u, const Matrix& U, const Tensor3& S, double tol) {
  const Dims dims(static_cast<int>(U.cols()), static_cast<int>(U.rows()));
  check_mixed(S, dims, "make_holonomic");
  if (!has_kind(S, TensorKind::sym, tol))
    throw DomainError("make_holonomic: second-order part must be symmetric");
  return {dims, u, U, U, S};
}

std::pair<DoubleVelocity, VerticalVector> split_semiholonomic(const DoubleVelocity& dv, double tol) {
  if (!is_semiholonomic(dv, tol))
    throw DomainError("split_semiholonomic: double velocity is not semiholonomic");
  // Holonomic part keeps Ui as the shared linear part.
  DoubleVelocity h(dv.dims(), dv.u(), dv.Ui(), dv.Ui(), dv.W().sym());
  VerticalVector k(inner_projection(dv), dv.W().alt(), TensorKind::alt, tol);
  return {std::move(h), std::move(k)};
}

DoubleVelocity affine_add_vertical(const DoubleVelocity& dv, const VerticalVector& k, double tol) {
  if (!(k.dims() == dv.dims()) || distance(k.base(), inner_projection(dv)) > tol)
    throw DomainError("affine_add_vertical: vertical vector is based at a different velocity");
  return {dv.dims(), dv.u(), dv.Ui(), dv.Uo(), dv.W() + k.K()};
}

double distance(const Velocity& a, const Velocity& b) {
  if (!(a.dims() == b.dims())) return std::numeric_limits<double>::infinity();
  return std::max(max_scaled_diff(a.u(), b.u()), max_scaled_diff(a.U(), b.U()));
}

double distance(const DoubleVelocity& a, const DoubleVelocity& b) {
  if (!(a.dims() == b.dims())) return std::numeric_limits<double>::infinity();
  return std::max({max_scaled_diff(a.u(), b.u()), max_scaled_diff(a.Ui(), b.Ui()),
                   max_scaled_diff(a.Uo(), b.Uo()), max_scaled_diff(a.W(), b.W())});
}

double sup_norm_diff(const DoubleVelocity& a, const DoubleVelocity& b) {
  if (!(a.dims() == b.dims())) return std::numeric_limits<double>::infinity();
  return std::max({max_abs(a.u() - b.u()), max_abs(a.Ui() - b.Ui()), max_abs(a.Uo() - b.Uo()),
                   (a.W() - b.W()).max_abs()});
}

VerticalVector operator+(const VerticalVector& a, const VerticalVector& b) {
  if (!(a.dims() == b.dims()) || distance(a.base(), b.base()) > kDefaultTol)
    throw DomainError("VerticalVector: addition requires a common base");
  const TensorKind kind = a.kind() == b.kind() ? a.kind() : TensorKind::general;
  return {a.base(), a.K() + b.K(), kind};
}

}  // namespace jetcalc
