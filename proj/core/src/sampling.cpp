#include "jetcalc/sampling.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace jetcalc {

namespace {

constexpr int kMaxDraws = 10000;

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::seed_seq make_seq(std::initializer_list<std::uint64_t> words) {
  std::vector<std::uint32_t> parts;
  for (std::uint64_t w : words) {
    parts.push_back(static_cast<std::uint32_t>(w & 0xffffffffULL));
    parts.push_back(static_cast<std::uint32_t>(w >> 32));
  }
  return std::seed_seq(parts.begin(), parts.end());
}

[[noreturn]] void exhausted(const char* what) {
  throw std::runtime_error(std::string("sampler: could not draw ") + what);
}

}  // namespace

Sampler::Sampler(std::uint64_t seed) {
  auto seq = make_seq({seed});
  rng_.seed(seq);
}

Sampler::Sampler(std::uint64_t seed, std::string_view stream, std::uint64_t index) {
  auto seq = make_seq({seed, fnv1a(stream), index});
  rng_.seed(seq);
}

int Sampler::integer(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(rng_() % span);
}

Vector Sampler::vector(int n) {
  Vector v(n);
  for (int k = 0; k < n; ++k) v(k) = coordinate();
  return v;
}

Matrix Sampler::matrix(int rows, int cols) {
  Matrix M(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) M(r, c) = coordinate();
  return M;
}

Tensor3 Sampler::tensor(int d0, int d1, int d2) {
  Tensor3 T(static_cast<std::size_t>(d0), static_cast<std::size_t>(d1), static_cast<std::size_t>(d2));
  for (std::size_t a = 0; a < T.dim0(); ++a)
    for (std::size_t i = 0; i < T.dim1(); ++i)
      for (std::size_t j = 0; j < T.dim2(); ++j) T(a, i, j) = coordinate();
  return T;
}

Tensor3 Sampler::symmetric_tensor(int n, int m) {
  Tensor3 T(static_cast<std::size_t>(n), static_cast<std::size_t>(m), static_cast<std::size_t>(m));
  for (std::size_t a = 0; a < T.dim0(); ++a)
    for (std::size_t i = 0; i < T.dim1(); ++i)
      for (std::size_t j = i; j < T.dim2(); ++j) T(a, i, j) = T(a, j, i) = coordinate();
  return T;
}

Tensor3 Sampler::skew_tensor(int n, int m) {
  Tensor3 T(static_cast<std::size_t>(n), static_cast<std::size_t>(m), static_cast<std::size_t>(m));
  for (std::size_t a = 0; a < T.dim0(); ++a)
    for (std::size_t i = 0; i < T.dim1(); ++i)
      for (std::size_t j = i + 1; j < T.dim2(); ++j) {
        T(a, i, j) = coordinate();
        T(a, j, i) = -T(a, i, j);
      }
  return T;
}

Matrix Sampler::invertible(int m) {
  for (int k = 0; k < kMaxDraws; ++k) {
    Matrix A = matrix(m, m);
    if (std::abs(A.determinant()) >= 0.5) return A;  // integer determinant, so ≥ 1
  }
  exhausted("an invertible matrix");
}

Matrix Sampler::full_rank(int n, int m) {
  for (int k = 0; k < kMaxDraws; ++k) {
    Matrix M = matrix(n, m);
    if (numerical_rank(M) == m) return M;
  }
  exhausted("a full-rank matrix");
}

JetGroupElement Sampler::jet_group(int m) { return JetGroupElement(invertible(m)); }

PrincipalJetElement Sampler::principal(int m) {
  Matrix Aphi = invertible(m);
  Matrix Asigma = invertible(m);
  return {std::move(Aphi), std::move(Asigma), tensor(m, m, m)};
}

PrincipalJetElement Sampler::semiholonomic_principal(int m) {
  const Matrix A = invertible(m);
  return {A, A, tensor(m, m, m)};
}

PrincipalJetElement Sampler::holonomic_principal(int m) {
  const Matrix A = invertible(m);
  return {A, A, symmetric_tensor(m, m)};
}

PrincipalJetElement Sampler::curvature_principal(int m) {
  const Matrix A = invertible(m);
  return {A, A, skew_tensor(m, m)};
}

SecondOrderJetElement Sampler::second_order(int m) { return {invertible(m), symmetric_tensor(m, m)}; }

Velocity Sampler::velocity(const Dims& d) {
  Vector u = vector(d.n);
  Matrix U = d.m <= d.n ? full_rank(d.n, d.m) : matrix(d.n, d.m);
  return {d, std::move(u), std::move(U)};
}

DoubleVelocity Sampler::double_velocity(const Dims& d) {
  Vector u = vector(d.n);
  Matrix Ui = d.m <= d.n ? full_rank(d.n, d.m) : matrix(d.n, d.m);
  Matrix Uo = d.m <= d.n ? full_rank(d.n, d.m) : matrix(d.n, d.m);
  return {d, std::move(u), std::move(Ui), std::move(Uo), tensor(d.n, d.m, d.m)};
}

DoubleVelocity Sampler::semiholonomic(const Dims& d) {
  Vector u = vector(d.n);
  const Matrix U = d.m <= d.n ? full_rank(d.n, d.m) : matrix(d.n, d.m);
  return {d, std::move(u), U, U, tensor(d.n, d.m, d.m)};
}

DoubleVelocity Sampler::holonomic(const Dims& d) {
  Vector u = vector(d.n);
  const Matrix U = d.m <= d.n ? full_rank(d.n, d.m) : matrix(d.n, d.m);
  return {d, std::move(u), U, U, symmetric_tensor(d.n, d.m)};
}

DoubleVelocity Sampler::vertical(const Dims& d) {
  Vector u = vector(d.n);
  Matrix Ui = d.m <= d.n ? full_rank(d.n, d.m) : matrix(d.n, d.m);
  return {d, std::move(u), std::move(Ui), Matrix::Zero(d.n, d.m), tensor(d.n, d.m, d.m)};
}

DoubleVelocity Sampler::chart_admissible(const Dims& d) {
  for (int k = 0; k < kMaxDraws; ++k) {
    DoubleVelocity dv = double_velocity(d);
    if (first_admissible_pivots({&dv.Ui(), &dv.Uo()})) return dv;
  }
  exhausted("a chart-admissible double velocity");
}

oracle::PolyMap Sampler::poly_map(int m, int n, bool fix_origin) {
  Vector c0 = fix_origin ? Vector(Vector::Zero(n)) : vector(n);
  Matrix c1 = matrix(n, m);
  return {std::move(c0), std::move(c1), symmetric_tensor(n, m)};
}

oracle::BiPolyMap Sampler::bipoly_map(int m, int n) {
  Vector c0 = vector(n);
  Matrix Ps = matrix(n, m);
  Matrix Pt = matrix(n, m);
  return {std::move(c0), std::move(Ps), std::move(Pt), tensor(n, m, m)};
}

}  // namespace jetcalc
