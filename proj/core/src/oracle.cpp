#include "jetcalc/oracle.hpp"

#include <cmath>
#include <numeric>

namespace jetcalc::oracle {

// ---------------------------------------------------------------------------
// Polynomial
// ---------------------------------------------------------------------------

Polynomial Polynomial::constant(std::size_t vars, Truncation trunc, double c) {
  Polynomial p(vars, trunc);
  if (c != 0.0) p.terms_[Exponents(vars, 0)] = c;
  return p;
}

Polynomial Polynomial::variable(std::size_t vars, Truncation trunc, std::size_t k) {
  Polynomial p(vars, trunc);
  Exponents e(vars, 0);
  e.at(k) = 1;
  p.terms_[e] = 1.0;
  return p;
}

bool Polynomial::keep(const Exponents& e) const {
  if (trunc_ == Truncation::total_degree_2) return std::accumulate(e.begin(), e.end(), 0) <= 2;
  const std::size_t half = vars_ / 2;
  const int s_deg = std::accumulate(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(half), 0);
  const int t_deg = std::accumulate(e.begin() + static_cast<std::ptrdiff_t>(half), e.end(), 0);
  return s_deg <= 1 && t_deg <= 1;
}

double Polynomial::coefficient(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? 0.0 : it->second;
}

double Polynomial::constant_term() const { return coefficient(Exponents(vars_, 0)); }

double Polynomial::linear(std::size_t k) const {
  Exponents e(vars_, 0);
  e.at(k) = 1;
  return coefficient(e);
}

double Polynomial::quadratic(std::size_t k, std::size_t l) const {
  Exponents e(vars_, 0);
  e.at(k) += 1;
  e.at(l) += 1;
  return coefficient(e);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.vars_ != vars_ || o.trunc_ != trunc_) throw DimensionError("Polynomial: ring mismatch");
  for (const auto& [e, c] : o.terms_) terms_[e] += c;
  return *this;
}

Polynomial& Polynomial::operator*=(double s) {
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.vars_ != b.vars_ || a.trunc_ != b.trunc_) throw DimensionError("Polynomial: ring mismatch");
  Polynomial out(a.vars_, a.trunc_);
  Polynomial::Exponents e(a.vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = static_cast<std::uint8_t>(ea[k] + eb[k]);
      if (out.keep(e)) out.terms_[e] += ca * cb;
    }
  return out;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& values) const {
  if (values.size() != vars_) throw DimensionError("Polynomial::substitute: wrong number of values");
  if (values.empty()) return *this;
  Polynomial out(values.front().vars_, values.front().trunc_);
  for (const auto& [e, c] : terms_) {
    Polynomial term = constant(out.vars_, out.trunc_, c);
    for (std::size_t k = 0; k < vars_; ++k)
      for (std::uint8_t p = 0; p < e[k]; ++p) term = term * values[k];
    out += term;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Maps
// ---------------------------------------------------------------------------

PolyMap::PolyMap(Vector c0_, Matrix c1_, Tensor3 c2_, double tol)
    : m(static_cast<int>(c1_.cols())), n(static_cast<int>(c1_.rows())),
      c0(std::move(c0_)), c1(std::move(c1_)), c2(std::move(c2_)) {
  const Dims d(m, n);
  if (c0.size() != n || c2.dim0() != d.un() || c2.dim1() != d.um() || c2.dim2() != d.um())
    throw DimensionError("PolyMap: shape mismatch");
  if (!has_kind(c2, TensorKind::sym, tol)) throw DomainError("PolyMap: c2 must be symmetric");
}

BiPolyMap::BiPolyMap(Vector c0_, Matrix Ps_, Matrix Pt_, Tensor3 Pst_)
    : m(static_cast<int>(Ps_.cols())), n(static_cast<int>(Ps_.rows())),
      c0(std::move(c0_)), Ps(std::move(Ps_)), Pt(std::move(Pt_)), Pst(std::move(Pst_)) {
  const Dims d(m, n);
  if (c0.size() != n || Pt.rows() != n || Pt.cols() != m || Pst.dim0() != d.un() ||
      Pst.dim1() != d.um() || Pst.dim2() != d.um())
    throw DimensionError("BiPolyMap: shape mismatch");
}

BiPolyMap translation(int m) {
  const auto um = static_cast<std::size_t>(m);
  return {Vector::Zero(m), Matrix::Identity(m, m), Matrix::Identity(m, m), Tensor3::zeros(um, um, um)};
}

std::vector<Polynomial> evaluate(const PolyMap& f, const std::vector<Polynomial>& x) {
  if (x.size() != static_cast<std::size_t>(f.m)) throw DimensionError("evaluate: wrong input count");
  std::vector<Polynomial> out;
  out.reserve(static_cast<std::size_t>(f.n));
  for (int a = 0; a < f.n; ++a) {
    const auto ua = static_cast<std::size_t>(a);
    Polynomial acc = x.front().constant_like(f.c0(a));
    for (int i = 0; i < f.m; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      acc += f.c1(a, i) * x[ui];
      for (int j = 0; j < f.m; ++j) {
        const auto uj = static_cast<std::size_t>(j);
        if (f.c2(ua, ui, uj) != 0.0) acc += (0.5 * f.c2(ua, ui, uj)) * (x[ui] * x[uj]);
      }
    }
    out.push_back(std::move(acc));
  }
  return out;
}

std::vector<Polynomial> evaluate(const BiPolyMap& f, const std::vector<Polynomial>& s,
                                 const std::vector<Polynomial>& t) {
  if (s.size() != static_cast<std::size_t>(f.m) || t.size() != s.size())
    throw DimensionError("evaluate: wrong input count");
  std::vector<Polynomial> out;
  out.reserve(static_cast<std::size_t>(f.n));
  for (int a = 0; a < f.n; ++a) {
    const auto ua = static_cast<std::size_t>(a);
    Polynomial acc = s.front().constant_like(f.c0(a));
    for (int i = 0; i < f.m; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      acc += f.Ps(a, i) * s[ui];
      acc += f.Pt(a, i) * t[ui];
      for (int j = 0; j < f.m; ++j) {
        const auto uj = static_cast<std::size_t>(j);
        if (f.Pst(ua, ui, uj) != 0.0) acc += f.Pst(ua, ui, uj) * (s[ui] * t[uj]);
      }
    }
    out.push_back(std::move(acc));
  }
  return out;
}

namespace {

std::vector<Polynomial> variables(std::size_t count, std::size_t offset, std::size_t vars, Truncation trunc) {
  std::vector<Polynomial> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(Polynomial::variable(vars, trunc, offset + k));
  return out;
}

// Reads a degree-2 self-contained map from polynomials in m variables.
PolyMap read_polymap(const std::vector<Polynomial>& comps, int m) {
  const auto um = static_cast<std::size_t>(m);
  const auto n = static_cast<int>(comps.size());
  Vector c0(n);
  Matrix c1(n, m);
  Tensor3 c2(comps.size(), um, um);
  for (std::size_t a = 0; a < comps.size(); ++a) {
    const auto ia = static_cast<Eigen::Index>(a);
    c0(ia) = comps[a].constant_term();
    for (std::size_t i = 0; i < um; ++i) {
      c1(ia, static_cast<Eigen::Index>(i)) = comps[a].linear(i);
      for (std::size_t j = 0; j < um; ++j)
        c2(a, i, j) = (i == j) ? 2.0 * comps[a].quadratic(i, i) : comps[a].quadratic(i, j);
    }
  }
  return {std::move(c0), std::move(c1), std::move(c2)};
}

// Reads a bidegree-(1,1) map from polynomials in variables (s_1..s_m, t_1..t_m).
BiPolyMap read_bipoly(const std::vector<Polynomial>& comps, int m) {
  const auto um = static_cast<std::size_t>(m);
  const auto n = static_cast<int>(comps.size());
  Vector c0(n);
  Matrix Ps(n, m), Pt(n, m);
  Tensor3 Pst(comps.size(), um, um);
  for (std::size_t a = 0; a < comps.size(); ++a) {
    const auto ia = static_cast<Eigen::Index>(a);
    c0(ia) = comps[a].constant_term();
    for (std::size_t i = 0; i < um; ++i) {
      Ps(ia, static_cast<Eigen::Index>(i)) = comps[a].linear(i);
      Pt(ia, static_cast<Eigen::Index>(i)) = comps[a].linear(um + i);
      for (std::size_t j = 0; j < um; ++j) Pst(a, i, j) = comps[a].quadratic(i, um + j);
    }
  }
  return {std::move(c0), std::move(Ps), std::move(Pt), std::move(Pst)};
}

}  // namespace

Velocity jet_of(const PolyMap& f) {
  const auto um = static_cast<std::size_t>(f.m);
  const PolyMap read = read_polymap(evaluate(f, variables(um, 0, um, Truncation::total_degree_2)), f.m);
  return {Dims(f.m, f.n), read.c0, read.c1};
}

DoubleVelocity double_jet_of(const BiPolyMap& x) {
  const auto um = static_cast<std::size_t>(x.m);
  const auto s = variables(um, 0, 2 * um, Truncation::bidegree_1_1);
  const auto t = variables(um, um, 2 * um, Truncation::bidegree_1_1);
  const BiPolyMap read = read_bipoly(evaluate(x, s, t), x.m);
  return {Dims(x.m, x.n), read.c0, read.Ps, read.Pt, read.Pst};
}

BiPolyMap to_bipoly(const DoubleVelocity& dv) { return {dv.u(), dv.Ui(), dv.Uo(), dv.W()}; }

PolyMap compose(const PolyMap& f, const PolyMap& g) {
  if (g.n != f.m) throw DimensionError("compose: inner map lands in the wrong dimension");
  const auto uk = static_cast<std::size_t>(g.m);
  const auto inner = evaluate(g, variables(uk, 0, uk, Truncation::total_degree_2));
  return read_polymap(evaluate(f, inner), g.m);
}

PolyMap compose_second_order(const PolyMap& f1, const PolyMap& f2) {
  if (f1.m != f1.n || f2.m != f2.n || f1.m != f2.m)
    throw DimensionError("compose_second_order: maps must be self-maps of the same ℝᵐ");
  if (max_abs(f1.c0) != 0.0 || max_abs(f2.c0) != 0.0)
    throw DomainError("compose_second_order: maps must fix the origin");
  return compose(f1, f2);
}

DoubleVelocity prolong(const PolyMap& g) {
  const auto um = static_cast<std::size_t>(g.m);
  const auto s = variables(um, 0, 2 * um, Truncation::bidegree_1_1);
  const auto t = variables(um, um, 2 * um, Truncation::bidegree_1_1);
  std::vector<Polynomial> shifted;
  for (std::size_t i = 0; i < um; ++i) shifted.push_back(s[i] + t[i]);
  const BiPolyMap read = read_bipoly(evaluate(g, shifted), g.m);
  return {Dims(g.m, g.n), read.c0, read.Ps, read.Pt, read.Pst};
}

BiPolyMap swap_arguments(const BiPolyMap& x) {
  const auto um = static_cast<std::size_t>(x.m);
  const auto s = variables(um, 0, 2 * um, Truncation::bidegree_1_1);
  const auto t = variables(um, um, 2 * um, Truncation::bidegree_1_1);
  return read_bipoly(evaluate(x, t, s), x.m);
}

BiPolyMap act_oracle(const BiPolyMap& xE, const PrincipalJetElement& p) {
  if (p.m() != xE.m) throw DimensionError("act_oracle: dimension mismatch");
  const auto um = static_cast<std::size_t>(xE.m);
  const auto s = variables(um, 0, 2 * um, Truncation::bidegree_1_1);
  const auto t = variables(um, um, 2 * um, Truncation::bidegree_1_1);
  std::vector<Polynomial> zero(um, s.front().constant_like(0.0));

  const BiPolyMap chi(Vector::Zero(xE.m), p.Asigma(), p.Aphi(), p.B());
  const auto full = evaluate(chi, s, t);
  const auto on_t_axis = evaluate(chi, zero, t);
  std::vector<Polynomial> s_new;
  for (std::size_t i = 0; i < um; ++i) s_new.push_back(full[i] - on_t_axis[i]);
  return read_bipoly(evaluate(xE, s_new, on_t_axis), xE.m);
}

PolyMap to_polymap(const SecondOrderJetElement& q) { return {Vector::Zero(q.m()), q.A(), q.S()}; }

Matrix rho_difference_matrix(const DoubleVelocity& dv, double h) {
  const Eigen::Index n = dv.dims().n;
  const Eigen::Index m = dv.dims().m;
  const Echelon base = column_echelon(dv.Ui());
  const auto& I = base.pivots;
  const auto rest = complement(dv.dims().un(), I);
  const auto k = static_cast<Eigen::Index>(rest.size());

  // Plane coordinates in the chart of the base point's echelon pivots.
  const auto plane = [&](const Matrix& M) {
    return Matrix(select_rows(M, rest) * checked_inverse(select_rows(M, I), 0.0));
  };

  Matrix out(n + k * m, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    const Matrix slice = dv.W().last_slice(static_cast<std::size_t>(j));
    const Vector u_plus = dv.u() + h * dv.Uo().col(j);
    const Vector u_minus = dv.u() - h * dv.Uo().col(j);
    const Matrix dX = (plane(dv.Ui() + h * slice) - plane(dv.Ui() - h * slice)) / (2.0 * h);
    out.block(0, j, n, 1) = (u_plus - u_minus) / (2.0 * h);
    for (Eigen::Index i = 0; i < m; ++i) out.block(n + i * k, j, k, 1) = dX.col(i);
  }
  return out;
}

bool rho_regular_fd(const DoubleVelocity& dv, double h, double tol) {
  if (!is_inner_regular(dv)) throw DomainError("rho_regular_fd: Ui does not have rank m");
  return numerical_rank(rho_difference_matrix(dv, h), tol) == dv.dims().m;
}

}  // namespace jetcalc::oracle
