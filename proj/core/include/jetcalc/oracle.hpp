#pragma once

// Ground truth by genuine polynomial substitution.
//
// Jets are represented by polynomial maps and (double) jets are read off as
// Taylor coefficients of truncated compositions. Nothing here uses the
// closed-form coordinate formulas of the group product or the actions, so
// agreement between the two is a real check.
//
// A (1,1)-double jet depends only on D₁, D₂ and D₁D₂ at the origin, so
// bivariate maps carry no pure s² or t² terms and products are truncated to
// s-degree ≤ 1 and t-degree ≤ 1. Those terms are absent on purpose.

#include "jetcalc/groups.hpp"
#include "jetcalc/jets.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace jetcalc::oracle {

/// Which monomials survive multiplication.
enum class Truncation {
  total_degree_2,  ///< total degree ≤ 2 in all variables
  bidegree_1_1,    ///< first half of the variables (s) and second half (t) each of degree ≤ 1
};

/// Sparse polynomial in a fixed number of variables, truncated on every product.
class Polynomial {
 public:
  using Exponents = std::vector<std::uint8_t>;

  Polynomial(std::size_t vars, Truncation trunc) : vars_(vars), trunc_(trunc) {}

  static Polynomial constant(std::size_t vars, Truncation trunc, double c);
  static Polynomial variable(std::size_t vars, Truncation trunc, std::size_t k);

  std::size_t vars() const { return vars_; }
  Truncation truncation() const { return trunc_; }

  /// The constant c in the same ring as *this.
  Polynomial constant_like(double c) const { return constant(vars_, trunc_, c); }

  /// Coefficient of the monomial with the given exponents (0 if absent).
  double coefficient(const Exponents& e) const;
  double constant_term() const;
  /// Coefficient of x_k.
  double linear(std::size_t k) const;
  /// Coefficient of x_k·x_l (k ≠ l) or x_k² (k = l).
  double quadratic(std::size_t k, std::size_t l) const;

  /// Substitutes the listed polynomials for the variables (all must share a ring).
  Polynomial substitute(const std::vector<Polynomial>& values) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator*=(double s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a += (-1.0 * b); }
  friend Polynomial operator*(double s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

 private:
  bool keep(const Exponents& e) const;

  std::size_t vars_;
  Truncation trunc_;
  std::map<Exponents, double> terms_;
};

/// x ↦ c0 + c1·x + ½ c2[x, x] from ℝᵐ to ℝⁿ, c2 symmetric.
struct PolyMap {
  int m = 1;
  int n = 1;
  Vector c0;
  Matrix c1;
  Tensor3 c2;

  PolyMap(Vector c0, Matrix c1, Tensor3 c2, double tol = kDefaultTol);
};

/// (s, t) ↦ c0 + Ps·s + Pt·t + Pst[s, t] from ℝᵐ×ℝᵐ to ℝⁿ.
struct BiPolyMap {
  int m = 1;
  int n = 1;
  Vector c0;
  Matrix Ps;
  Matrix Pt;
  Tensor3 Pst;

  BiPolyMap(Vector c0, Matrix Ps, Matrix Pt, Tensor3 Pst);
};

/// The translation x ↦ x + t, as the bivariate map (s, t) ↦ s + t.
BiPolyMap translation(int m);

/// Components of f as polynomials in the given input polynomials.
std::vector<Polynomial> evaluate(const PolyMap& f, const std::vector<Polynomial>& x);
std::vector<Polynomial> evaluate(const BiPolyMap& f, const std::vector<Polynomial>& s,
                                 const std::vector<Polynomial>& t);

Velocity jet_of(const PolyMap& f);
DoubleVelocity double_jet_of(const BiPolyMap& x);
BiPolyMap to_bipoly(const DoubleVelocity& dv);

/// Degree-2 truncation of f ∘ g (g: ℝᵏ → ℝᵐ, f: ℝᵐ → ℝⁿ).
PolyMap compose(const PolyMap& f, const PolyMap& g);

/// Degree-2 truncation of f1 ∘ f2 for origin-preserving self-maps of ℝᵐ.
PolyMap compose_second_order(const PolyMap& f1, const PolyMap& f2);

/// Double jet of χ(s, t) = g(s + t).
DoubleVelocity prolong(const PolyMap& g);

/// (s, t) ↦ χ(t, s).
BiPolyMap swap_arguments(const BiPolyMap& x);

/// Substitutes s ↦ χ_p(s,t) − χ_p(0,t) and t ↦ χ_p(0,t) into xE, where
/// χ_p(s,t) = Asigma·s + Aphi·t + B[s,t] represents p, and truncates.
BiPolyMap act_oracle(const BiPolyMap& xE, const PrincipalJetElement& p);

/// The polynomial map t ↦ A·t + ½ S[t, t] of a second-order jet.
PolyMap to_polymap(const SecondOrderJetElement& q);

/// Finite-difference immersion test for the projected curve
/// t_j ↦ (u + h·Uo(:,j), echelon(Ui + h·W(:,:,j))), using central
/// differences and a rank threshold tol·max(1, σ_max).
bool rho_regular_fd(const DoubleVelocity& dv, double h = 1e-5, double tol = 1e-6);

/// The stacked central-difference quotients used by rho_regular_fd.
Matrix rho_difference_matrix(const DoubleVelocity& dv, double h = 1e-5);

}  // namespace jetcalc::oracle
