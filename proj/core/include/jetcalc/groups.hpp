#pragma once

// The jet group L¹ₘ ≅ GL(m) and the principal jet group P¹ₘ = L¹ₘ ⋉ TₘL¹ₘ.
//
// A principal element is stored as (Aphi, Asigma, B): Aphi is the L¹ₘ-part
// (λ), Asigma the linear part of the TₘL¹ₘ-part (μ), and B(i,j,k) = B^i_{jk}
// its first-order variation. In the product law the second index of B pairs
// with Asigma and the third with Aphi:
//
//   (p1·p2).B(i,j,k) = Σ B1(i,h,l) Asigma2(h,j) Aphi2(l,k) + Σ Asigma1(i,h) B2(h,j,k)
//
// Equivalently p is the double jet of χ(s,t) = Asigma·s + Aphi·t + B[s,t].

#include "jetcalc/numeric.hpp"

#include <utility>

namespace jetcalc {

/// An element of L¹ₘ: an invertible m×m matrix.
class JetGroupElement {
 public:
  explicit JetGroupElement(Matrix A);

  static JetGroupElement identity(int m);

  int m() const { return static_cast<int>(A_.rows()); }
  const Matrix& A() const { return A_; }

 private:
  Matrix A_;
};

class PrincipalJetElement {
 public:
  PrincipalJetElement(Matrix Aphi, Matrix Asigma, Tensor3 B);

  int m() const { return static_cast<int>(Aphi_.rows()); }
  const Matrix& Aphi() const { return Aphi_; }
  const Matrix& Asigma() const { return Asigma_; }
  const Tensor3& B() const { return B_; }

 private:
  Matrix Aphi_;
  Matrix Asigma_;
  Tensor3 B_;
};

/// 2-jet of φ̂(t) = A·t + ½ S[t,t] at the origin; S symmetric in its lower slots.
class SecondOrderJetElement {
 public:
  SecondOrderJetElement(Matrix A, Tensor3 S, double tol = kDefaultTol);

  int m() const { return static_cast<int>(A_.rows()); }
  const Matrix& A() const { return A_; }
  const Tensor3& S() const { return S_; }

 private:
  Matrix A_;
  Tensor3 S_;
};

/// Coefficients of χ(s,t) = Cs·s + Ct·t + Cst[s,t].
class ChiCoefficients {
 public:
  ChiCoefficients(Matrix Cs, Matrix Ct, Tensor3 Cst);

  int m() const { return static_cast<int>(Cs_.rows()); }
  const Matrix& Cs() const { return Cs_; }
  const Matrix& Ct() const { return Ct_; }
  const Tensor3& Cst() const { return Cst_; }

 private:
  Matrix Cs_;
  Matrix Ct_;
  Tensor3 Cst_;
};

// --- L¹ₘ --------------------------------------------------------------------

JetGroupElement compose_L(const JetGroupElement& g1, const JetGroupElement& g2);
JetGroupElement inverse_L(const JetGroupElement& g);

// --- P¹ₘ --------------------------------------------------------------------

PrincipalJetElement identity_P(int m);
PrincipalJetElement compose_P(const PrincipalJetElement& p1, const PrincipalJetElement& p2);
PrincipalJetElement inverse_P(const PrincipalJetElement& p);

/// Induced by χ(s,t) ↦ χ(t,s): (Asigma, Aphi, B transposed in its lower slots).
PrincipalJetElement exchange_P(const PrincipalJetElement& p);

ChiCoefficients to_chi(const PrincipalJetElement& p);
PrincipalJetElement from_chi(const ChiCoefficients& c);

JetGroupElement lambda_P(const PrincipalJetElement& p);
JetGroupElement mu_P(const PrincipalJetElement& p);

bool is_semiholonomic_P(const PrincipalJetElement& p, double tol = kDefaultTol);
bool is_holonomic_P(const PrincipalJetElement& p, double tol = kDefaultTol);
bool is_curvature_P(const PrincipalJetElement& p, double tol = kDefaultTol);

/// The projection ∨ onto the holonomic subgroup: B ↦ ½(B + Bᵀ).
PrincipalJetElement symmetrize_P(const PrincipalJetElement& p, double tol = kDefaultTol);

/// p = h·c with h = ∨(p) holonomic and c = (I, I, K) in the curvature
/// subgroup, K = A⁻¹·alt(B).
std::pair<PrincipalJetElement, PrincipalJetElement> factor_semiholonomic(
    const PrincipalJetElement& p, double tol = kDefaultTol);

/// L¹ₘ → P¹ₘ, A ↦ (A, A, 0).
PrincipalJetElement embed_L(const JetGroupElement& g);

/// p = t·l with l = embed_L(λ(p)) and t = (I, Asigma·Aphi⁻¹, B[Aphi⁻¹, Aphi⁻¹]).
std::pair<PrincipalJetElement, PrincipalJetElement> factor_P(const PrincipalJetElement& p);

SecondOrderJetElement to_second_order(const PrincipalJetElement& p, double tol = kDefaultTol);
PrincipalJetElement from_second_order(const SecondOrderJetElement& q);

/// Product of 2-jets, transported through the holonomic subgroup.
SecondOrderJetElement compose_second_order_jets(const SecondOrderJetElement& q1,
                                                const SecondOrderJetElement& q2);

/// Entrywise scaled distance over all three blocks; +∞ on size mismatch.
double distance(const PrincipalJetElement& a, const PrincipalJetElement& b);
double distance(const JetGroupElement& a, const JetGroupElement& b);

/// Largest absolute coordinate difference from the identity element.
double distance_from_identity(const PrincipalJetElement& p);

}  // namespace jetcalc
