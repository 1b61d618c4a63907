#include "jetcalc/groups.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace jetcalc {

namespace {

void check_square(const Matrix& A, const char* what) {
  if (A.rows() != A.cols() || A.rows() < 1) throw DimensionError(std::string(what) + ": block must be m×m");
}

void check_invertible(const Matrix& A, const char* what) {
  if (!(std::abs(A.determinant()) > kDetFloor))
    throw SingularError(std::string(what) + ": block is not invertible");
}

void check_cube(const Tensor3& B, int m, const char* what) {
  const auto um = static_cast<std::size_t>(m);
  if (B.dim0() != um || B.dim1() != um || B.dim2() != um)
    throw DimensionError(std::string(what) + ": B must be m×m×m");
}

void check_same_m(int a, int b, const char* what) {
  if (a != b) throw DimensionError(std::string(what) + ": dimension mismatch");
}

Matrix eye(int m) { return Matrix::Identity(m, m); }

}  // namespace

JetGroupElement::JetGroupElement(Matrix A) : A_(std::move(A)) {
  check_square(A_, "JetGroupElement");
  check_invertible(A_, "JetGroupElement");
}

JetGroupElement JetGroupElement::identity(int m) { return JetGroupElement(eye(m)); }

PrincipalJetElement::PrincipalJetElement(Matrix Aphi, Matrix Asigma, Tensor3 B)
    : Aphi_(std::move(Aphi)), Asigma_(std::move(Asigma)), B_(std::move(B)) {
  check_square(Aphi_, "PrincipalJetElement");
  check_square(Asigma_, "PrincipalJetElement");
  check_same_m(static_cast<int>(Aphi_.rows()), static_cast<int>(Asigma_.rows()), "PrincipalJetElement");
  check_cube(B_, m(), "PrincipalJetElement");
  check_invertible(Aphi_, "PrincipalJetElement (Aphi)");
  check_invertible(Asigma_, "PrincipalJetElement (Asigma)");
}

SecondOrderJetElement::SecondOrderJetElement(Matrix A, Tensor3 S, double tol)
    : A_(std::move(A)), S_(std::move(S)) {
  check_square(A_, "SecondOrderJetElement");
  check_cube(S_, m(), "SecondOrderJetElement");
  check_invertible(A_, "SecondOrderJetElement");
  if (!approx_equal(S_, S_.transposed(), tol))
    throw DomainError("SecondOrderJetElement: S must be symmetric in its lower slots");
}

ChiCoefficients::ChiCoefficients(Matrix Cs, Matrix Ct, Tensor3 Cst)
    : Cs_(std::move(Cs)), Ct_(std::move(Ct)), Cst_(std::move(Cst)) {
  check_square(Cs_, "ChiCoefficients");
  check_square(Ct_, "ChiCoefficients");
  check_same_m(static_cast<int>(Cs_.rows()), static_cast<int>(Ct_.rows()), "ChiCoefficients");
  check_cube(Cst_, m(), "ChiCoefficients");
}

JetGroupElement compose_L(const JetGroupElement& g1, const JetGroupElement& g2) {
  check_same_m(g1.m(), g2.m(), "compose_L");
  return JetGroupElement(g1.A() * g2.A());
}

JetGroupElement inverse_L(const JetGroupElement& g) { return JetGroupElement(checked_inverse(g.A())); }

PrincipalJetElement identity_P(int m) {
  const auto um = static_cast<std::size_t>(m);
  return {eye(m), eye(m), Tensor3::zeros(um, um, um)};
}

PrincipalJetElement compose_P(const PrincipalJetElement& p1, const PrincipalJetElement& p2) {
  check_same_m(p1.m(), p2.m(), "compose_P");
#ifdef JETCALC_FAULT_COMPOSE_P
  // Injected fault: the lower slots of B1 contract against the wrong blocks.
  Tensor3 B = contract_lower(p1.B(), p2.Aphi(), p2.Asigma()) + apply_first(p1.Asigma(), p2.B());
#else
  Tensor3 B = contract_lower(p1.B(), p2.Asigma(), p2.Aphi()) + apply_first(p1.Asigma(), p2.B());
#endif
  return {p1.Aphi() * p2.Aphi(), p1.Asigma() * p2.Asigma(), std::move(B)};
}

PrincipalJetElement inverse_P(const PrincipalJetElement& p) {
  Matrix phi_inv = checked_inverse(p.Aphi());
  Matrix sigma_inv = checked_inverse(p.Asigma());
  Tensor3 B = -apply_first(sigma_inv, contract_lower(p.B(), sigma_inv, phi_inv));
  return {std::move(phi_inv), std::move(sigma_inv), std::move(B)};
}

PrincipalJetElement exchange_P(const PrincipalJetElement& p) {
  return {p.Asigma(), p.Aphi(), p.B().transposed()};
}

ChiCoefficients to_chi(const PrincipalJetElement& p) { return {p.Asigma(), p.Aphi(), p.B()}; }

PrincipalJetElement from_chi(const ChiCoefficients& c) {
  if (!(std::abs(c.Cs().determinant()) > kDetFloor) || !(std::abs(c.Ct().determinant()) > kDetFloor))
    throw SingularError("from_chi: partial maps of χ are not immersions at the origin");
  return {c.Ct(), c.Cs(), c.Cst()};
}

JetGroupElement lambda_P(const PrincipalJetElement& p) { return JetGroupElement(p.Aphi()); }

JetGroupElement mu_P(const PrincipalJetElement& p) { return JetGroupElement(p.Asigma()); }

bool is_semiholonomic_P(const PrincipalJetElement& p, double tol) {
  return max_abs(p.Aphi() - p.Asigma()) <= tol;
}

bool is_holonomic_P(const PrincipalJetElement& p, double tol) {
  return is_semiholonomic_P(p, tol) && (p.B() - p.B().transposed()).max_abs() <= tol;
}

bool is_curvature_P(const PrincipalJetElement& p, double tol) {
  return is_semiholonomic_P(p, tol) && (p.B() + p.B().transposed()).max_abs() <= tol;
}

PrincipalJetElement symmetrize_P(const PrincipalJetElement& p, double tol) {
  if (!is_semiholonomic_P(p, tol)) throw DomainError("symmetrize_P: element is not semiholonomic");
  return {p.Aphi(), p.Asigma(), p.B().sym()};
}

std::pair<PrincipalJetElement, PrincipalJetElement> factor_semiholonomic(
    const PrincipalJetElement& p, double tol) {
  PrincipalJetElement h = symmetrize_P(p, tol);
  Tensor3 K = apply_first(checked_inverse(p.Asigma()), p.B().alt());
  PrincipalJetElement c(eye(p.m()), eye(p.m()), std::move(K));
  return {std::move(h), std::move(c)};
}

PrincipalJetElement embed_L(const JetGroupElement& g) {
  const auto um = static_cast<std::size_t>(g.m());
  return {g.A(), g.A(), Tensor3::zeros(um, um, um)};
}

std::pair<PrincipalJetElement, PrincipalJetElement> factor_P(const PrincipalJetElement& p) {
  const Matrix phi_inv = checked_inverse(p.Aphi());
  PrincipalJetElement t(eye(p.m()), p.Asigma() * phi_inv, contract_lower(p.B(), phi_inv, phi_inv));
  return {std::move(t), embed_L(lambda_P(p))};
}

SecondOrderJetElement to_second_order(const PrincipalJetElement& p, double tol) {
  if (!is_holonomic_P(p, tol)) throw DomainError("to_second_order: element is not holonomic");
  return {p.Asigma(), p.B(), tol};
}

PrincipalJetElement from_second_order(const SecondOrderJetElement& q) { return {q.A(), q.A(), q.S()}; }

SecondOrderJetElement compose_second_order_jets(const SecondOrderJetElement& q1,
                                                const SecondOrderJetElement& q2) {
  const PrincipalJetElement prod = compose_P(from_second_order(q1), from_second_order(q2));
  // Symmetric up to roundoff; re-symmetrize so the invariant holds exactly.
  return {prod.Asigma(), prod.B().sym()};
}

double distance(const PrincipalJetElement& a, const PrincipalJetElement& b) {
  if (a.m() != b.m()) return std::numeric_limits<double>::infinity();
  return std::max({max_scaled_diff(a.Aphi(), b.Aphi()), max_scaled_diff(a.Asigma(), b.Asigma()),
                   max_scaled_diff(a.B(), b.B())});
}

double distance(const JetGroupElement& a, const JetGroupElement& b) {
  if (a.m() != b.m()) return std::numeric_limits<double>::infinity();
  return max_scaled_diff(a.A(), b.A());
}

double distance_from_identity(const PrincipalJetElement& p) {
  const Matrix I = eye(p.m());
  return std::max({max_abs(p.Aphi() - I), max_abs(p.Asigma() - I), p.B().max_abs()});
}

}  // namespace jetcalc
