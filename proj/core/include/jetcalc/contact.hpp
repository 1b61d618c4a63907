#pragma once

// Contact elements and double contact elements as canonical orbit
// representatives, the quotient vertical bundles and the affine structure of
// (semi)holonomic double contact elements.
//
// Charts: a double contact element is stored together with the pivot set I,
// the lexicographically smallest m-subset of rows on which both Ui and Uo of
// a representative are invertible. Coordinates on the non-pivot rows α are
// X = u^α_i, Y = v^α_{·j}, Z = v^α_{ij}; on the pivot rows the normalized
// representative has Ui = Uo = identity and W = 0.

#include "jetcalc/actions.hpp"
#include "jetcalc/jets.hpp"

#include <utility>
#include <vector>

namespace jetcalc {

using PivotSet = std::vector<std::size_t>;

/// A point plus an m-plane, stored by its reduced column-echelon basis.
class ContactElement {
 public:
  ContactElement(Dims dims, Vector u, Matrix P, double tol = kDefaultTol);

  const Dims& dims() const { return dims_; }
  const Vector& u() const { return u_; }
  const Matrix& P() const { return P_; }

 private:
  Dims dims_;
  Vector u_;
  Matrix P_;
};

class DoubleContactElement {
 public:
  DoubleContactElement(Dims dims, PivotSet I, Vector u, Matrix X, Matrix Y, Tensor3 Z);

  const Dims& dims() const { return dims_; }
  const PivotSet& I() const { return I_; }
  const Vector& u() const { return u_; }
  const Matrix& X() const { return X_; }
  const Matrix& Y() const { return Y_; }
  const Tensor3& Z() const { return Z_; }

 private:
  Dims dims_;
  PivotSet I_;
  Vector u_;
  Matrix X_;
  Matrix Y_;
  Tensor3 Z_;
};

/// Fibre coordinates v^α_{ij} of the quotient vertical bundle over `base`,
/// in the chart given by the pivot set I.
class QuotientVerticalVector {
 public:
  QuotientVerticalVector(ContactElement base, PivotSet I, Tensor3 V,
                         TensorKind kind = TensorKind::general, double tol = kDefaultTol);

  const Dims& dims() const { return base_.dims(); }
  const ContactElement& base() const { return base_; }
  const PivotSet& I() const { return I_; }
  const Tensor3& V() const { return V_; }
  TensorKind kind() const { return kind_; }

 private:
  ContactElement base_;
  PivotSet I_;
  Tensor3 V_;
  TensorKind kind_;
};

// --- first-order contact elements -------------------------------------------

ContactElement contact_of(const Velocity& v, double tol = kDefaultTol);
bool contact_equal(const ContactElement& c1, const ContactElement& c2, double tol = kDefaultTol);

/// The contact element spanned by the basis with identity on I and X elsewhere.
ContactElement plane_contact(const Dims& dims, const Vector& u, const Matrix& X, const PivotSet& I,
                             double tol = kDefaultTol);

// --- double contact elements -----------------------------------------------

/// Canonical form using the lexicographically first admissible pivot set.
DoubleContactElement double_contact_of(const DoubleVelocity& dv, double tol = kDefaultTol);

/// Canonical form in the chart of an explicitly given pivot set.
DoubleContactElement double_contact_at(const DoubleVelocity& dv, const PivotSet& I,
                                       double tol = kDefaultTol);

/// The group element that normalizes dv on the pivot rows I.
PrincipalJetElement normalizing_element(const DoubleVelocity& dv, const PivotSet& I);

/// The normalized representative double velocity of d.
DoubleVelocity representative(const DoubleContactElement& d);

/// Coordinate equality; elements in different charts are compared after
/// re-canonicalizing both in the smaller common admissible chart.
bool double_contact_equal(const DoubleContactElement& d1, const DoubleContactElement& d2,
                          double tol = kDefaultTol);

/// Largest scaled coordinate difference for elements sharing a chart; +∞ otherwise.
double distance(const DoubleContactElement& a, const DoubleContactElement& b);

bool is_semiholonomic_contact(const DoubleContactElement& d, double tol = kDefaultTol);
bool is_holonomic_contact(const DoubleContactElement& d, double tol = kDefaultTol);

// --- quotient vertical bundle ----------------------------------------------

/// v^α_{ij} = W^α_{hk} r^h_i r^k_j − U^α_h r^h_k W^k_{pq} r^p_i r^q_j with
/// r the inverse of the pivot block of Ui. Requires a vertical, inner-regular dv.
QuotientVerticalVector vertical_quotient(const DoubleVelocity& dv, double tol = kDefaultTol);

/// Same map applied to a vertical vector; the result carries its kind.
QuotientVerticalVector vertical_quotient(const VerticalVector& k, double tol = kDefaultTol);

/// Second route to vertical_quotient: normalize dv with a semiholonomic
/// transporter and read off the non-pivot rows of the mixed part.
QuotientVerticalVector vertical_quotient_transported(const DoubleVelocity& dv,
                                                     double tol = kDefaultTol);

/// Symmetric and skew parts of a general quotient vector.
std::pair<QuotientVerticalVector, QuotientVerticalVector> split_quotient(
    const QuotientVerticalVector& q);

double distance(const QuotientVerticalVector& a, const QuotientVerticalVector& b);

QuotientVerticalVector operator+(const QuotientVerticalVector& a, const QuotientVerticalVector& b);

// --- affine structure -------------------------------------------------------

/// (h, k): holonomic part (u, X, X, sym Z) and curvature part alt(Z).
std::pair<DoubleContactElement, QuotientVerticalVector> decompose_contact(
    const DoubleContactElement& d, double tol = kDefaultTol);

/// (u, X, Y, Z + V) for semiholonomic d and q over the same contact element and chart.
DoubleContactElement affine_add_contact(const DoubleContactElement& d,
                                        const QuotientVerticalVector& q, double tol = kDefaultTol);

}  // namespace jetcalc
