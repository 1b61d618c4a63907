#include "jetcalc/contact.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace jetcalc {

namespace {

void require_codim(const Dims& d, const char* what) {
  if (d.m >= d.n) throw DimensionError(std::string(what) + ": requires m < n");
}

void check_pivots(const PivotSet& I, const Dims& d, const char* what) {
  if (I.size() != d.um()) throw DimensionError(std::string(what) + ": pivot set must have m entries");
  for (std::size_t k = 0; k < I.size(); ++k) {
    if (I[k] >= d.un()) throw DimensionError(std::string(what) + ": pivot index out of range");
    if (k > 0 && I[k] <= I[k - 1])
      throw DimensionError(std::string(what) + ": pivot set must be strictly increasing");
  }
}

void check_rest_matrix(const Matrix& M, const Dims& d, const char* what) {
  if (M.rows() != d.n - d.m || M.cols() != d.m)
    throw DimensionError(std::string(what) + ": plane coordinates must be (n−m)×m");
}

void check_rest_tensor(const Tensor3& T, const Dims& d, const char* what) {
  if (T.dim0() != d.un() - d.um() || T.dim1() != d.um() || T.dim2() != d.um())
    throw DimensionError(std::string(what) + ": mixed coordinates must be (n−m)×m×m");
}

// Rebuilds an n-row object from pivot rows and non-pivot rows.
Matrix assemble(const Dims& d, const PivotSet& I, const Matrix& pivot_rows, const Matrix& rest_rows) {
  Matrix out(d.n, d.m);
  const auto rest = complement(d.un(), I);
  for (std::size_t k = 0; k < I.size(); ++k)
    out.row(static_cast<Eigen::Index>(I[k])) = pivot_rows.row(static_cast<Eigen::Index>(k));
  for (std::size_t k = 0; k < rest.size(); ++k)
    out.row(static_cast<Eigen::Index>(rest[k])) = rest_rows.row(static_cast<Eigen::Index>(k));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Value types
// ---------------------------------------------------------------------------

ContactElement::ContactElement(Dims dims, Vector u, Matrix P, double tol)
    : dims_(dims), u_(std::move(u)), P_(std::move(P)) {
  require_codim(dims_, "ContactElement");
  if (u_.size() != dims_.n || P_.rows() != dims_.n || P_.cols() != dims_.m)
    throw DimensionError("ContactElement: shape mismatch");
  const Echelon e = column_echelon(P_, tol);
  if (!approx_equal(e.basis, P_, tol))
    throw DomainError("ContactElement: P is not in reduced column-echelon form");
}

DoubleContactElement::DoubleContactElement(Dims dims, PivotSet I, Vector u, Matrix X, Matrix Y, Tensor3 Z)
    : dims_(dims), I_(std::move(I)), u_(std::move(u)), X_(std::move(X)), Y_(std::move(Y)), Z_(std::move(Z)) {
  require_codim(dims_, "DoubleContactElement");
  check_pivots(I_, dims_, "DoubleContactElement");
  if (u_.size() != dims_.n) throw DimensionError("DoubleContactElement: base point must have n entries");
  check_rest_matrix(X_, dims_, "DoubleContactElement");
  check_rest_matrix(Y_, dims_, "DoubleContactElement");
  check_rest_tensor(Z_, dims_, "DoubleContactElement");
}

QuotientVerticalVector::QuotientVerticalVector(ContactElement base, PivotSet I, Tensor3 V,
                                               TensorKind kind, double tol)
    : base_(std::move(base)), I_(std::move(I)), V_(std::move(V)), kind_(kind) {
  check_pivots(I_, base_.dims(), "QuotientVerticalVector");
  check_rest_tensor(V_, base_.dims(), "QuotientVerticalVector");
  if (!has_kind(V_, kind_, tol))
    throw DomainError("QuotientVerticalVector: V does not have the declared symmetry type");
}

// ---------------------------------------------------------------------------
// First-order contact elements
// ---------------------------------------------------------------------------

ContactElement contact_of(const Velocity& v, double tol) {
  require_codim(v.dims(), "contact_of");
  if (!is_regular(v, tol)) throw DomainError("contact_of: velocity is not regular");
  return {v.dims(), v.u(), column_echelon(v.U(), tol).basis, tol};
}

bool contact_equal(const ContactElement& c1, const ContactElement& c2, double tol) {
  return c1.dims() == c2.dims() && max_abs(c1.u() - c2.u()) <= tol && max_abs(c1.P() - c2.P()) <= tol;
}

ContactElement plane_contact(const Dims& dims, const Vector& u, const Matrix& X, const PivotSet& I,
                             double tol) {
  require_codim(dims, "plane_contact");
  check_pivots(I, dims, "plane_contact");
  check_rest_matrix(X, dims, "plane_contact");
  const Matrix basis = assemble(dims, I, Matrix::Identity(dims.m, dims.m), X);
  return {dims, u, column_echelon(basis, tol).basis, tol};
}

// ---------------------------------------------------------------------------
// Double contact elements
// ---------------------------------------------------------------------------

PrincipalJetElement normalizing_element(const DoubleVelocity& dv, const PivotSet& I) {
  Matrix Asigma = checked_inverse(select_rows(dv.Ui(), I));
  Matrix Aphi = checked_inverse(select_rows(dv.Uo(), I));
  // B cancels the pivot rows of the transformed mixed part.
  Tensor3 B = -apply_first(Asigma, contract_lower(dv.W(), Asigma, Aphi).select_rows(I));
  return {std::move(Aphi), std::move(Asigma), std::move(B)};
}

DoubleContactElement double_contact_at(const DoubleVelocity& dv, const PivotSet& I, double tol) {
  require_codim(dv.dims(), "double_contact_at");
  check_pivots(I, dv.dims(), "double_contact_at");
  if (!pivots_admissible({&dv.Ui(), &dv.Uo()}, I, tol))
    throw ChartError("double_contact_at: pivot rows of Ui or Uo are singular");
  // dv · normalizing_element(dv, I), evaluated on the non-pivot rows without
  // rounding the transporter: Z = W[ri, ro] − X·W_I[ri, ro].
  const WideMatrix ri = checked_inverse_wide(select_rows(dv.Ui(), I));
  const WideMatrix ro = checked_inverse_wide(select_rows(dv.Uo(), I));
  const auto rest = complement(dv.dims().un(), I);
  const std::size_t m = dv.dims().um();
  const WideMatrix X = select_rows(dv.Ui(), rest).cast<long double>() * ri;
  const WideMatrix Y = select_rows(dv.Uo(), rest).cast<long double>() * ro;

  const auto mixed = [&](std::size_t a, std::size_t i, std::size_t j) {
    long double acc = 0.0L;
    for (std::size_t h = 0; h < m; ++h)
      for (std::size_t k = 0; k < m; ++k) acc += static_cast<long double>(dv.W()(a, h, k)) * ri(h, i) * ro(k, j);
    return acc;
  };
  std::vector<long double> pivot_mixed(m * m * m);
  for (std::size_t h = 0; h < m; ++h)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) pivot_mixed[(h * m + i) * m + j] = mixed(I[h], i, j);

  Tensor3 Z(rest.size(), m, m);
  for (std::size_t al = 0; al < rest.size(); ++al)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        long double acc = mixed(rest[al], i, j);
        for (std::size_t h = 0; h < m; ++h)
          acc -= X(static_cast<Eigen::Index>(al), static_cast<Eigen::Index>(h)) * pivot_mixed[(h * m + i) * m + j];
        Z(al, i, j) = static_cast<double>(acc);
      }
  return {dv.dims(), I, dv.u(), X.cast<double>(), Y.cast<double>(), std::move(Z)};
}

DoubleContactElement double_contact_of(const DoubleVelocity& dv, double tol) {
  require_codim(dv.dims(), "double_contact_of");
  if (!is_inner_regular(dv, tol)) throw DomainError("double_contact_of: Ui does not have rank m");
  if (!is_tau_regular(dv, tol)) throw DomainError("double_contact_of: Uo does not have rank m");
  const auto I = first_admissible_pivots({&dv.Ui(), &dv.Uo()}, tol);
  if (!I)
    throw ChartError(
        "double_contact_of: no pivot set has both Ui and Uo blocks invertible "
        "(the two linear parts admit no common chart)");
  return double_contact_at(dv, *I, tol);
}

DoubleVelocity representative(const DoubleContactElement& d) {
  const Dims& dims = d.dims();
  const Matrix id = Matrix::Identity(dims.m, dims.m);
  Tensor3 W(dims.un(), dims.um(), dims.um());
  const auto rest = complement(dims.un(), d.I());
  for (std::size_t k = 0; k < rest.size(); ++k)
    for (std::size_t i = 0; i < dims.um(); ++i)
      for (std::size_t j = 0; j < dims.um(); ++j) W(rest[k], i, j) = d.Z()(k, i, j);
  return {dims, d.u(), assemble(dims, d.I(), id, d.X()), assemble(dims, d.I(), id, d.Y()), std::move(W)};
}

double distance(const DoubleContactElement& a, const DoubleContactElement& b) {
  if (!(a.dims() == b.dims()) || a.I() != b.I()) return std::numeric_limits<double>::infinity();
  return std::max({max_scaled_diff(a.u(), b.u()), max_scaled_diff(a.X(), b.X()),
                   max_scaled_diff(a.Y(), b.Y()), max_scaled_diff(a.Z(), b.Z())});
}

bool double_contact_equal(const DoubleContactElement& d1, const DoubleContactElement& d2, double tol) {
  if (!(d1.dims() == d2.dims())) return false;
  if (d1.I() == d2.I()) return distance(d1, d2) <= tol;
  const DoubleVelocity r1 = representative(d1);
  const DoubleVelocity r2 = representative(d2);
  auto candidates = std::vector<PivotSet>{std::min(d1.I(), d2.I()), std::max(d1.I(), d2.I())};
  for (const PivotSet& I : candidates) {
    if (pivots_admissible({&r1.Ui(), &r1.Uo()}, I, tol) && pivots_admissible({&r2.Ui(), &r2.Uo()}, I, tol))
      return distance(double_contact_at(r1, I, tol), double_contact_at(r2, I, tol)) <= tol;
  }
  return false;
}

bool is_semiholonomic_contact(const DoubleContactElement& d, double tol) {
  return max_abs(d.Y() - d.X()) <= tol;
}

bool is_holonomic_contact(const DoubleContactElement& d, double tol) {
  return is_semiholonomic_contact(d, tol) && (d.Z() - d.Z().transposed()).max_abs() <= tol;
}

// ---------------------------------------------------------------------------
// Quotient vertical bundle
// ---------------------------------------------------------------------------

namespace {

PivotSet vertical_chart(const DoubleVelocity& dv, double tol, const char* what) {
  require_codim(dv.dims(), what);
  if (!is_vertical(dv, tol)) throw DomainError(std::string(what) + ": double velocity is not vertical");
  const auto I = first_admissible_pivots({&dv.Ui()}, tol);
  if (!I) throw ChartError(std::string(what) + ": Ui has no invertible pivot block");
  return *I;
}

}  // namespace

QuotientVerticalVector vertical_quotient(const DoubleVelocity& dv, double tol) {
  const PivotSet I = vertical_chart(dv, tol, "vertical_quotient");
  const Dims& d = dv.dims();
  const auto rest = complement(d.un(), I);
  const WideMatrix r = checked_inverse_wide(select_rows(dv.Ui(), I));

  const std::size_t m = d.um();
  Tensor3 V(rest.size(), m, m);
  for (std::size_t al = 0; al < rest.size(); ++al) {
    const std::size_t a = rest[al];
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        long double first = 0.0L;
        for (std::size_t h = 0; h < m; ++h)
          for (std::size_t k = 0; k < m; ++k) first += static_cast<long double>(dv.W()(a, h, k)) * r(h, i) * r(k, j);
        long double second = 0.0L;
        for (std::size_t h = 0; h < m; ++h)
          for (std::size_t k = 0; k < m; ++k) {
            long double inner = 0.0L;
            for (std::size_t p = 0; p < m; ++p)
              for (std::size_t q = 0; q < m; ++q)
                inner += static_cast<long double>(dv.W()(I[k], p, q)) * r(p, i) * r(q, j);
            second += static_cast<long double>(dv.Ui()(a, h)) * r(h, k) * inner;
          }
        V(al, i, j) = static_cast<double>(first - second);
      }
  }
  return {contact_of(inner_projection(dv), tol), I, std::move(V), TensorKind::general, tol};
}

QuotientVerticalVector vertical_quotient(const VerticalVector& k, double tol) {
  const Velocity& b = k.base();
  const DoubleVelocity dv(b.dims(), b.u(), b.U(), Matrix::Zero(b.dims().n, b.dims().m), k.K());
  QuotientVerticalVector q = vertical_quotient(dv, tol);
  return {q.base(), q.I(), q.V(), k.kind(), tol};
}

QuotientVerticalVector vertical_quotient_transported(const DoubleVelocity& dv, double tol) {
  const PivotSet I = vertical_chart(dv, tol, "vertical_quotient_transported");
  const Matrix r = checked_inverse(select_rows(dv.Ui(), I));
  Tensor3 B = -apply_first(r, contract_lower(dv.W(), r, r).select_rows(I));
  const PrincipalJetElement p(r, r, std::move(B));
  const DoubleVelocity normal = act_P_double(dv, p);
  return {contact_of(inner_projection(dv), tol), I, normal.W().select_rows(complement(dv.dims().un(), I)),
          TensorKind::general, tol};
}

std::pair<QuotientVerticalVector, QuotientVerticalVector> split_quotient(const QuotientVerticalVector& q) {
  if (q.kind() != TensorKind::general) throw DomainError("split_quotient: expects a general quotient vector");
  return {QuotientVerticalVector(q.base(), q.I(), q.V().sym(), TensorKind::sym),
          QuotientVerticalVector(q.base(), q.I(), q.V().alt(), TensorKind::alt)};
}

double distance(const QuotientVerticalVector& a, const QuotientVerticalVector& b) {
  if (!(a.dims() == b.dims()) || a.I() != b.I()) return std::numeric_limits<double>::infinity();
  return std::max({max_scaled_diff(a.base().u(), b.base().u()), max_scaled_diff(a.base().P(), b.base().P()),
                   max_scaled_diff(a.V(), b.V())});
}

QuotientVerticalVector operator+(const QuotientVerticalVector& a, const QuotientVerticalVector& b) {
  if (a.I() != b.I() || !contact_equal(a.base(), b.base()))
    throw DomainError("QuotientVerticalVector: addition requires a common base and chart");
  const TensorKind kind = a.kind() == b.kind() ? a.kind() : TensorKind::general;
  return {a.base(), a.I(), a.V() + b.V(), kind};
}

// ---------------------------------------------------------------------------
// Affine structure
// ---------------------------------------------------------------------------

std::pair<DoubleContactElement, QuotientVerticalVector> decompose_contact(const DoubleContactElement& d,
                                                                          double tol) {
  if (!is_semiholonomic_contact(d, tol))
    throw DomainError("decompose_contact: double contact element is not semiholonomic");
  DoubleContactElement h(d.dims(), d.I(), d.u(), d.X(), d.X(), d.Z().sym());
  QuotientVerticalVector k(plane_contact(d.dims(), d.u(), d.X(), d.I(), tol), d.I(), d.Z().alt(),
                           TensorKind::alt, tol);
  return {std::move(h), std::move(k)};
}

DoubleContactElement affine_add_contact(const DoubleContactElement& d, const QuotientVerticalVector& q,
                                        double tol) {
  if (!is_semiholonomic_contact(d, tol))
    throw DomainError("affine_add_contact: double contact element is not semiholonomic");
  if (q.I() != d.I()) throw DomainError("affine_add_contact: pivot sets differ");
  if (!contact_equal(q.base(), plane_contact(d.dims(), d.u(), d.X(), d.I(), tol), tol))
    throw DomainError("affine_add_contact: quotient vector lies over a different contact element");
  return {d.dims(), d.I(), d.u(), d.X(), d.Y(), d.Z() + q.V()};
}

}  // namespace jetcalc
