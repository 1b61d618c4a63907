#include "jetcalc/verify.hpp"

#include "jetcalc/actions.hpp"
#include "jetcalc/contact.hpp"
#include "jetcalc/groups.hpp"
#include "jetcalc/jets.hpp"
#include "jetcalc/oracle.hpp"
#include "jetcalc/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>

namespace jetcalc::verify {

namespace {

constexpr double kMargin = 0.1;
constexpr int kMaxRedraws = 1000;

struct Trial {
  bool ok = true;
  double error = 0.0;
  bool skipped = false;
  std::string note;
};

using Body = std::function<Trial(Sampler&, const Config&)>;

struct Property {
  const char* suite;
  const char* name;
  Body body;
  bool fixed = false;  // deterministic worked example; runs once
};

Trial near(double error, double tol, const char* what) {
  Trial t;
  t.error = error;
  t.ok = error <= tol;
  if (!t.ok) t.note = std::string("out of tolerance: ") + what;
  return t;
}

Trial expect(bool cond, const char* what) {
  Trial t;
  t.ok = cond;
  if (!cond) t.note = what;
  return t;
}

Trial skip() {
  Trial t;
  t.skipped = true;
  return t;
}

Trial all_of(std::initializer_list<Trial> parts) {
  Trial out;
  for (const Trial& t : parts) {
    out.error = std::max(out.error, t.error);
    if (!t.ok && out.ok) {
      out.ok = false;
      out.note = t.note;
    }
  }
  return out;
}

Dims dims(const Config& c) { return {c.m, c.n}; }

Matrix mat(int rows, int cols, std::initializer_list<double> values) {
  Matrix M(rows, cols);
  auto it = values.begin();
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) M(r, c) = *it++;
  return M;
}

Vector vec(std::initializer_list<double> values) {
  Vector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index k = 0;
  for (double x : values) v(k++) = x;
  return v;
}

Tensor3 ten(std::size_t d0, std::size_t d1, std::size_t d2, std::initializer_list<double> values) {
  Tensor3 T(d0, d1, d2);
  auto it = values.begin();
  for (std::size_t a = 0; a < d0; ++a)
    for (std::size_t i = 0; i < d1; ++i)
      for (std::size_t j = 0; j < d2; ++j) T(a, i, j) = *it++;
  return T;
}

bool exactly_equal(const DoubleVelocity& a, const DoubleVelocity& b) { return sup_norm_diff(a, b) == 0.0; }

bool exactly_equal(const Velocity& a, const Velocity& b) {
  return a.dims() == b.dims() && a.u() == b.u() && a.U() == b.U();
}

bool exactly_equal(const PrincipalJetElement& a, const PrincipalJetElement& b) {
  return a.Aphi() == b.Aphi() && a.Asigma() == b.Asigma() && a.B() == b.B();
}

// Scale-aware symmetry defect of the lower slots.
double asymmetry(const Tensor3& T) { return max_scaled_diff(T, T.transposed()); }
double symmetry(const Tensor3& T) { return max_scaled_diff(T, -T.transposed()); }

// --- domain samplers ---------------------------------------------------------

template <typename Draw, typename Accept>
auto draw_until(Draw draw, Accept accept) -> decltype(draw()) {
  for (int k = 0; k < kMaxRedraws; ++k) {
    auto x = draw();
    if (accept(x)) return x;
  }
  throw Error("verify: sampling domain is empty");
}

PrincipalJetElement non_identity(Sampler& s, int m) {
  return draw_until([&] { return s.principal(m); },
                    [](const PrincipalJetElement& p) { return distance_from_identity(p) >= kMargin; });
}

PrincipalJetElement non_identity_semiholonomic(Sampler& s, int m) {
  return draw_until([&] { return s.semiholonomic_principal(m); },
                    [](const PrincipalJetElement& p) { return distance_from_identity(p) >= kMargin; });
}

DoubleVelocity vertical_with(Sampler& s, const Dims& d, const Tensor3& W) {
  return {d, s.vector(d.n), s.full_rank(d.n, d.m), Matrix::Zero(d.n, d.m), W};
}

// W(·,·,j) = Ui·C_j: the plane of the inner jet does not move along t.
DoubleVelocity vertical_rigid(Sampler& s, const Dims& d) {
  const Matrix Ui = s.full_rank(d.n, d.m);
  Tensor3 W(d.un(), d.um(), d.um());
  for (std::size_t j = 0; j < d.um(); ++j) {
    const Matrix C = s.matrix(d.m, d.m);
    const Matrix slice = Ui * C;
    for (std::size_t a = 0; a < d.un(); ++a)
      for (std::size_t i = 0; i < d.um(); ++i)
        W(a, i, j) = slice(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(i));
  }
  return {d, s.vector(d.n), Ui, Matrix::Zero(d.n, d.m), std::move(W)};
}

DoubleVelocity rho_regular_dv(Sampler& s, const Dims& d) {
  const bool vertical = s.coin();
  return draw_until(
      [&] { return vertical ? s.vertical(d) : s.double_velocity(d); },
      [](const DoubleVelocity& dv) { return is_rho_regular(dv); });
}

// Inner-regular only: Uo is arbitrary and may vanish.
DoubleVelocity inner_regular_dv(Sampler& s, const Dims& d) {
  Vector u = s.vector(d.n);
  Matrix Ui = s.full_rank(d.n, d.m);
  Matrix Uo = s.coin() ? Matrix(Matrix::Zero(d.n, d.m)) : s.matrix(d.n, d.m);
  return {d, std::move(u), std::move(Ui), std::move(Uo), s.tensor(d.n, d.m, d.m)};
}

// Ui and Uo span different planes.
DoubleVelocity non_semiholonomic_dv(Sampler& s, const Dims& d) {
  return draw_until([&] { return s.chart_admissible(d); },
                    [&](const DoubleVelocity& dv) {
                      Matrix both(d.n, 2 * d.m);
                      both << dv.Ui(), dv.Uo();
                      return numerical_rank(both) > d.m;
                    });
}

PivotSet pivots_of(const DoubleVelocity& dv) {
  const auto I = first_admissible_pivots({&dv.Ui(), &dv.Uo()});
  if (!I) throw ChartError("verify: sample has no admissible chart");
  return *I;
}

// Holonomic representative plus a skew perturbation on the non-pivot rows.
DoubleVelocity with_curvature(Sampler& s, const DoubleVelocity& holo) {
  const DoubleVelocity normal = representative(double_contact_of(holo));
  const PivotSet I = pivots_of(normal);
  const auto rest = complement(holo.dims().un(), I);
  const std::size_t m = holo.dims().um();
  Tensor3 W = normal.W();
  const Tensor3 K = draw_until([&] { return s.skew_tensor(static_cast<int>(rest.size()), static_cast<int>(m)); },
                               [](const Tensor3& k) { return k.max_abs() >= kMargin; });
  for (std::size_t al = 0; al < rest.size(); ++al)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) W(rest[al], i, j) += K(al, i, j);
  return {normal.dims(), normal.u(), normal.Ui(), normal.Uo(), std::move(W)};
}

// --- group-axioms --------------------------------------------------------------

Trial p_associativity(Sampler& s, const Config& c) {
  const auto p1 = s.principal(c.m), p2 = s.principal(c.m), p3 = s.principal(c.m);
  return near(distance(compose_P(compose_P(p1, p2), p3), compose_P(p1, compose_P(p2, p3))), c.tol,
              "(p1·p2)·p3 and p1·(p2·p3)");
}

Trial p_identity(Sampler& s, const Config& c) {
  const auto p = s.principal(c.m);
  const auto e = identity_P(c.m);
  return near(std::max(distance(compose_P(p, e), p), distance(compose_P(e, p), p)), c.tol, "p·e and p");
}

Trial p_inverse(Sampler& s, const Config& c) {
  const auto p = s.principal(c.m);
  const auto q = inverse_P(p);
  return near(std::max(distance_from_identity(compose_P(p, q)), distance_from_identity(compose_P(q, p))), c.tol,
              "p·p⁻¹ and identity");
}

Trial p_worked_example(Sampler&, const Config& c) {
  const PrincipalJetElement p1(mat(1, 1, {2}), mat(1, 1, {3}), ten(1, 1, 1, {5}));
  const PrincipalJetElement p2(mat(1, 1, {7}), mat(1, 1, {11}), ten(1, 1, 1, {13}));
  const PrincipalJetElement prod(mat(1, 1, {14}), mat(1, 1, {33}), ten(1, 1, 1, {424}));
  const PrincipalJetElement inv(mat(1, 1, {0.5}), mat(1, 1, {1.0 / 3.0}), ten(1, 1, 1, {-5.0 / 18.0}));
  return all_of({near(distance(compose_P(p1, p2), prod), c.tol, "(2,3,5)·(7,11,13)"),
                 near(distance(inverse_P(p1), inv), c.tol, "(2,3,5)⁻¹")});
}

Trial l_group_laws(Sampler& s, const Config& c) {
  const auto g1 = s.jet_group(c.m), g2 = s.jet_group(c.m), g3 = s.jet_group(c.m);
  const auto e = JetGroupElement::identity(c.m);
  return all_of(
      {near(distance(compose_L(compose_L(g1, g2), g3), compose_L(g1, compose_L(g2, g3))), c.tol, "L associativity"),
       near(distance(compose_L(g1, e), g1), c.tol, "L identity"),
       near(distance(compose_L(g1, inverse_L(g1)), e), c.tol, "L inverse")});
}

Trial l_embedding(Sampler& s, const Config& c) {
  const auto g1 = s.jet_group(c.m), g2 = s.jet_group(c.m);
  return near(distance(embed_L(compose_L(g1, g2)), compose_P(embed_L(g1), embed_L(g2))), c.tol,
              "embedding of a product");
}

Trial p_factorization(Sampler& s, const Config& c) {
  const auto p = s.principal(c.m);
  const auto [t, l] = factor_P(p);
  return all_of({near(distance(compose_P(t, l), p), c.tol, "t·l and p"),
                 near(max_scaled_diff(t.Aphi(), Matrix::Identity(c.m, c.m)), c.tol, "λ(t) and identity"),
                 near(distance(l, embed_L(lambda_P(p))), c.tol, "l and embed(λ(p))")});
}

Trial subgroup_closure(Sampler& s, const Config& c) {
  const auto a1 = s.semiholonomic_principal(c.m), a2 = s.semiholonomic_principal(c.m);
  const auto h1 = s.holonomic_principal(c.m), h2 = s.holonomic_principal(c.m);
  const auto k1 = s.curvature_principal(c.m), k2 = s.curvature_principal(c.m);
  const auto semi = compose_P(a1, inverse_P(a2));
  const auto holo = compose_P(h1, inverse_P(h2));
  const auto curv = compose_P(k1, inverse_P(k2));
  return all_of({expect(semi.Aphi() == semi.Asigma(), "semiholonomic product leaves the subgroup"),
                 near(asymmetry(holo.B()), c.tol, "holonomic product B asymmetry"),
                 near(symmetry(curv.B()), c.tol, "curvature product B symmetric part")});
}

Trial semiholonomic_factorization(Sampler& s, const Config& c) {
  const auto p = s.semiholonomic_principal(c.m);
  const auto [h, k] = factor_semiholonomic(p, c.tol);
  return all_of({near(distance(compose_P(h, k), p), c.tol, "h·c and p"),
                 near(asymmetry(h.B()), c.tol, "holonomic factor asymmetry"),
                 near(symmetry(k.B()), c.tol, "curvature factor symmetric part")});
}

Trial symmetrize_homomorphism(Sampler& s, const Config& c) {
  const auto p1 = s.semiholonomic_principal(c.m), p2 = s.semiholonomic_principal(c.m);
  return near(distance(symmetrize_P(compose_P(p1, p2), 1e-6),
                       compose_P(symmetrize_P(p1, c.tol), symmetrize_P(p2, c.tol))),
              c.tol, "∨(p1·p2) and ∨p1·∨p2");
}

Trial second_order_associativity(Sampler& s, const Config& c) {
  const auto q1 = s.second_order(c.m), q2 = s.second_order(c.m), q3 = s.second_order(c.m);
  const auto left = compose_second_order_jets(compose_second_order_jets(q1, q2), q3);
  const auto right = compose_second_order_jets(q1, compose_second_order_jets(q2, q3));
  return all_of({near(max_scaled_diff(left.A(), right.A()), c.tol, "second-order linear parts"),
                 near(max_scaled_diff(left.S(), right.S()), c.tol, "second-order quadratic parts")});
}

// --- exchange ----------------------------------------------------------------

Trial exchange_involution(Sampler& s, const Config& c) {
  const auto dv = s.double_velocity(dims(c));
  return expect(exactly_equal(exchange(exchange(dv)), dv), "exchange∘exchange is not the identity");
}

Trial exchange_p_involution(Sampler& s, const Config& c) {
  const auto p = s.principal(c.m);
  return expect(exactly_equal(exchange_P(exchange_P(p)), p), "exchange_P∘exchange_P is not the identity");
}

Trial exchange_lambda_mu(Sampler& s, const Config& c) {
  const auto p = s.principal(c.m);
  const auto x = exchange_P(p);
  return all_of({expect(lambda_P(x).A() == mu_P(p).A(), "λ∘exchange_P differs from μ"),
                 expect(mu_P(x).A() == lambda_P(p).A(), "μ∘exchange_P differs from λ")});
}

Trial exchange_projections(Sampler& s, const Config& c) {
  const auto dv = s.double_velocity(dims(c));
  const auto x = exchange(dv);
  return all_of({expect(exactly_equal(inner_projection(x), outer_projection(dv)), "inner∘exchange differs from outer"),
                 expect(exactly_equal(outer_projection(x), inner_projection(dv)), "outer∘exchange differs from inner")});
}

Trial exchange_fixed_points(Sampler& s, const Config& c) {
  const auto dv = s.coin() ? s.holonomic(dims(c)) : s.double_velocity(dims(c));
  return expect(exactly_equal(exchange(dv), dv) == is_holonomic(dv, 0.0),
                "exchange fixed points differ from holonomic elements");
}

Trial exchange_semiholonomic_homomorphism(Sampler& s, const Config& c) {
  const auto p1 = s.semiholonomic_principal(c.m), p2 = s.semiholonomic_principal(c.m);
  return near(distance(exchange_P(compose_P(p1, p2)), compose_P(exchange_P(p1), exchange_P(p2))), c.tol,
              "exchange_P(p1·p2) and exchange_P(p1)·exchange_P(p2)");
}

Trial exchange_equivariance(Sampler& s, const Config& c) {
  const auto dv = s.semiholonomic(dims(c));
  const auto p = s.principal(c.m);
  return near(distance(exchange(act_P_double(dv, p)), act_P_double(exchange(dv), exchange_P(p))), c.tol,
              "exchange(dv·p) and exchange(dv)·exchange_P(p)");
}

// --- action ------------------------------------------------------------------

Trial action_right_law(Sampler& s, const Config& c) {
  const auto dv = s.double_velocity(dims(c));
  const auto p1 = s.principal(c.m), p2 = s.principal(c.m);
  return near(distance(act_P_double(act_P_double(dv, p1), p2), act_P_double(dv, compose_P(p1, p2))), c.tol,
              "(dv·p1)·p2 and dv·(p1·p2)");
}

Trial action_identity(Sampler& s, const Config& c) {
  const auto dv = s.double_velocity(dims(c));
  return near(distance(act_P_double(dv, identity_P(c.m)), dv), c.tol, "dv·e and dv");
}

Trial action_l_right_law(Sampler& s, const Config& c) {
  const auto v = s.velocity(dims(c));
  const auto g1 = s.jet_group(c.m), g2 = s.jet_group(c.m);
  return all_of({near(distance(act_L_velocity(act_L_velocity(v, g1), g2), act_L_velocity(v, compose_L(g1, g2))),
                      c.tol, "(v·g1)·g2 and v·(g1·g2)"),
                 near(distance(act_L_velocity(v, JetGroupElement::identity(c.m)), v), c.tol, "v·e and v")});
}

Trial action_projections(Sampler& s, const Config& c) {
  const auto dv = s.double_velocity(dims(c));
  const auto p = s.principal(c.m);
  const auto out = act_P_double(dv, p);
  return all_of(
      {near(distance(inner_projection(out), act_L_velocity(inner_projection(dv), mu_P(p))), c.tol, "inner projection"),
       near(distance(outer_projection(out), act_L_velocity(outer_projection(dv), lambda_P(p))), c.tol,
            "outer projection")});
}

Trial action_worked_example(Sampler&, const Config& c) {
  const Dims d{1, 2};
  const DoubleVelocity dv(d, vec({0, 0}), mat(2, 1, {1, 2}), mat(2, 1, {3, 4}), ten(2, 1, 1, {5, 6}));
  const PrincipalJetElement p(mat(1, 1, {2}), mat(1, 1, {3}), ten(1, 1, 1, {7}));
  const DoubleVelocity want(d, vec({0, 0}), mat(2, 1, {3, 6}), mat(2, 1, {6, 8}), ten(2, 1, 1, {37, 50}));
  return near(distance(act_P_double(dv, p), want), c.tol, "worked action (37, 50)");
}

Trial transporter_roundtrip(Sampler& s, const Config& c) {
  const auto dv = s.chart_admissible(dims(c));
  const auto p0 = s.principal(c.m);
  const auto found = solve_transporter(dv, act_P_double(dv, p0), pivots_of(dv), c.tol);
  if (!found) return expect(false, "transporter rejected an orbit point");
  return near(distance(*found, p0), c.tol, "recovered transporter");
}

Trial transporter_rejects(Sampler& s, const Config& c) {
  const auto dv = s.chart_admissible(dims(c));
  const PivotSet I = pivots_of(dv);
  const auto moved = act_P_double(dv, s.principal(c.m));
  Matrix Ui = moved.Ui();
  Ui(static_cast<Eigen::Index>(complement(dv.dims().un(), I).front()), 0) += 1.0;
  const DoubleVelocity off(moved.dims(), moved.u(), std::move(Ui), moved.Uo(), moved.W());
  return expect(!solve_transporter(dv, off, I, c.tol), "transporter accepted an off-orbit point");
}

// --- freeness ----------------------------------------------------------------

Trial freeness_rho(Sampler& s, const Config& c) {
  const auto dv = rho_regular_dv(s, dims(c));
  const auto p = non_identity(s, c.m);
  return expect(sup_norm_diff(act_P_double(dv, p), dv) >= kMargin, "fixed point of a non-identity element");
}

Trial freeness_semiholonomic(Sampler& s, const Config& c) {
  const auto dv = inner_regular_dv(s, dims(c));
  const auto p = non_identity_semiholonomic(s, c.m);
  return expect(sup_norm_diff(act_P_double(dv, p), dv) >= kMargin,
                "fixed point of a non-identity semiholonomic element");
}

Trial freeness_transporter(Sampler& s, const Config& c) {
  const auto dv = s.chart_admissible(dims(c));
  const auto found = solve_transporter(dv, dv, pivots_of(dv), c.tol);
  if (!found) return expect(false, "transporter from dv to itself not found");
  return near(distance_from_identity(*found), c.tol, "transporter from dv to itself");
}

// --- subgroup-char -----------------------------------------------------------

double semiholonomic_defect(const DoubleVelocity& dv) { return max_abs(dv.Ui() - dv.Uo()); }
double curvature_defect(const DoubleVelocity& dv) { return dv.W().alt().max_abs(); }

Trial semiholonomic_positive(Sampler& s, const Config& c) {
  const auto dv = s.semiholonomic(dims(c));
  const auto out = act_P_double(dv, s.semiholonomic_principal(c.m));
  return all_of({near(max_scaled_diff(out.Ui(), out.Uo()), c.tol, "Ui and Uo of the image"),
                 expect(is_semiholonomic(out, c.tol), "image misclassified as not semiholonomic")});
}

Trial semiholonomic_negative(Sampler& s, const Config& c) {
  const auto dv = s.semiholonomic(dims(c));
  const auto p = draw_until([&] { return s.principal(c.m); },
                            [](const PrincipalJetElement& q) { return max_abs(q.Aphi() - q.Asigma()) >= kMargin; });
  const auto out = act_P_double(dv, p);
  return all_of({expect(semiholonomic_defect(out) >= kMargin, "image within the margin of semiholonomic"),
                 expect(!is_semiholonomic(out, c.tol), "image misclassified as semiholonomic")});
}

Trial holonomic_positive(Sampler& s, const Config& c) {
  const auto dv = s.holonomic(dims(c));
  const auto out = act_P_double(dv, s.holonomic_principal(c.m));
  return all_of({near(max_scaled_diff(out.Ui(), out.Uo()), c.tol, "Ui and Uo of the image"),
                 near(asymmetry(out.W()), c.tol, "asymmetry of the image"),
                 expect(is_holonomic(out, c.tol), "image misclassified as not holonomic")});
}

Trial holonomic_negative(Sampler& s, const Config& c) {
  const auto dv = s.holonomic(dims(c));
  if (c.m == 1) {
    // No skew part in dimension 1: the only way out is Aphi ≠ Asigma.
    const auto p = draw_until([&] { return s.principal(c.m); },
                              [](const PrincipalJetElement& q) { return max_abs(q.Aphi() - q.Asigma()) >= kMargin; });
    const auto out = act_P_double(dv, p);
    return all_of({expect(semiholonomic_defect(out) >= kMargin, "image within the margin of holonomic"),
                   expect(!is_holonomic(out, c.tol), "image misclassified as holonomic")});
  }
  const auto p = draw_until([&] { return s.semiholonomic_principal(c.m); },
                            [](const PrincipalJetElement& q) { return q.B().alt().max_abs() >= kMargin; });
  const auto out = act_P_double(dv, p);
  return all_of({expect(curvature_defect(out) >= kMargin, "image within the margin of holonomic"),
                 expect(!is_holonomic(out, c.tol), "image misclassified as holonomic")});
}

Trial vertical_restriction(Sampler& s, const Config& c) {
  const Dims d = dims(c);
  const auto general = act_P_double(s.vertical(d), s.semiholonomic_principal(c.m));
  const auto sym = act_P_double(vertical_with(s, d, s.symmetric_tensor(c.n, c.m)), s.holonomic_principal(c.m));
  const auto alt = act_P_double(vertical_with(s, d, s.skew_tensor(c.n, c.m)), s.curvature_principal(c.m));
  return all_of({expect(is_vertical(general, c.tol), "image of a vertical element is not vertical"),
                 near(asymmetry(sym.W()), c.tol, "symmetric W under a holonomic element"),
                 near(symmetry(alt.W()), c.tol, "skew W under a curvature element")});
}

// --- quotient-invariance -----------------------------------------------------

Trial tvert_invariance(Sampler& s, const Config& c) {
  const auto dv = s.vertical(dims(c));
  const auto p = s.semiholonomic_principal(c.m);
  return near(distance(vertical_quotient(act_P_double(dv, p), c.tol), vertical_quotient(dv, c.tol)), c.tol,
              "quotient vector of dv·p and dv");
}

Trial tvert_worked_example(Sampler&, const Config& c) {
  const DoubleVelocity dv({1, 2}, vec({0, 0}), mat(2, 1, {2, 3}), mat(2, 1, {0, 0}), ten(2, 1, 1, {4, 10}));
  const auto q = vertical_quotient(dv, c.tol);
  return all_of({near(max_scaled_diff(q.V(), ten(1, 1, 1, {1.0})), c.tol, "worked quotient value 1.0"),
                 near(max_scaled_diff(vertical_quotient_transported(dv, c.tol).V(), q.V()), c.tol,
                      "transported worked quotient value")});
}

Trial tvert_sym_alt_invariance(Sampler& s, const Config& c) {
  const Dims d = dims(c);
  const auto sym = vertical_with(s, d, s.symmetric_tensor(c.n, c.m));
  const auto alt = vertical_with(s, d, s.skew_tensor(c.n, c.m));
  const auto qs = vertical_quotient(sym, c.tol);
  const auto qa = vertical_quotient(alt, c.tol);
  const auto qs2 = vertical_quotient(act_P_double(sym, s.holonomic_principal(c.m)), c.tol);
  const auto qa2 = vertical_quotient(act_P_double(alt, s.curvature_principal(c.m)), c.tol);
  return all_of({near(distance(qs2, qs), c.tol, "sym part under a holonomic element"),
                 near(distance(qa2, qa), c.tol, "alt part under a curvature element"),
                 near(asymmetry(qs.V()), c.tol, "symmetry of the sym quotient"),
                 near(symmetry(qa.V()), c.tol, "skewness of the alt quotient")});
}

Trial tvert_transporter_agreement(Sampler& s, const Config& c) {
  const auto dv = s.vertical(dims(c));
  return near(distance(vertical_quotient(dv, c.tol), vertical_quotient_transported(dv, c.tol)), c.tol,
              "displayed formula and transporter route");
}

Trial contact_l_invariance(Sampler& s, const Config& c) {
  const auto v = s.velocity(dims(c));
  const auto a = contact_of(v, c.tol);
  const auto b = contact_of(act_L_velocity(v, s.jet_group(c.m)), c.tol);
  return near(std::max(max_scaled_diff(a.u(), b.u()), max_scaled_diff(a.P(), b.P())), c.tol,
              "contact element of v·g and v");
}

Trial canon_orbit_invariance(Sampler& s, const Config& c) {
  const auto dv = s.chart_admissible(dims(c));
  const auto p = s.principal(c.m);
  return near(distance(double_contact_of(act_P_double(dv, p), c.tol), double_contact_of(dv, c.tol)), c.tol,
              "canonical form of dv·p and dv");
}

Trial canon_idempotent(Sampler& s, const Config& c) {
  const auto d = double_contact_of(s.chart_admissible(dims(c)), c.tol);
  return near(distance(double_contact_of(representative(d), c.tol), d), c.tol, "canonical form of a representative");
}

Trial canon_worked_example(Sampler&, const Config& c) {
  const Dims d{1, 2};
  const DoubleVelocity dv(d, vec({0, 0}), mat(2, 1, {2, 3}), mat(2, 1, {4, 6}), ten(2, 1, 1, {8, 14}));
  const auto got = double_contact_of(dv, c.tol);
  const DoubleContactElement want(d, {0}, vec({0, 0}), mat(1, 1, {1.5}), mat(1, 1, {1.5}), ten(1, 1, 1, {0.25}));
  const PrincipalJetElement norm(mat(1, 1, {0.25}), mat(1, 1, {0.5}), ten(1, 1, 1, {-0.5}));
  return all_of({near(distance(got, want), c.tol, "worked canonical form (1.5, 1.5, 0.25)"),
                 near(distance(normalizing_element(dv, {0}), norm), c.tol, "worked normalizing element"),
                 expect(is_semiholonomic_contact(got, c.tol), "worked canonical form is not semiholonomic")});
}

// --- decomposition -----------------------------------------------------------

Trial split_kind_preserved(Sampler& s, const Config& c) {
  const Dims d = dims(c);
  const auto sym = vertical_with(s, d, s.symmetric_tensor(c.n, c.m));
  const auto alt = vertical_with(s, d, s.skew_tensor(c.n, c.m));
  const VerticalVector ks(inner_projection(sym), sym.W(), TensorKind::sym, c.tol);
  const VerticalVector ka(inner_projection(alt), alt.W(), TensorKind::alt, c.tol);
  const auto qs = vertical_quotient(ks, c.tol);
  const auto qa = vertical_quotient(ka, c.tol);
  return all_of({expect(qs.kind() == TensorKind::sym, "symmetric vertical vector lost its kind"),
                 expect(qa.kind() == TensorKind::alt, "skew vertical vector lost its kind"),
                 near(asymmetry(qs.V()), c.tol, "asymmetry of the image of a symmetric W"),
                 near(symmetry(qa.V()), c.tol, "symmetric part of the image of a skew W")});
}

Trial split_commutes(Sampler& s, const Config& c) {
  const auto dv = s.vertical(dims(c));
  const auto [qs, qa] = split_quotient(vertical_quotient(dv, c.tol));
  const DoubleVelocity up_s(dv.dims(), dv.u(), dv.Ui(), dv.Uo(), dv.W().sym());
  const DoubleVelocity up_a(dv.dims(), dv.u(), dv.Ui(), dv.Uo(), dv.W().alt());
  return all_of({near(distance(qs, vertical_quotient(up_s, c.tol)), c.tol, "sym part of the quotient"),
                 near(distance(qa, vertical_quotient(up_a, c.tol)), c.tol, "alt part of the quotient")});
}

Trial contact_semiholonomic_char(Sampler& s, const Config& c) {
  const Dims d = dims(c);
  const auto pos = double_contact_of(act_P_double(s.semiholonomic(d), s.principal(c.m)), c.tol);
  const auto neg = double_contact_of(act_P_double(non_semiholonomic_dv(s, d), s.principal(c.m)), c.tol);
  return all_of({expect(is_semiholonomic_contact(pos, c.tol), "semiholonomic orbit misclassified"),
                 expect(!is_semiholonomic_contact(neg, c.tol), "non-semiholonomic orbit misclassified")});
}

Trial contact_holonomic_char(Sampler& s, const Config& c) {
  const Dims d = dims(c);
  const auto holo = s.holonomic(d);
  const auto pos = double_contact_of(act_P_double(holo, s.principal(c.m)), c.tol);
  const auto bent = c.m == 1 ? non_semiholonomic_dv(s, d) : with_curvature(s, holo);
  const auto neg = double_contact_of(act_P_double(bent, s.principal(c.m)), c.tol);
  return all_of({expect(is_holonomic_contact(pos, c.tol), "holonomic orbit misclassified"),
                 expect(!is_holonomic_contact(neg, c.tol), "non-holonomic orbit misclassified"),
                 expect(c.m == 1 || is_semiholonomic_contact(neg, c.tol), "curved orbit lost semiholonomicity")});
}

Trial decompose_roundtrip(Sampler& s, const Config& c) {
  const auto d = double_contact_of(act_P_double(s.semiholonomic(dims(c)), s.principal(c.m)), c.tol);
  const auto [h, k] = decompose_contact(d, c.tol);
  return all_of({near(distance(affine_add_contact(h, k, c.tol), d), c.tol, "recombined decomposition"),
                 expect(is_holonomic_contact(h, c.tol), "holonomic part is not holonomic"),
                 expect(k.kind() == TensorKind::alt, "curvature part is not skew"),
                 expect(c.m > 1 || k.V().max_abs() == 0.0, "curvature part nonzero in dimension 1")});
}

Trial decompose_independence(Sampler& s, const Config& c) {
  const auto dv = s.semiholonomic(dims(c));
  const auto [h1, k1] = decompose_contact(double_contact_of(dv, c.tol), c.tol);
  const auto [h2, k2] =
      decompose_contact(double_contact_of(act_P_double(dv, s.semiholonomic_principal(c.m)), c.tol), c.tol);
  const auto [holo, curv] = split_semiholonomic(dv, c.tol);
  const auto h3 = double_contact_of(holo, c.tol);
  const auto k3 = vertical_quotient(curv, c.tol);
  return all_of({near(distance(h1, h2), c.tol, "holonomic parts of two representatives"),
                 near(distance(k1, k2), c.tol, "curvature parts of two representatives"),
                 near(distance(h1, h3), c.tol, "holonomic part and the upstairs split"),
                 near(distance(k1, k3), c.tol, "curvature part and the upstairs split")});
}

Trial affine_structure(Sampler& s, const Config& c) {
  const Dims d = dims(c);
  const auto semi = double_contact_of(s.semiholonomic(d), c.tol);
  const auto holo = double_contact_of(s.holonomic(d), c.tol);
  const std::size_t rest = d.un() - d.um();
  const auto over = [&](const DoubleContactElement& e, Tensor3 V, TensorKind kind) {
    return QuotientVerticalVector(plane_contact(d, e.u(), e.X(), e.I(), c.tol), e.I(), std::move(V), kind, c.tol);
  };
  const auto q1 = over(semi, s.tensor(static_cast<int>(rest), c.m, c.m), TensorKind::general);
  const auto q2 = over(semi, s.tensor(static_cast<int>(rest), c.m, c.m), TensorKind::general);
  const auto qs = over(holo, s.symmetric_tensor(static_cast<int>(rest), c.m), TensorKind::sym);
  const auto zero = over(semi, Tensor3(rest, d.um(), d.um()), TensorKind::general);
  return all_of({near(distance(affine_add_contact(affine_add_contact(semi, q1, c.tol), q2, c.tol),
                               affine_add_contact(semi, q1 + q2, c.tol)),
                      c.tol, "successive and combined affine translations"),
                 near(distance(affine_add_contact(semi, zero, c.tol), semi), c.tol, "translation by zero"),
                 expect(is_holonomic_contact(affine_add_contact(holo, qs, c.tol), c.tol),
                        "symmetric translation left the holonomic subset")});
}

Trial semiholonomic_split(Sampler& s, const Config& c) {
  const auto dv = s.semiholonomic(dims(c));
  const auto [h, k] = split_semiholonomic(dv, c.tol);
  return all_of({near(distance(affine_add_vertical(h, k, c.tol), dv), c.tol, "recombined split"),
                 expect(is_holonomic(h, c.tol), "holonomic part is not holonomic")});
}

// --- oracle-equivalence ------------------------------------------------------

Trial oracle_action(Sampler& s, const Config& c) {
  const auto dv = s.double_velocity(dims(c));
  const auto p = s.principal(c.m);
  return near(distance(oracle::double_jet_of(oracle::act_oracle(oracle::to_bipoly(dv), p)), act_P_double(dv, p)),
              c.tol, "oracle substitution and the action formula");
}

Trial oracle_composition(Sampler& s, const Config& c) {
  const auto x = s.bipoly_map(c.m, c.n);
  const auto p1 = s.principal(c.m), p2 = s.principal(c.m);
  const auto twice = oracle::act_oracle(oracle::act_oracle(x, p1), p2);
  const auto once = oracle::act_oracle(x, compose_P(p1, p2));
  return near(distance(oracle::double_jet_of(twice), oracle::double_jet_of(once)), c.tol,
              "oracle substitution by p1 then p2 and by p1·p2");
}

Trial oracle_exchange(Sampler& s, const Config& c) {
  const auto x = s.bipoly_map(c.m, c.n);
  return expect(exactly_equal(oracle::double_jet_of(oracle::swap_arguments(x)), exchange(oracle::double_jet_of(x))),
                "swapped arguments differ from exchange");
}

Trial oracle_prolong(Sampler& s, const Config& c) {
  const auto dv = oracle::prolong(s.poly_map(c.m, c.n));
  return all_of({expect(is_holonomic(dv, 0.0), "prolongation is not holonomic"),
                 expect(exactly_equal(exchange(dv), dv), "prolongation is not exchange-fixed")});
}

Trial oracle_roundtrip(Sampler& s, const Config& c) {
  const auto dv = s.double_velocity(dims(c));
  return expect(exactly_equal(oracle::double_jet_of(oracle::to_bipoly(dv)), dv), "coefficient round trip");
}

Trial oracle_chain_rule(Sampler& s, const Config& c) {
  const auto f = s.poly_map(c.m, c.n);
  const auto A = s.invertible(c.m);
  const oracle::PolyMap g(Vector::Zero(c.m), A, Tensor3(dims(c).um(), dims(c).um(), dims(c).um()));
  return near(distance(oracle::jet_of(oracle::compose(f, g)), act_L_velocity(oracle::jet_of(f), JetGroupElement(A))),
              c.tol, "jet of f∘A and jet of f acted by A");
}

Trial oracle_second_order(Sampler& s, const Config& c) {
  const auto q1 = s.second_order(c.m), q2 = s.second_order(c.m);
  const auto jets = compose_second_order_jets(q1, q2);
  const auto poly = oracle::compose_second_order(oracle::to_polymap(q1), oracle::to_polymap(q2));
  return all_of({near(max_scaled_diff(jets.A(), poly.c1), c.tol, "linear part of the composition"),
                 near(max_scaled_diff(jets.S(), poly.c2), c.tol, "quadratic part of the composition")});
}

Trial second_order_worked_example(Sampler&, const Config& c) {
  const SecondOrderJetElement q1(mat(1, 1, {2}), ten(1, 1, 1, {6}));
  const SecondOrderJetElement q2(mat(1, 1, {3}), ten(1, 1, 1, {4}));
  const auto jets = compose_second_order_jets(q1, q2);
  const auto poly = oracle::compose_second_order(oracle::to_polymap(q1), oracle::to_polymap(q2));
  const auto prod = compose_P(PrincipalJetElement(mat(1, 1, {2}), mat(1, 1, {2}), ten(1, 1, 1, {6})),
                              PrincipalJetElement(mat(1, 1, {3}), mat(1, 1, {3}), ten(1, 1, 1, {4})));
  return all_of({near(scaled_diff(jets.S()(0, 0, 0), 62.0), c.tol, "worked second-order value 62"),
                 near(scaled_diff(poly.c2(0, 0, 0), 62.0), c.tol, "oracle second-order value 62"),
                 near(scaled_diff(prod.B()(0, 0, 0), 62.0), c.tol, "principal product value 62"),
                 near(scaled_diff(jets.A()(0, 0), 6.0), c.tol, "worked second-order linear part")});
}

// Rank decisions are compared only away from the rank boundary.
Trial oracle_rho_fd(Sampler& s, const Config& c) {
  const Dims d = dims(c);
  DoubleVelocity dv = [&] {
    switch (s.integer(0, 2)) {
      case 0: return s.double_velocity(d);
      case 1: return s.vertical(d);
      default: return vertical_rigid(s, d);
    }
  }();
  const auto I = first_admissible_pivots({&dv.Ui()}, c.tol);
  if (!I) return skip();
  const Eigen::JacobiSVD<Matrix> svd(rho_tangent_matrix(dv, *I));
  const auto& sv = svd.singularValues();
  const double fd_tol = 1e-6;
  const double scale = std::max(1.0, sv(0));
  const double smallest = sv(d.m - 1);
  if (smallest > 1e-9 * scale && smallest <= 10.0 * fd_tol * scale) return skip();
  return expect(is_rho_regular(dv, c.tol) == oracle::rho_regular_fd(dv, 1e-5, fd_tol),
                "finite differences disagree with the chart test");
}

// --- registry ----------------------------------------------------------------

const std::vector<Property>& registry() {
  static const std::vector<Property> props = {
      {"group-axioms", "P.associativity", p_associativity},
      {"group-axioms", "P.identity", p_identity},
      {"group-axioms", "P.inverse", p_inverse},
      {"group-axioms", "P.worked_example", p_worked_example, true},
      {"group-axioms", "L.group_laws", l_group_laws},
      {"group-axioms", "L.embedding_homomorphism", l_embedding},
      {"group-axioms", "P.factorization", p_factorization},
      {"group-axioms", "subgroups.closure", subgroup_closure},
      {"group-axioms", "semiholonomic.factorization", semiholonomic_factorization},
      {"group-axioms", "symmetrize.homomorphism", symmetrize_homomorphism},
      {"group-axioms", "second_order.associativity", second_order_associativity},

      {"exchange", "exchange.involution", exchange_involution},
      {"exchange", "exchange_P.involution", exchange_p_involution},
      {"exchange", "exchange_P.lambda_mu", exchange_lambda_mu},
      {"exchange", "exchange.projections", exchange_projections},
      {"exchange", "exchange.fixed_points", exchange_fixed_points},
      {"exchange", "exchange_P.semiholonomic_homomorphism", exchange_semiholonomic_homomorphism},
      {"exchange", "exchange.equivariance", exchange_equivariance},

      {"action", "action.right_law", action_right_law},
      {"action", "action.identity", action_identity},
      {"action", "action.L_right_law", action_l_right_law},
      {"action", "action.projections", action_projections},
      {"action", "action.worked_example", action_worked_example, true},
      {"action", "transporter.roundtrip", transporter_roundtrip},
      {"action", "transporter.rejects_off_orbit", transporter_rejects},

      {"freeness", "freeness.rho_regular", freeness_rho},
      {"freeness", "freeness.semiholonomic_inner_regular", freeness_semiholonomic},
      {"freeness", "freeness.transporter_identity", freeness_transporter},

      {"subgroup-char", "subgroup.semiholonomic_positive", semiholonomic_positive},
      {"subgroup-char", "subgroup.semiholonomic_negative", semiholonomic_negative},
      {"subgroup-char", "subgroup.holonomic_positive", holonomic_positive},
      {"subgroup-char", "subgroup.holonomic_negative", holonomic_negative},
      {"subgroup-char", "vertical.restriction", vertical_restriction},

      {"quotient-invariance", "tvert.invariance", tvert_invariance},
      {"quotient-invariance", "tvert.worked_example", tvert_worked_example, true},
      {"quotient-invariance", "tvert.sym_alt_invariance", tvert_sym_alt_invariance},
      {"quotient-invariance", "tvert.transporter_agreement", tvert_transporter_agreement},
      {"quotient-invariance", "contact.L_invariance", contact_l_invariance},
      {"quotient-invariance", "canon.orbit_invariance", canon_orbit_invariance},
      {"quotient-invariance", "canon.idempotent", canon_idempotent},
      {"quotient-invariance", "canon.worked_example", canon_worked_example, true},

      {"decomposition", "split.kind_preserved", split_kind_preserved},
      {"decomposition", "split.commutes", split_commutes},
      {"decomposition", "contact.semiholonomic_characterization", contact_semiholonomic_char},
      {"decomposition", "contact.holonomic_characterization", contact_holonomic_char},
      {"decomposition", "decompose.roundtrip", decompose_roundtrip},
      {"decomposition", "decompose.representative_independence", decompose_independence},
      {"decomposition", "affine.structure", affine_structure},
      {"decomposition", "semiholonomic.split_roundtrip", semiholonomic_split},

      {"oracle-equivalence", "oracle.action", oracle_action},
      {"oracle-equivalence", "oracle.composition", oracle_composition},
      {"oracle-equivalence", "oracle.exchange", oracle_exchange},
      {"oracle-equivalence", "oracle.prolong_holonomic", oracle_prolong},
      {"oracle-equivalence", "oracle.double_jet_roundtrip", oracle_roundtrip},
      {"oracle-equivalence", "oracle.chain_rule", oracle_chain_rule},
      {"oracle-equivalence", "oracle.second_order", oracle_second_order},
      {"oracle-equivalence", "second_order.worked_example", second_order_worked_example, true},
      {"oracle-equivalence", "oracle.rho_finite_differences", oracle_rho_fd},
  };
  return props;
}

bool in_suite(const Property& p, std::string_view suite) { return suite == "all" || suite == p.suite; }

void validate(std::string_view suite, const Config& c) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw ConfigError("unknown suite \"" + std::string(suite) + "\"");
  if (c.m < 1) throw ConfigError("m must be at least 1");
  if (c.n <= c.m) throw ConfigError("the suites need n > m");
  if (c.trials < 1) throw ConfigError("trials must be at least 1");
  if (!(c.tol > 0.0) || !std::isfinite(c.tol)) throw ConfigError("tol must be a positive finite number");
}

PropertyReport run_property(const Property& prop, const Config& c) {
  PropertyReport r;
  r.name = prop.name;
  r.suite = prop.suite;
  const std::size_t trials = prop.fixed ? 1 : c.trials;
  for (std::size_t k = 0; k < trials; ++k) {
    Sampler sampler(c.seed, prop.name, k);
    Trial t;
    try {
      t = prop.body(sampler, c);
    } catch (const std::exception& e) {
      t.ok = false;
      t.note = std::string("exception: ") + e.what();
    }
    ++r.trials;
    if (t.skipped) {
      ++r.skipped;
      continue;
    }
    if (std::isnan(t.error)) t.ok = false;
    r.max_error = std::max(r.max_error, t.error);
    if (!t.ok) {
      if (r.failures == 0) r.first_failure = "trial " + std::to_string(k) + ": " + t.note;
      ++r.failures;
    }
  }
  return r;
}

std::string format_error(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"group-axioms",  "exchange",           "action",
                                                 "freeness",      "subgroup-char",      "quotient-invariance",
                                                 "decomposition", "oracle-equivalence", "all"};
  return names;
}

std::vector<std::string> property_names(std::string_view suite) {
  std::vector<std::string> out;
  for (const Property& p : registry())
    if (in_suite(p, suite)) out.emplace_back(p.name);
  return out;
}

Report run_suite(std::string_view suite, const Config& config) {
  validate(suite, config);
  Report report;
  report.suite = std::string(suite);
  report.config = config;
  for (const Property& p : registry()) {
    if (!in_suite(p, suite)) continue;
    PropertyReport r = run_property(p, config);
    report.trials += r.trials;
    report.failures += r.failures;
    report.max_error = std::max(report.max_error, r.max_error);
    report.properties.push_back(std::move(r));
  }
  return report;
}

nlohmann::json to_json(const Report& report) {
  nlohmann::json props = nlohmann::json::array();
  for (const PropertyReport& p : report.properties) {
    nlohmann::json j = {{"name", p.name},         {"suite", p.suite},         {"trials", p.trials},
                        {"failures", p.failures}, {"skipped", p.skipped},     {"max_error", p.max_error}};
    if (!p.first_failure.empty()) j["first_failure"] = p.first_failure;
    props.push_back(std::move(j));
  }
  return {{"suite", report.suite},       {"m", report.config.m},
          {"n", report.config.n},        {"seed", report.config.seed},
          {"tol", report.config.tol},    {"trials", report.trials},
          {"failures", report.failures}, {"max_error", report.max_error},
          {"properties", std::move(props)}};
}

std::string summary(const Report& report) {
  std::string out;
  for (const PropertyReport& p : report.properties) {
    out += p.failures == 0 ? "  ok    " : "  FAIL  ";
    out += p.name + "  trials=" + std::to_string(p.trials) + " failures=" + std::to_string(p.failures);
    if (p.skipped > 0) out += " skipped=" + std::to_string(p.skipped);
    out += " max_error=" + format_error(p.max_error) + "\n";
    if (!p.first_failure.empty()) out += "        " + p.first_failure + "\n";
  }
  out += (report.ok() ? "PASS " : "FAIL ") + report.suite + ": " + std::to_string(report.properties.size()) +
         " properties, " + std::to_string(report.trials) + " trials, " + std::to_string(report.failures) +
         " failures, max_error=" + format_error(report.max_error) + " (m=" + std::to_string(report.config.m) +
         ", n=" + std::to_string(report.config.n) + ", seed=" + std::to_string(report.config.seed) + ")\n";
  return out;
}

}  // namespace jetcalc::verify
