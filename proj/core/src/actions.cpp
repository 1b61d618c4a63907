#include "jetcalc/actions.hpp"

namespace jetcalc {

Velocity act_L_velocity(const Velocity& v, const JetGroupElement& g) {
  if (g.m() != v.dims().m) throw DimensionError("act_L_velocity: dimension mismatch");
  return {v.dims(), v.u(), v.U() * g.A()};
}

DoubleVelocity act_P_double(const DoubleVelocity& dv, const PrincipalJetElement& p) {
  if (p.m() != dv.dims().m) throw DimensionError("act_P_double: dimension mismatch");
  // Both terms in one extended-precision sum: they often cancel.
  const std::size_t n = dv.dims().un(), m = dv.dims().um();
  const Matrix& Ui = dv.Ui();
  const Matrix& As = p.Asigma();
  const Matrix& Ap = p.Aphi();
  Tensor3 W(n, m, m);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        long double acc = 0.0L;
        for (std::size_t h = 0; h < m; ++h) {
          acc += static_cast<long double>(Ui(a, h)) * p.B()(h, i, j);
          for (std::size_t k = 0; k < m; ++k) acc += static_cast<long double>(dv.W()(a, h, k)) * As(h, i) * Ap(k, j);
        }
        W(a, i, j) = static_cast<double>(acc);
      }
  return {dv.dims(), dv.u(), dv.Ui() * p.Asigma(), dv.Uo() * p.Aphi(), std::move(W)};
}

Matrix rho_tangent_matrix(const DoubleVelocity& dv, const std::vector<std::size_t>& pivots) {
  const Eigen::Index n = dv.dims().n;
  const Eigen::Index m = dv.dims().m;
  const auto rest = complement(dv.dims().un(), pivots);
  const Matrix r = checked_inverse(select_rows(dv.Ui(), pivots));
  const Matrix ui_rest = select_rows(dv.Ui(), rest);
  const auto k = static_cast<Eigen::Index>(rest.size());

  Matrix out(n + k * m, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    const Matrix slice = dv.W().last_slice(static_cast<std::size_t>(j));
    const Matrix N = (select_rows(slice, rest) - ui_rest * r * select_rows(slice, pivots)) * r;
    out.block(0, j, n, 1) = dv.Uo().col(j);
    for (Eigen::Index i = 0; i < m; ++i) out.block(n + i * k, j, k, 1) = N.col(i);
  }
  return out;
}

bool is_rho_regular(const DoubleVelocity& dv, double tol) {
  const auto pivots = first_admissible_pivots({&dv.Ui()}, tol);
  if (!pivots) throw DomainError("is_rho_regular: inner linear part is not of full rank");
  return numerical_rank(rho_tangent_matrix(dv, *pivots), tol) == dv.dims().m;
}

std::optional<PrincipalJetElement> solve_transporter(const DoubleVelocity& dv1,
                                                     const DoubleVelocity& dv2,
                                                     const std::vector<std::size_t>& pivots,
                                                     double tol) {
  if (!(dv1.dims() == dv2.dims())) throw DimensionError("solve_transporter: dimension mismatch");
  if (pivots.size() != dv1.dims().um()) throw DimensionError("solve_transporter: need m pivot rows");

  const Matrix inner_inv = checked_inverse(select_rows(dv1.Ui(), pivots));
  const Matrix outer_inv = checked_inverse(select_rows(dv1.Uo(), pivots));
  Matrix Asigma = inner_inv * select_rows(dv2.Ui(), pivots);
  Matrix Aphi = outer_inv * select_rows(dv2.Uo(), pivots);
  const Tensor3 residual =
      dv2.W().select_rows(pivots) - contract_lower(dv1.W(), Asigma, Aphi).select_rows(pivots);
  Tensor3 B = apply_first(inner_inv, residual);

  PrincipalJetElement p(std::move(Aphi), std::move(Asigma), std::move(B));
  if (distance(act_P_double(dv1, p), dv2) > tol) return std::nullopt;
  return p;
}

}  // namespace jetcalc
