#pragma once

// Right actions of L¹ₘ on velocities and of P¹ₘ on double velocities.

#include "jetcalc/groups.hpp"
#include "jetcalc/jets.hpp"

#include <optional>
#include <vector>

namespace jetcalc {

/// (u, U) · g = (u, U·A).
Velocity act_L_velocity(const Velocity& v, const JetGroupElement& g);

/// (u, Ui, Uo, W) · (Aphi, Asigma, B) =
///   (u, Ui·Asigma, Uo·Aphi, W[Asigma, Aphi] + Ui·B).
DoubleVelocity act_P_double(const DoubleVelocity& dv, const PrincipalJetElement& p);

/// Column j of the returned (n + (n−m)·m)×m matrix is the derivative along
/// t_j of the projected curve t ↦ (base point, plane coordinates of the
/// inner jet) at t = 0, computed in the chart given by `pivots`.
Matrix rho_tangent_matrix(const DoubleVelocity& dv, const std::vector<std::size_t>& pivots);

/// Membership in the domain F¹ₘρ on which P¹ₘ acts freely: the projected
/// curve of contact elements is an immersion at 0. Requires is_inner_regular.
bool is_rho_regular(const DoubleVelocity& dv, double tol = kDefaultTol);

/// The unique p with dv1·p matching dv2 on the pivot rows of Ui, Uo and W,
/// or nothing when the remaining rows (or base points) then disagree by
/// more than tol. Throws SingularError when a pivot block is singular.
std::optional<PrincipalJetElement> solve_transporter(const DoubleVelocity& dv1,
                                                     const DoubleVelocity& dv2,
                                                     const std::vector<std::size_t>& pivots,
                                                     double tol = kDefaultTol);

}  // namespace jetcalc
