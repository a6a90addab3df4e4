#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "laneflow/grid.hpp"
#include "laneflow/network.hpp"

namespace laneflow {

/// Tunables of the per-point equilibrium solver.
struct SolverSettings {
  double residual_tol = 1e-10;  // dimensionless, relative to max(rho^d, 1 veh/km)
  int max_iterations = 200;
  double damping = 0.5;         // initial Picard damping, adapted (halved on residual increase)
  double fd_step_rel = 1e-4;    // finite-difference step: max(fd_step_rel * rho, fd_step_floor)
  double fd_step_floor = 1e-3;  // veh/km
};

/// Result of a lane-assignment equilibrium solve.
///
/// `partial[d][i]` is the density of class d on lane i; zero whenever lane i
/// is not accessible to d. Class sums match the input densities to the
/// solver residual, lane quantities are consistent with the partials:
///   lane_density[i] = sum_d partial[d][i]
///   lane_speed[i]   = V_i(lane_density[i])
///   class_flux[d]   = sum_i partial[d][i] * lane_speed[i]      (veh/h)
///   class_speed[d]  = class_flux[d] / rho^d (mean accessible free speed
///                     when rho^d = 0; reporting convention only).
struct EquilibriumSplit {
  std::vector<std::vector<double>> partial;
  std::vector<double> lane_density;
  std::vector<double> lane_speed;
  std::vector<double> class_flux;
  std::vector<double> class_speed;
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Logit split of class `cls` over its accessible lanes given lane speeds
/// (indexed by lane, only accessible entries are read). Shares are positive
/// and normalized after exponentiation; the maximum utility is subtracted
/// before exponentiating, so extreme nu values stay finite.
std::vector<double> logit_shares(const NetworkSpec& spec, std::span<const double> lane_speeds,
                                 int cls);

/// Solve the lane-assignment equilibrium for class densities `rho_bar`.
///
/// The split satisfies the logit fixed point: recomputing shares from the
/// solution's own lane speeds reproduces the partials within
/// settings.residual_tol (relative to max(rho^d, 1)). Classes with zero
/// density get all-zero rows. The solve starts from the uniform split, runs
/// a scalar Newton iteration when exactly one class can choose between two
/// lanes, damped fixed-point iteration otherwise, and falls back to
/// projected ascent on the equilibrium objective for hard instances.
/// Non-convergence is reported through `converged`/`residual`, not thrown.
EquilibriumSplit solve_split(const NetworkSpec& spec, const ClassDensities& rho_bar,
                             const SolverSettings& settings = {});

/// Concave objective whose maximizer over the per-class simplexes is the
/// equilibrium split: sum_i integral_0^{rho_i} V_i + sum_{d,i} theta_i^d
/// rho_i^d - nu sum_{d,i} rho_i^d [ln(rho_i^d / rho^d) - 1]. Zero partials
/// contribute zero to the entropy term. Throws std::invalid_argument for
/// infeasible input (negative entries or class sums not matching rho_bar).
double equilibrium_objective(const NetworkSpec& spec,
                             const std::vector<std::vector<double>>& partial,
                             const ClassDensities& rho_bar);

/// Class fluxes (and mean speeds) at the equilibrium split of `rho_bar`.
/// Throws SolveError when the split does not converge.
EquilibriumSplit class_flux(const NetworkSpec& spec, const ClassDensities& rho_bar,
                            const SolverSettings& settings = {});

/// Largest absolute eigenvalue of the flux Jacobian d(class fluxes)/d(class
/// densities), estimated by central finite differences (steps clamped to the
/// feasible density range) and an exact |D|x|D| eigensolve. Not floored;
/// see cfl_wave_speed for the stability bound used by the integrators.
double max_wave_speed(const NetworkSpec& spec, const ClassDensities& rho_bar,
                      const SolverSettings& settings = {});

/// max_wave_speed floored by the largest lane free speed: the speed the
/// fixed-mesh integrators test their CFL condition against.
double cfl_wave_speed(const NetworkSpec& spec, const ClassDensities& rho_bar,
                      const SolverSettings& settings = {});

/// Number of equilibrium solves performed process-wide (solve_split plus the
/// per-group Lagrangian solves). The schemes report flux-evaluation counts
/// from snapshots of this counter.
std::uint64_t equilibrium_solve_count();
void reset_equilibrium_solve_count();

namespace detail {
/// Safeguarded Newton for the scalar logit fixed point
///   phi = sigmoid((u_a(phi) - u_b(phi)) / nu),  phi in [0, 1],
/// where u_a is non-increasing and u_b non-decreasing in phi. `utility_gap`
/// returns u_a - u_b, `utility_gap_slope` its derivative. Residual control
/// in |phi - sigmoid(...)| <= tol.
double solve_scalar_logit(const std::function<double(double)>& utility_gap,
                          const std::function<double(double)>& utility_gap_slope, double nu,
                          double tol, int max_iterations, int* iterations_out);
void bump_solve_count();
}  // namespace detail

}  // namespace laneflow
