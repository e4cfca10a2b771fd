#ifndef KINKLAB_MOD_ODE_HPP
#define KINKLAB_MOD_ODE_HPP

#include <array>
#include <functional>
#include <vector>

namespace kinklab {

/** State (e1, e2, xi1_dot, xi2_dot) of the reduced modulation system. */
using OdeState4 = std::array<double, 4>;
using Matrix4 = std::array<std::array<double, 4>, 4>;

/**
 * System matrix of the reduced modulation ODE:
 *   rows [0 0 1 0], [0 0 0 1], [-32 e^{-sqrt2 d_v(t)} 0 0 0], [0 0 0 0].
 */
Matrix4 system_matrix(double v, double t);

/**
 * The explicit fundamental solutions
 *   L1 = [th, 0, sqrt2 v sech^2, 0],
 *   L2 = [sqrt2 v t th - 1, 0, 2 v^2 t sech^2 + sqrt2 v th, 0],
 *   L3 = [0, 1, 0, 0],  L4 = [0, t, 0, 1],
 * with th = tanh(sqrt2 v t), sech = sech(sqrt2 v t).
 */
std::array<OdeState4, 4> fundamental_solutions(double v, double t);

/** det(L1|L2|L3|L4), identically -sqrt2 v. */
double wronskian(double v, double t);

using Forcing4 = std::function<OdeState4(double)>;

/**
 * Variation-of-parameters solve of y' = M(t) y + forcing on [t0, t1]:
 * coefficients a(t) from the explicit fundamental-matrix inverse, integrated
 * by adaptive Simpson, trajectory reconstructed as sum a_i(t) L_i(t).
 * Returns n_out + 1 equally spaced (t, y) samples including both endpoints.
 */
std::vector<std::pair<double, OdeState4>> solve_forced(double v, const Forcing4& forcing,
                                                       double t0, const OdeState4& y0, double t1,
                                                       int n_out = 100);

/** Adaptive RK45 integration of the same system (the cross-validation oracle). */
OdeState4 solve_forced_rk(double v, const Forcing4& forcing, double t0, const OdeState4& y0,
                          double t1, double rtol = 1e-11);

} // namespace kinklab

#endif
