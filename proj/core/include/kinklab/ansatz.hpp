#ifndef KINKLAB_ANSATZ_HPP
#define KINKLAB_ANSATZ_HPP

#include <functional>

#include "kinklab/grid.hpp"

namespace kinklab {

/** Parameters of the order-2 approximate two-kink solution. */
struct AnsatzParams {
    double v = 0.1;              // incoming speed, 0 < v < 1
    bool with_correction = true; // include the e^{-sqrt2 d} G terms
    double t_shift = 0.0;        // optional time offset
};

/** Co-moving frame coordinate (x - d_v(t)/2)/sqrt(1 - d'(t)^2/4). */
double frame_w(double v, double t, double x);

/**
 * The approximate two-kink state
 *   phi(t,x) = H(w(t,x)) - H(w(t,-x)) + e^{-sqrt2 d(t)} [G(w(t,x)) - G(w(t,-x))],
 * with pi the exact time derivative (chain rule through d, d', d'').
 * The grid must keep the kink centers +-d(t)/2 at least 10 units inside; a grid
 * starting at exactly x = 0 is treated as the right half of the odd extension.
 */
FieldPair ansatz_state(const AnsatzParams& p, double t, const Grid& grid);

/**
 * PDE residual Lambda(phi) = d_tt phi - d_xx phi + U'(phi) of a time-indexed
 * family of states, with d_tt from a 5-point stencil over analytic slices and
 * d_xx from the 4th-order stencil. Returns interior samples (grid shrunk by
 * two cells on each side).
 */
std::vector<double> lambda_residual(const std::function<FieldPair(double)>& state_at, double t,
                                    const Grid& grid, double dt_probe);

/** Residual of the ansatz itself (probe step 1e-3/v). */
std::vector<double> residual_lambda(const AnsatzParams& p, double t, const Grid& grid);

/** The interior sub-grid on which residual samples are reported. */
Grid residual_grid(const Grid& grid);

/** L2 norm of the ansatz residual over the interior sub-grid. */
double residual_lambda_l2(const AnsatzParams& p, double t, const Grid& grid);

} // namespace kinklab

#endif
