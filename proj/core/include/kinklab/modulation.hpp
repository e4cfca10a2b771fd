#ifndef KINKLAB_MODULATION_HPP
#define KINKLAB_MODULATION_HPP

#include <array>
#include <vector>

#include "kinklab/ansatz.hpp"
#include "kinklab/grid.hpp"

namespace kinklab {

/**
 * The modulation directions of the moving-kink family at (v, y):
 *   C = -d/dy of the state, D = +d/dv of the state (component-wise).
 */
std::pair<FieldPair, FieldPair> cd_vectors(double v, double y, const Grid& grid);

struct ModulationResult {
    double v_hat = 0.0;
    double y_hat = 0.0;
    FieldPair kappa;                           // state minus the fitted pair
    std::array<double, 2> ortho_residuals{};   // |F1|, |F2| at the solution
    int iterations = 0;
    double v_reference = 0.0;                  // the v0 entering the first condition
    bool converged = false;
};

inline constexpr double kSeparationFloor = 3.0;

/**
 * Damped Newton solve of the two orthogonality conditions
 *   F1 = (v - v0) ||H'||^2 (v0/(1-v0^2)^{3/2} - v0/(1-v0^2)^{1/2}) + v <kappa, J C_{v,y}>,
 *   F2 = <kappa, J D_{v,y}>,
 * with kappa = state - pair(v, y) and a finite-difference Jacobian.
 * Throws on non-convergence (carrying the last iterate in the message) and
 * when an iterate falls below the separation floor y >= 3.
 */
ModulationResult fit_two_kink(const FieldPair& state, double v0, double y0);

/** The two condition values at given (v, y); exposed for oracle tests. */
std::array<double, 2> modulation_conditions(const FieldPair& state, double v, double y, double v0);

struct TwoModeCoefficients {
    double y1 = 0.0;
    double y2 = 0.0;
    FieldPair u;                          // residual after mode subtraction (phi part)
    std::array<std::array<double, 2>, 2> gram{}; // the 2x2 mode Gram matrix
    std::array<double, 2> ortho_residuals{};
};

/**
 * Solves the 2x2 Gram system so that
 *   u = state_phi - ansatz_phi - (y1/gt) H'(w(t,x)) - (y2/gt) H'(w(t,-x))
 * is L2-orthogonal to H'(w(t,x)) and H'(w(t,-x)). Throws if the Gram matrix
 * is near-singular (kinks too close).
 */
TwoModeCoefficients two_mode_decompose(const FieldPair& state, const AnsatzParams& p, double t);

struct VelocitySeriesPoint {
    double t = 0.0;
    double v_hat = 0.0;
    double y_hat = 0.0;
    double kappa_norm = 0.0;
    double ortho_res_1 = 0.0;
    double ortho_res_2 = 0.0;
};

struct VelocitySeries {
    std::vector<VelocitySeriesPoint> points;
    double nu_f = 0.0;   // median v_hat over the final quarter of the window
    double v_drift = 0.0; // spread of v_hat across the window
};

/** Runs fit_two_kink over the snapshots with warm starts. */
VelocitySeries velocity_series(const std::vector<FieldPair>& snapshots, double v0, double y0);

} // namespace kinklab

#endif
