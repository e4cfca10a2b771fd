#ifndef KINKLAB_DIAGNOSTICS_HPP
#define KINKLAB_DIAGNOSTICS_HPP

#include "kinklab/grid.hpp"

namespace kinklab {

struct DiagnosticsRecord {
    double t = 0.0;
    double E = 0.0;       // total energy (2 E_plus for half-line states)
    double P = 0.0;       // total momentum (0 for odd states)
    double E_plus = 0.0;  // half-line energy
    double P_plus = 0.0;  // -(1/2) int_0^inf pi d_x phi
    double phi_at_0 = 0.0;
    double dphi_at_0 = 0.0; // d_x phi(t,0), the quantity entering the flux law
    double M_lyap = 0.0;    // E_plus - v0 P_plus
    bool boundary_flag = false; // edges not at a vacuum within 1e-6
};

/** Energy of the state over its own grid; flags (not fails) bad edges. */
double energy(const FieldPair& state, bool* boundary_flag = nullptr);

/** Momentum int pi d_x phi over the state's grid. */
double momentum(const FieldPair& state);

struct HalfLineQuantities {
    double E_plus = 0.0;
    double P_plus = 0.0;
    double phi_at_0 = 0.0;
    double dphi_at_0 = 0.0;
};

/**
 * Quadrature over x >= 0 only; phi(t,0) by direct sample. The grid must
 * contain x = 0 as a grid point (usage error otherwise).
 */
HalfLineQuantities half_line_quantities(const FieldPair& state);

/** The Lyapunov combination E_plus - v0 P_plus. */
double lyapunov_M(const FieldPair& state, double v0);

/** Full record; detects half-line grids (x0 = 0) and fills E = 2 E_plus, P = 0. */
DiagnosticsRecord diagnostics_record(const FieldPair& state, double v0);

struct FluxCheckResult {
    double max_flux_deviation = 0.0;        // |dP+/dt - (d_x phi(t,0))^2/4|, centered differences
    double max_flux_deviation_phi0 = 0.0;   // same against phi(t,0)^2/4 (vanishes for odd data)
    double min_p_plus_increment = 0.0;      // most negative P_plus step
    double max_m_increase = 0.0;            // largest M_lyap rise above its running minimum start
    bool p_plus_monotone_1e8 = true;
    bool m_nonincreasing_1e7 = true;
};

/** Grades the momentum flux law and the monotone quantities along a run. */
FluxCheckResult flux_check(const std::vector<DiagnosticsRecord>& series);

} // namespace kinklab

#endif
