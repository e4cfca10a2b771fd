#ifndef KINKLAB_IDENTITIES_HPP
#define KINKLAB_IDENTITIES_HPP

#include <functional>
#include <string>
#include <vector>

#include "kinklab/grid.hpp"

namespace kinklab {

struct IdentityCheck {
    std::string name;
    double value = 0.0;
    double reference = 0.0;
    double error = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;
    bool all_pass() const;
    const IdentityCheck* find(const std::string& name) const;
};

/** Flat JSON object: name -> {value, reference, error, tolerance, pass}. */
std::string identity_report_json(const IdentityReport& report);

/**
 * The closed-form scalar identities of the interaction calculus, evaluated by
 * grid quadrature and graded against their exact values:
 *   int U'''(H) H'^2 G - int U'''(H) H'^2 e^{-s2 x} = 4 sqrt2,
 *   -2 int (6 H^5 - 8 H^3) e^{-s2 x}                = 4 sqrt2,
 *   int U'''(H) H'^3                                = 0,
 *   ||H'||^2                                        = 1/(2 sqrt2),
 *   <G, H'>                                         = 0.
 * Tolerances may be overridden by name (e.g. {"kink_mass", 1e-15}).
 */
IdentityReport identity_suite(const Grid& grid,
                              const std::vector<std::pair<std::string, double>>& tol_overrides = {});

inline IdentityReport identity_suite() {
    return identity_suite(Grid::from_range(-40.0, 40.0, 0.005));
}

/** Adaptive Simpson quadrature of f on [a, b] to the requested tolerance. */
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-10, int max_depth = 40);

struct InteractionProbeResult {
    double worst_ratio = 0.0;                  // max over z of I(z)/bound(z)
    std::vector<double> ratios;                // one per z
    std::vector<double> integrals;             // I(z)
    bool monotone_after_burn_in = true;        // non-increasing beyond the first entries
};

/**
 * I(z) = int |x|^m e^{-alpha (x)_+} e^{-beta (z-x)_+} dx by adaptive quadrature
 * split at the kink points 0 and z, compared against the two-exponential bound
 * max((1+z^m) e^{-alpha z}, e^{-beta z})  (alpha != beta), or
 * (1+z^{m+1}) e^{-alpha z}                (alpha == beta).
 */
InteractionProbeResult interaction_bound_probe(double alpha, double beta, int m,
                                               const std::vector<double>& z_values);

/** The m = 0, z = 0 case in closed form: 1/alpha + 1/beta. */
double interaction_integral(double alpha, double beta, int m, double z);

} // namespace kinklab

#endif
