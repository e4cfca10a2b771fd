#ifndef KINKLAB_QUADRATURE_HPP
#define KINKLAB_QUADRATURE_HPP

#include "kinklab/grid.hpp"

namespace kinklab {

/**
 * Composite 4th-order quadrature of grid samples (Simpson, with a 3/8 block
 * when the interval count is odd). O(dx^4) for smooth decaying integrands.
 */
double integrate(const std::vector<double>& samples, const Grid& grid);

/** 4th-order first derivative, centered inside and one-sided at the edges. */
std::vector<double> derivative4(const std::vector<double>& f, const Grid& grid);

/** 4th-order second derivative, centered inside and one-sided at the edges. */
std::vector<double> second_derivative4(const std::vector<double>& f, const Grid& grid);

/** L2 inner product of two sample vectors on the same grid. */
double inner(const std::vector<double>& a, const std::vector<double>& b, const Grid& grid);

inline double l2_norm(const std::vector<double>& a, const Grid& grid) {
    return std::sqrt(inner(a, a, grid));
}

/** Two-component pairing <(f1,f2),(g1,g2)> = int f1 g1 + f2 g2 dx. */
double pair_inner(const FieldPair& a, const FieldPair& b);

struct SobolevNorms {
    double l2_phi = 0.0;
    double h1_phi = 0.0;      // (||phi||^2 + ||d_x phi||^2)^{1/2}
    double l2_pi = 0.0;
    double energy_norm = 0.0; // H^1 x L^2 norm of the pair
};

SobolevNorms sobolev_norms(const FieldPair& a);

inline double energy_norm(const FieldPair& a) { return sobolev_norms(a).energy_norm; }

/** FieldPair difference a - b (same grid), keeping a's timestamp. */
FieldPair field_difference(const FieldPair& a, const FieldPair& b);

/** Default grid for identity verification: [-40, 40] at dx = 0.005. */
Grid default_verification_grid();

} // namespace kinklab

#endif
