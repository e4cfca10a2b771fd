#ifndef KINKLAB_SPECTRAL_HPP
#define KINKLAB_SPECTRAL_HPP

#include <cstdint>

#include "kinklab/banded.hpp"
#include "kinklab/grid.hpp"

namespace kinklab {

enum class ProfileKind {
    single_kink,  // H(x)
    kink_pair,    // H(x - z) + H_{-1,0}(x)
    boosted_pair, // H(w) + H_{-1,0}(-w(-x)) in the separation frame at (v, t)
    single_moving // H((x - v t)/gamma)
};

struct OperatorSpec {
    ProfileKind kind = ProfileKind::single_kink;
    Grid grid;
    double z = 12.0; // pair separation (kink_pair)
    double v = 0.1;  // boosted kinds
    double t = 0.0;

    OperatorSpec() = default;
    OperatorSpec(ProfileKind k, Grid g) : kind(k), grid(std::move(g)) {}
};

/** Background field the operator linearizes around. */
std::vector<double> operator_profile(const OperatorSpec& spec);

/** The two translation directions of the profile (single kinds give one). */
std::vector<std::vector<double>> translation_modes(const OperatorSpec& spec);

/** 4th-order discretization of -d_xx + U''(profile) with Dirichlet ends. */
SymBanded assemble(const OperatorSpec& spec);

struct SpectrumResult {
    std::vector<double> eigenvalues;               // ascending
    std::vector<std::vector<double>> eigenvectors; // grid-normalized (||psi||_L2 = 1)
    std::vector<double> residual_norms;            // ||A psi - lambda psi||_L2
};

/**
 * The m smallest eigenpairs by Sturm bisection on the banded form plus
 * inverse iteration, eigenvalues polished by Rayleigh quotients.
 */
SpectrumResult lowest_spectrum(const SymBanded& A, const Grid& grid, int m);

/**
 * Minimum over random smooth trials, projected against the translation
 * modes, of the Rayleigh quotient <A g, g>/||g||_{H1}^2 (all by quadrature).
 */
double coercivity_check(const OperatorSpec& spec, int trial_count, std::uint64_t seed = 2024);

/**
 * The momentum-corrected quadratic form around the pure two-kink background,
 *   Q = (1/2) int pi^2 + phi_x^2 + U''(H((x-vt)/g) + H_{-1,0}((x+vt)/g)) phi^2
 *       + v int (chi_2 - chi_1) pi phi_x,
 * with smooth cutoffs switching between 2(1-1e-3) and 2 around the rays
 * x = -+ p(v) t, p(v) = (v/2)(1 - 1e-3). Requires t > 0.
 */
double q_functional(const FieldPair& r, double v, double t);

/**
 * The separation-frame quadratic form
 *   int pi^2 + phi_x^2 + U''(H(w(t,x)) - H(w(t,-x))) phi^2 dx.
 */
double quadratic_form_L1(const FieldPair& u, double v, double t);

} // namespace kinklab

#endif
