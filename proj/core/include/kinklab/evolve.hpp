#ifndef KINKLAB_EVOLVE_HPP
#define KINKLAB_EVOLVE_HPP

#include <functional>

#include "kinklab/grid.hpp"
#include "kinklab/kink.hpp"

namespace kinklab {

enum class BoundaryMode {
    fixed_vacuum,  // Dirichlet at both ends, frozen to the initial vacuum values
    odd_half_line  // grid starts at x = 0, phi(t,0) = 0, right edge vacuum-clamped
};

struct EvolveConfig {
    double dt = 0.005;
    BoundaryMode boundary = BoundaryMode::fixed_vacuum;
    std::size_t record_every = 0; // snapshot cadence in steps; 0 disables recording
};

/** Called synchronously with each recorded state (including the initial one). */
using SnapshotSink = std::function<void(const FieldPair&)>;

/**
 * Stoermer-Verlet (kick-drift-kick) integration of
 *   d_tt phi = d_xx phi - U'(phi)
 * with the 4th-order spatial Laplacian. Requires dt <= 0.5 dx (CFL) and
 * boundary-compatible data: edge values within 1e-6 of a vacuum for
 * fixed_vacuum, odd data on a grid starting at 0 for odd_half_line.
 * Throws on CFL violation (usage) and on non-finite samples (divergence,
 * with the time stamp in the message).
 */
FieldPair evolve(const FieldPair& state, const EvolveConfig& cfg, double t_final,
                 const SnapshotSink& sink = {});

/**
 * The linearized flow around a moving kink: integrates
 *   d_t w1 = w2,  d_t w2 = d_xx w1 - U''(K((x - v t - y)/gamma)) w1
 * from w's own timestamp to t_final, with zero-Dirichlet ends.
 */
FieldPair evolve_linearized(const MovingKink& background, const FieldPair& w,
                            const EvolveConfig& cfg, double t_final,
                            const SnapshotSink& sink = {});

} // namespace kinklab

#endif
