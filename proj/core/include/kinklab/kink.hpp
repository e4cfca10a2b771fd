#ifndef KINKLAB_KINK_HPP
#define KINKLAB_KINK_HPP

#include "kinklab/grid.hpp"

namespace kinklab {

// The four heteroclinic profiles, tagged by which vacua they connect.
enum class KinkOrientation {
    rise01,   // 0 -> 1  (the reference profile H)
    rise_m10, // -1 -> 0, equal to -H(-x)
    fall10,   // 1 -> 0, equal to H(-x)
    fall0m1   // 0 -> -1, equal to -H(x)
};

/**
 * d^order/dx^order of the reference kink H(x) = e^{sqrt2 x} / (1 + e^{2 sqrt2 x})^{1/2},
 * order in 0..3. Evaluation is split at x = 0 into algebraically equivalent forms in
 * u = e^{-2 sqrt2 x} (right) and s = e^{2 sqrt2 x} (left) so no intermediate overflows;
 * values saturate exactly to the asymptotic limits for large |x|.
 */
double kink_eval(int order, double x);

/** Same derivative orders for an arbitrary orientation, via the reflection algebra. */
double kink_profile(KinkOrientation o, int order, double x);

/** One Lorentz-boosted (anti)kink: orientation, velocity |v| < 1, center offset y. */
struct MovingKink {
    KinkOrientation orientation = KinkOrientation::rise01;
    double v = 0.0;
    double y = 0.0;

    MovingKink() = default;
    MovingKink(KinkOrientation o, double v_, double y_);

    double gamma() const; // sqrt(1 - v^2)
};

/** Samples of the traveling wave phi = K((x - v t - y)/gamma), pi = -(v/gamma) K'(.). */
FieldPair moving_kink_state(const MovingKink& kink, double t, const Grid& grid);

/**
 * The odd two-kink configuration of the modulation family: rise_m10 at -y moving with
 * velocity -v plus rise01 at +y moving with velocity +v (outgoing for v > 0), sampled
 * at the instant where the centers sit at -+y.
 */
FieldPair exact_pair_state(double v, double y, const Grid& grid);

} // namespace kinklab

#endif
