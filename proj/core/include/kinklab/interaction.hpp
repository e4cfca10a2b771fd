#ifndef KINKLAB_INTERACTION_HPP
#define KINKLAB_INTERACTION_HPP

namespace kinklab {

/**
 * The constant k1 fixing <G, H'> = 0, resolved once per process by quadrature
 * on the default verification grid. Thread-safe, idempotent.
 */
double resolve_k1();

/**
 * The interaction correction profile
 *   G(x) = e^{-s2 x} - e^{-s2 x}(1+e^{2 s2 x})^{-3/2}
 *          + (2 s2 x + k1) e^{s2 x}(1+e^{2 s2 x})^{-3/2},   s2 = sqrt(2),
 * which solves -G'' + U''(H)G = [-24 H^2 + 30 H^4] e^{-s2 x} + 8 s2 H'.
 * Returns d^order/dx^order G for order in 0..2, from closed forms.
 */
double g_correction(int order, double x);

/** Same with an explicit k1 (the extra term is k1 H'/sqrt2, a zero mode). */
double g_correction_with_k1(int order, double x, double k1);

/**
 * Separation law d_v(t) = (1/sqrt2) ln((8/v^2) cosh^2(sqrt2 v t)) and its first
 * two time derivatives, order in 0..2. Requires 0 < v < 1.
 */
double separation(double v, double t, int order);

/** e^{-sqrt2 d_v(t)} evaluated in the overflow-safe form (v^2/8) sech^2(sqrt2 v t). */
double interaction_weight(double v, double t);

} // namespace kinklab

#endif
