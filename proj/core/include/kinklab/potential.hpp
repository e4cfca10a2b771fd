#ifndef KINKLAB_POTENTIAL_HPP
#define KINKLAB_POTENTIAL_HPP

#include <stdexcept>

namespace kinklab {

// Sextic double-well potential U(p) = p^2 (1 - p^2)^2 = p^2 - 2 p^4 + p^6.
// Vacua at p = 0, +-1 with U''(0) = 2 and U''(+-1) = 8.

inline double potential(double p) {
    double q = 1.0 - p * p;
    return p * p * q * q;
}

/** U^(order)(p) for order in 0..6; every higher derivative vanishes. */
inline double potential_derivative(int order, double p) {
    switch (order) {
        case 0: return potential(p);
        case 1: return p * (2.0 + p * p * (-8.0 + 6.0 * p * p));
        case 2: return 2.0 + p * p * (-24.0 + 30.0 * p * p);
        case 3: return p * (-48.0 + 120.0 * p * p);
        case 4: return -48.0 + 360.0 * p * p;
        case 5: return 720.0 * p;
        case 6: return 720.0;
        default: throw std::invalid_argument("potential_derivative: order must be in 0..6");
    }
}

} // namespace kinklab

#endif
