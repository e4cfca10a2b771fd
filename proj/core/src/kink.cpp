#include "kinklab/kink.hpp"

#include <cmath>
#include <stdexcept>

namespace kinklab {

namespace {
constexpr double kSqrt2 = 1.4142135623730951;
}

double kink_eval(int order, double x) {
    if (x >= 0.0) {
        // u = e^{-2 sqrt2 x} <= 1
        double u = std::exp(-2.0 * kSqrt2 * x);
        double b = 1.0 + u;
        switch (order) {
            case 0: return 1.0 / std::sqrt(b);
            case 1: return kSqrt2 * u / (b * std::sqrt(b));
            case 2: return 2.0 * u * (u - 2.0) / (b * b * std::sqrt(b));
            case 3: return 2.0 * kSqrt2 * u * (u * u - 10.0 * u + 4.0) / (b * b * b * std::sqrt(b));
        }
    } else {
        // s = e^{2 sqrt2 x} <= 1, E = e^{sqrt2 x} <= 1
        double E = std::exp(kSqrt2 * x);
        double s = E * E;
        double b = 1.0 + s;
        switch (order) {
            case 0: return E / std::sqrt(b);
            case 1: return kSqrt2 * E / (b * std::sqrt(b));
            case 2: return 2.0 * E * (1.0 - 2.0 * s) / (b * b * std::sqrt(b));
            case 3: return 2.0 * kSqrt2 * E * (1.0 - 10.0 * s + 4.0 * s * s) / (b * b * b * std::sqrt(b));
        }
    }
    throw std::invalid_argument("kink_eval: order must be in 0..3");
}

double kink_profile(KinkOrientation o, int order, double x) {
    // H_{-1,0}(x) = -H(-x), H_{1,0}(x) = H(-x), H_{0,-1}(x) = -H(x)
    double sign_k = (order % 2 == 0) ? 1.0 : -1.0; // parity of d^k/dx^k f(-x)
    switch (o) {
        case KinkOrientation::rise01: return kink_eval(order, x);
        case KinkOrientation::rise_m10: return -sign_k * kink_eval(order, -x);
        case KinkOrientation::fall10: return sign_k * kink_eval(order, -x);
        case KinkOrientation::fall0m1: return -kink_eval(order, x);
    }
    throw std::invalid_argument("kink_profile: bad orientation");
}

MovingKink::MovingKink(KinkOrientation o, double v_, double y_) : orientation(o), v(v_), y(y_) {
    if (!(std::abs(v) < 1.0)) throw std::domain_error("MovingKink: need |v| < 1");
}

double MovingKink::gamma() const { return std::sqrt(1.0 - v * v); }

FieldPair moving_kink_state(const MovingKink& kink, double t, const Grid& grid) {
    if (!(std::abs(kink.v) < 1.0)) throw std::domain_error("moving_kink_state: need |v| < 1");
    double g = kink.gamma();
    FieldPair out(grid, t);
    for (std::size_t i = 0; i < grid.n; ++i) {
        double xi = (grid.x(i) - kink.v * t - kink.y) / g;
        out.phi[i] = kink_profile(kink.orientation, 0, xi);
        out.pi[i] = -(kink.v / g) * kink_profile(kink.orientation, 1, xi);
    }
    return out;
}

FieldPair exact_pair_state(double v, double y, const Grid& grid) {
    double g = std::sqrt(1.0 - v * v);
    FieldPair out(grid, 0.0);
    for (std::size_t i = 0; i < grid.n; ++i) {
        double x = grid.x(i);
        double xr = (x - y) / g;
        double xl = (x + y) / g;
        out.phi[i] = kink_eval(0, xr) + kink_profile(KinkOrientation::rise_m10, 0, xl);
        // right kink moves with +v, the mirrored one with -v
        out.pi[i] = -(v / g) * kink_eval(1, xr) + (v / g) * kink_profile(KinkOrientation::rise_m10, 1, xl);
    }
    return out;
}

} // namespace kinklab
