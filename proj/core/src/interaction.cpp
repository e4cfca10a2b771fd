#include "kinklab/interaction.hpp"

#include <cmath>
#include <stdexcept>

#include "kinklab/kink.hpp"
#include "kinklab/quadrature.hpp"

namespace kinklab {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

// B(x) = e^{-s2 x} (1 - (1+e^{2 s2 x})^{-3/2}); the two factors are computed so
// their product never overflows or cancels catastrophically.
double stable_B(double x) {
    if (x >= 0.0) {
        double u = std::exp(-2.0 * kSqrt2 * x);
        double T = std::pow(u, 1.5) * std::pow(1.0 + u, -1.5); // (1+e^{2 s2 x})^{-3/2}
        return std::exp(-kSqrt2 * x) * (1.0 - T);
    }
    if (x > -20.0) {
        double s = std::exp(2.0 * kSqrt2 * x);
        return std::exp(-kSqrt2 * x) * (-std::expm1(-1.5 * std::log1p(s)));
    }
    // far left: 1 - (1+s)^{-3/2} = 1.5 s - 1.875 s^2 + O(s^3), s <= e^{-40 sqrt2}
    double E = std::exp(kSqrt2 * x);
    double s = E * E;
    return E * (1.5 - 1.875 * s);
}

// A T'(x) = -3 sqrt2 e^{-s2 x} s (1+s)^{-5/2}
double stable_ATp(double x) {
    if (x >= 0.0) {
        double u = std::exp(-2.0 * kSqrt2 * x);
        return -3.0 * kSqrt2 * u * u * std::pow(1.0 + u, -2.5);
    }
    double E = std::exp(kSqrt2 * x);
    double s = E * E;
    return -3.0 * kSqrt2 * E * std::pow(1.0 + s, -2.5);
}

// A T''(x) = e^{-s2 x} (18 s^2 - 12 s)(1+s)^{-7/2}
double stable_ATpp(double x) {
    if (x >= 0.0) {
        double u = std::exp(-2.0 * kSqrt2 * x);
        return (18.0 * u * u - 12.0 * u * u * u) * std::pow(1.0 + u, -3.5);
    }
    double E = std::exp(kSqrt2 * x);
    double s = E * E;
    return E * (18.0 * s - 12.0) * std::pow(1.0 + s, -3.5);
}

} // namespace

double g_correction_with_k1(int order, double x, double k1) {
    double c = 2.0 * kSqrt2 * x + k1;
    // ET = H'/sqrt2 and its derivatives
    double ET = kink_eval(1, x) / kSqrt2;
    switch (order) {
        case 0:
            return stable_B(x) + c * ET;
        case 1: {
            double Bp = -kSqrt2 * stable_B(x) - stable_ATp(x);
            return Bp + 2.0 * kSqrt2 * ET + c * kink_eval(2, x) / kSqrt2;
        }
        case 2: {
            double Bpp = 2.0 * stable_B(x) + 2.0 * kSqrt2 * stable_ATp(x) - stable_ATpp(x);
            return Bpp + 4.0 * kink_eval(2, x) + c * kink_eval(3, x) / kSqrt2;
        }
        default: throw std::invalid_argument("g_correction: order must be in 0..2");
    }
}

double resolve_k1() {
    static const double k1 = [] {
        Grid g = default_verification_grid();
        std::vector<double> num(g.n), den(g.n);
        for (std::size_t i = 0; i < g.n; ++i) {
            double x = g.x(i);
            double hp = kink_eval(1, x);
            num[i] = g_correction_with_k1(0, x, 0.0) * hp;
            den[i] = hp * hp;
        }
        // the k1 term contributes k1 <H'/sqrt2, H'> to <G, H'>
        return -kSqrt2 * integrate(num, g) / integrate(den, g);
    }();
    return k1;
}

double g_correction(int order, double x) { return g_correction_with_k1(order, x, resolve_k1()); }

double separation(double v, double t, int order) {
    if (!(v > 0.0 && v < 1.0)) throw std::domain_error("separation: need 0 < v < 1");
    double a = kSqrt2 * v * t;
    switch (order) {
        case 0: {
            // ln cosh(a) = |a| + log1p(e^{-2|a|}) - ln 2
            double lc = std::abs(a) + std::log1p(std::exp(-2.0 * std::abs(a))) - 0.6931471805599453;
            return (std::log(8.0 / (v * v)) + 2.0 * lc) / kSqrt2;
        }
        case 1: return 2.0 * v * std::tanh(a);
        case 2: {
            double e = std::exp(-std::abs(a));
            double sech = 2.0 * e / (1.0 + e * e);
            return 2.0 * kSqrt2 * v * v * sech * sech;
        }
        default: throw std::invalid_argument("separation: order must be in 0..2");
    }
}

double interaction_weight(double v, double t) {
    if (!(v > 0.0 && v < 1.0)) throw std::domain_error("interaction_weight: need 0 < v < 1");
    double a = kSqrt2 * v * t;
    double e = std::exp(-std::abs(a));
    double sech = 2.0 * e / (1.0 + e * e);
    return v * v / 8.0 * sech * sech;
}

} // namespace kinklab
