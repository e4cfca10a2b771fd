#include "kinklab/mod_ode.hpp"

#include <cmath>
#include <stdexcept>

#include "kinklab/identities.hpp"
#include "kinklab/interaction.hpp"
#include "kinklab/rk.hpp"

namespace kinklab {

namespace {
constexpr double kSqrt2 = 1.4142135623730951;

struct Hyper {
    double th, sech2;
    Hyper(double v, double t) {
        double a = kSqrt2 * v * t;
        th = std::tanh(a);
        double e = std::exp(-std::abs(a));
        double sech = 2.0 * e / (1.0 + e * e);
        sech2 = sech * sech;
    }
};

void check_v(double v) {
    if (!(v > 0.0 && v < 1.0)) throw std::domain_error("mod_ode: need 0 < v < 1");
}

// solve Phi(t) adot = r using the closed 2x2 + triangular structure
OdeState4 coefficient_rates(double v, double t, const OdeState4& r) {
    Hyper h(v, t);
    double L11 = h.th, L21 = kSqrt2 * v * t * h.th - 1.0;
    double L13 = kSqrt2 * v * h.sech2;
    double L23 = 2.0 * v * v * t * h.sech2 + kSqrt2 * v * h.th;
    double det = L11 * L23 - L13 * L21; // = sqrt2 v identically
    OdeState4 a{};
    a[0] = (L23 * r[0] - L21 * r[2]) / det;
    a[1] = (-L13 * r[0] + L11 * r[2]) / det;
    a[3] = r[3];
    a[2] = r[1] - t * r[3];
    return a;
}

OdeState4 reconstruct(double v, double t, const OdeState4& a) {
    auto L = fundamental_solutions(v, t);
    OdeState4 y{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) y[j] += a[i] * L[i][j];
    return y;
}
} // namespace

Matrix4 system_matrix(double v, double t) {
    check_v(v);
    Matrix4 m{};
    m[0][2] = 1.0;
    m[1][3] = 1.0;
    m[2][0] = -32.0 * interaction_weight(v, t);
    return m;
}

std::array<OdeState4, 4> fundamental_solutions(double v, double t) {
    check_v(v);
    Hyper h(v, t);
    std::array<OdeState4, 4> L{};
    L[0] = {h.th, 0.0, kSqrt2 * v * h.sech2, 0.0};
    L[1] = {kSqrt2 * v * t * h.th - 1.0, 0.0, 2.0 * v * v * t * h.sech2 + kSqrt2 * v * h.th, 0.0};
    L[2] = {0.0, 1.0, 0.0, 0.0};
    L[3] = {0.0, t, 0.0, 1.0};
    return L;
}

double wronskian(double v, double t) {
    auto L = fundamental_solutions(v, t);
    // expand over the (e2, xi2_dot) block: columns 3,4 live there alone
    double block = L[0][0] * L[1][2] - L[0][2] * L[1][0];
    double tail = L[2][1] * L[3][3] - L[2][3] * L[3][1];
    return -block * tail;
}

std::vector<std::pair<double, OdeState4>> solve_forced(double v, const Forcing4& forcing,
                                                       double t0, const OdeState4& y0, double t1,
                                                       int n_out) {
    check_v(v);
    if (n_out < 1) throw std::invalid_argument("solve_forced: need n_out >= 1");

    // initial coefficients from Phi(t0) a = y0
    Hyper h(v, t0);
    double L11 = h.th, L21 = kSqrt2 * v * t0 * h.th - 1.0;
    double L13 = kSqrt2 * v * h.sech2;
    double L23 = 2.0 * v * v * t0 * h.sech2 + kSqrt2 * v * h.th;
    double det = L11 * L23 - L13 * L21;
    OdeState4 a{};
    a[0] = (L23 * y0[0] - L21 * y0[2]) / det;
    a[1] = (-L13 * y0[0] + L11 * y0[2]) / det;
    a[3] = y0[3];
    a[2] = y0[1] - t0 * y0[3];

    std::vector<std::pair<double, OdeState4>> out;
    out.reserve(n_out + 1);
    out.emplace_back(t0, y0);
    double dt = (t1 - t0) / n_out;
    double t_prev = t0;
    for (int k = 1; k <= n_out; ++k) {
        double t_next = t0 + k * dt;
        for (int c = 0; c < 4; ++c) {
            a[c] += adaptive_simpson(
                [&](double s) { return coefficient_rates(v, s, forcing(s))[c]; }, t_prev, t_next,
                1e-12);
        }
        out.emplace_back(t_next, reconstruct(v, t_next, a));
        t_prev = t_next;
    }
    return out;
}

OdeState4 solve_forced_rk(double v, const Forcing4& forcing, double t0, const OdeState4& y0,
                          double t1, double rtol) {
    check_v(v);
    std::function<OdeState4(double, const OdeState4&)> f = [&](double t, const OdeState4& y) {
        OdeState4 dy = forcing(t);
        dy[0] += y[2];
        dy[1] += y[3];
        dy[2] += -32.0 * interaction_weight(v, t) * y[0];
        return dy;
    };
    return rk45<4>(f, t0, y0, t1, rtol);
}

} // namespace kinklab
