#include "kinklab/ansatz.hpp"

#include <cmath>
#include <stdexcept>

#include "kinklab/interaction.hpp"
#include "kinklab/kink.hpp"
#include "kinklab/potential.hpp"
#include "kinklab/quadrature.hpp"

namespace kinklab {

namespace {
constexpr double kSqrt2 = 1.4142135623730951;

struct FrameAtTime {
    double d, dd, ddd;   // separation and derivatives
    double gt, gt_dot;   // sqrt(1 - dd^2/4) and its time derivative
    double q, q_dot;     // e^{-sqrt2 d} and its time derivative

    FrameAtTime(double v, double t) {
        d = separation(v, t, 0);
        dd = separation(v, t, 1);
        ddd = separation(v, t, 2);
        gt = std::sqrt(1.0 - 0.25 * dd * dd);
        gt_dot = -dd * ddd / (4.0 * gt);
        q = interaction_weight(v, t);
        q_dot = -kSqrt2 * dd * q;
    }

    double w(double x) const { return (x - 0.5 * d) / gt; }
    double w_dot(double x) const { return -0.5 * dd / gt - w(x) * gt_dot / gt; }
};

void check_params(const AnsatzParams& p) {
    if (!(p.v > 0.0 && p.v < 1.0)) throw std::domain_error("ansatz: need 0 < v < 1");
    if (!std::isfinite(p.t_shift)) throw std::domain_error("ansatz: t_shift must be finite");
}

void check_margin(const Grid& grid, double half_sep) {
    bool half_line = std::abs(grid.x0) < 1e-12;
    if (grid.x_max() < half_sep + 10.0)
        throw std::domain_error("ansatz: kink center too close to the right boundary");
    if (!half_line && grid.x0 > -half_sep - 10.0)
        throw std::domain_error("ansatz: kink center too close to the left boundary");
}

} // namespace

double frame_w(double v, double t, double x) {
    if (!(v > 0.0 && v < 1.0)) throw std::domain_error("frame_w: need 0 < v < 1");
    return FrameAtTime(v, t).w(x);
}

FieldPair ansatz_state(const AnsatzParams& p, double t, const Grid& grid) {
    check_params(p);
    double tt = t + p.t_shift;
    FrameAtTime f(p.v, tt);
    check_margin(grid, 0.5 * f.d);

    FieldPair out(grid, t);
    for (std::size_t i = 0; i < grid.n; ++i) {
        double x = grid.x(i);
        double wp = f.w(x), wm = f.w(-x);
        double wp_dot = f.w_dot(x), wm_dot = f.w_dot(-x);

        double phi = kink_eval(0, wp) - kink_eval(0, wm);
        double pi = kink_eval(1, wp) * wp_dot - kink_eval(1, wm) * wm_dot;
        if (p.with_correction) {
            double gp = g_correction(0, wp), gm = g_correction(0, wm);
            phi += f.q * (gp - gm);
            pi += f.q_dot * (gp - gm) +
                  f.q * (g_correction(1, wp) * wp_dot - g_correction(1, wm) * wm_dot);
        }
        out.phi[i] = phi;
        out.pi[i] = pi;
    }
    return out;
}

Grid residual_grid(const Grid& grid) { return Grid(grid.x0 + 2.0 * grid.dx, grid.dx, grid.n - 4); }

std::vector<double> lambda_residual(const std::function<FieldPair(double)>& state_at, double t,
                                    const Grid& grid, double dt_probe) {
    // five analytic time slices for the second time derivative
    FieldPair sm2 = state_at(t - 2.0 * dt_probe);
    FieldPair sm1 = state_at(t - dt_probe);
    FieldPair s0 = state_at(t);
    FieldPair sp1 = state_at(t + dt_probe);
    FieldPair sp2 = state_at(t + 2.0 * dt_probe);

    std::vector<double> phixx = second_derivative4(s0.phi, grid);

    double ct = 1.0 / (12.0 * dt_probe * dt_probe);
    std::vector<double> out(grid.n - 4);
    for (std::size_t i = 2; i + 2 < grid.n; ++i) {
        double phitt = ct * (-sm2.phi[i] + 16.0 * sm1.phi[i] - 30.0 * s0.phi[i] +
                             16.0 * sp1.phi[i] - sp2.phi[i]);
        out[i - 2] = phitt - phixx[i] + potential_derivative(1, s0.phi[i]);
    }
    return out;
}

std::vector<double> residual_lambda(const AnsatzParams& p, double t, const Grid& grid) {
    check_params(p);
    return lambda_residual([&](double s) { return ansatz_state(p, s, grid); }, t, grid, 1e-3 / p.v);
}

double residual_lambda_l2(const AnsatzParams& p, double t, const Grid& grid) {
    std::vector<double> r = residual_lambda(p, t, grid);
    return l2_norm(r, residual_grid(grid));
}

} // namespace kinklab
