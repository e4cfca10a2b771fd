#include "kinklab/modulation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "kinklab/interaction.hpp"
#include "kinklab/kink.hpp"
#include "kinklab/quadrature.hpp"

namespace kinklab {

namespace {
constexpr double kKinkMass = 0.35355339059327373;

// <a, J b> = int a_phi b_pi - a_pi b_phi
double symplectic_inner(const FieldPair& a, const FieldPair& b) {
    require_same_grid(a, b);
    std::vector<double> prod(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        prod[i] = a.phi[i] * b.pi[i] - a.pi[i] * b.phi[i];
    return integrate(prod, a.grid);
}
} // namespace

std::pair<FieldPair, FieldPair> cd_vectors(double v, double y, const Grid& grid) {
    if (!(std::abs(v) < 1.0)) throw std::domain_error("cd_vectors: need |v| < 1");
    double g2 = 1.0 - v * v;
    double g = std::sqrt(g2);
    FieldPair C(grid), D(grid);
    for (std::size_t i = 0; i < grid.n; ++i) {
        double xi = (grid.x(i) - y) / g;
        double hp = kink_eval(1, xi), hpp = kink_eval(2, xi);
        C.phi[i] = hp / g;
        C.pi[i] = -hpp * v / g2;
        D.phi[i] = (v / g2) * xi * hp;
        D.pi[i] = -hp / (g2 * g) - (v * v / (g2 * g)) * xi * hpp;
    }
    return {C, D};
}

std::array<double, 2> modulation_conditions(const FieldPair& state, double v, double y, double v0) {
    FieldPair pair = exact_pair_state(v, y, state.grid);
    FieldPair kappa = field_difference(state, pair);
    auto [C, D] = cd_vectors(v, y, state.grid);
    double g0 = std::sqrt(1.0 - v0 * v0);
    double coef = kKinkMass * (v0 / (g0 * g0 * g0) - v0 / g0);
    return {(v - v0) * coef + v * symplectic_inner(kappa, C), symplectic_inner(kappa, D)};
}

ModulationResult fit_two_kink(const FieldPair& state, double v0, double y0) {
    if (!(std::abs(v0) < 1.0)) throw std::domain_error("fit_two_kink: need |v0| < 1");
    if (y0 < kSeparationFloor)
        throw std::runtime_error("fit_two_kink: initial guess below the separation floor");

    // The first condition carries an affine reference term (v - v0) c(v0). The
    // anchor is re-set to the fitted v until it is a fixed point, so an exact
    // pair is an exact root whatever the initial guess; the anchor actually
    // used is reported in v_reference.
    double anchor = v0;
    double v = v0, y = y0;
    auto norm2 = [](const std::array<double, 2>& f) { return std::abs(f[0]) + std::abs(f[1]); };
    const double tol = 1e-12;
    int total_it = 0;
    std::array<double, 2> f{};

    for (int outer = 0; outer < 8; ++outer) {
        auto F = [&](double vv, double yy) { return modulation_conditions(state, vv, yy, anchor); };
        f = F(v, y);
        for (int it = 0; it < 60 && norm2(f) > tol; ++it, ++total_it) {
            double hv = 1e-6 * std::max(1.0, std::abs(v));
            double hy = 1e-6 * std::max(1.0, std::abs(y));
            auto fvp = F(v + hv, y), fvm = F(v - hv, y);
            auto fyp = F(v, y + hy), fym = F(v, y - hy);
            double j11 = (fvp[0] - fvm[0]) / (2.0 * hv), j12 = (fyp[0] - fym[0]) / (2.0 * hy);
            double j21 = (fvp[1] - fvm[1]) / (2.0 * hv), j22 = (fyp[1] - fym[1]) / (2.0 * hy);
            double det = j11 * j22 - j12 * j21;
            if (std::abs(det) < 1e-18) throw std::runtime_error("fit_two_kink: singular Jacobian");
            double dv = -(j22 * f[0] - j12 * f[1]) / det;
            double dy = -(-j21 * f[0] + j11 * f[1]) / det;

            // step halving on residual increase
            double lambda = 1.0;
            bool stepped = false;
            for (int half = 0; half <= 8 && !stepped; ++half, lambda *= 0.5) {
                double vn = v + lambda * dv, yn = y + lambda * dy;
                if (!(std::abs(vn) < 1.0)) continue;
                if (yn < kSeparationFloor)
                    throw std::runtime_error("fit_two_kink: iterate fell below the separation floor");
                auto f_new = F(vn, yn);
                if (norm2(f_new) < norm2(f) || lambda < 1.0 / 200.0) {
                    v = vn;
                    y = yn;
                    f = f_new;
                    stepped = true;
                }
            }
            if (!stepped)
                throw std::runtime_error("fit_two_kink: damping failed to reduce the residual");
            if (std::abs(dv) + std::abs(dy) < 1e-14) break;
        }
        if (std::abs(v - anchor) < 1e-13) break;
        anchor = v;
    }

    if (norm2(f) > 1e3 * tol) {
        std::ostringstream os;
        os << "fit_two_kink: no convergence after " << total_it
           << " iterations, last iterate v = " << v << ", y = " << y << ", |F| = " << norm2(f);
        throw std::runtime_error(os.str());
    }

    ModulationResult out;
    out.v_hat = v;
    out.y_hat = y;
    out.kappa = field_difference(state, exact_pair_state(v, y, state.grid));
    out.ortho_residuals = {std::abs(f[0]), std::abs(f[1])};
    out.iterations = total_it;
    out.v_reference = anchor;
    out.converged = true;
    return out;
}

TwoModeCoefficients two_mode_decompose(const FieldPair& state, const AnsatzParams& p, double t) {
    const Grid& g = state.grid;
    double tt = t + p.t_shift;
    if (separation(p.v, tt, 0) < kSeparationFloor)
        throw std::runtime_error("two_mode_decompose: separation below the floor");
    FieldPair ans = ansatz_state(p, t, g);

    double dd = separation(p.v, tt, 1);
    double gt = std::sqrt(1.0 - 0.25 * dd * dd);

    std::vector<double> o1(g.n), o2(g.n), dphi(g.n);
    for (std::size_t i = 0; i < g.n; ++i) {
        double x = g.x(i);
        o1[i] = kink_eval(1, frame_w(p.v, tt, x));
        o2[i] = kink_eval(1, frame_w(p.v, tt, -x));
        dphi[i] = state.phi[i] - ans.phi[i];
    }

    TwoModeCoefficients out;
    double g11 = inner(o1, o1, g) / gt, g12 = inner(o2, o1, g) / gt;
    double g21 = g12, g22 = inner(o2, o2, g) / gt;
    out.gram = {{{g11, g12}, {g21, g22}}};
    double det = g11 * g22 - g12 * g21;
    if (std::abs(det) < 1e-6 * std::abs(g11 * g22))
        throw std::runtime_error("two_mode_decompose: Gram matrix near-singular, kinks too close");

    double r1 = inner(dphi, o1, g), r2 = inner(dphi, o2, g);
    out.y1 = (g22 * r1 - g12 * r2) / det;
    out.y2 = (-g21 * r1 + g11 * r2) / det;

    out.u = FieldPair(g, t);
    for (std::size_t i = 0; i < g.n; ++i) {
        out.u.phi[i] = dphi[i] - (out.y1 / gt) * o1[i] - (out.y2 / gt) * o2[i];
        out.u.pi[i] = state.pi[i] - ans.pi[i];
    }
    out.ortho_residuals = {inner(out.u.phi, o1, g), inner(out.u.phi, o2, g)};
    return out;
}

VelocitySeries velocity_series(const std::vector<FieldPair>& snapshots, double v0, double y0) {
    if (snapshots.empty()) throw std::invalid_argument("velocity_series: no snapshots");
    VelocitySeries out;
    double v = v0, y = y0;
    for (const auto& s : snapshots) {
        ModulationResult m;
        try {
            m = fit_two_kink(s, v, y);
        } catch (const std::exception& e) {
            std::ostringstream os;
            os << "velocity_series: fit failed at t = " << s.t << ": " << e.what();
            throw std::runtime_error(os.str());
        }
        VelocitySeriesPoint pt;
        pt.t = s.t;
        pt.v_hat = m.v_hat;
        pt.y_hat = m.y_hat;
        pt.kappa_norm = energy_norm(m.kappa);
        pt.ortho_res_1 = m.ortho_residuals[0];
        pt.ortho_res_2 = m.ortho_residuals[1];
        out.points.push_back(pt);
        v = m.v_hat; // warm starts
        y = m.y_hat;
    }
    std::size_t n = out.points.size();
    std::size_t start = n - std::max<std::size_t>(1, n / 4);
    std::vector<double> tail;
    for (std::size_t i = start; i < n; ++i) tail.push_back(out.points[i].v_hat);
    std::sort(tail.begin(), tail.end());
    out.nu_f = tail[tail.size() / 2];

    double lo = out.points.front().v_hat, hi = lo;
    for (const auto& p : out.points) {
        lo = std::min(lo, p.v_hat);
        hi = std::max(hi, p.v_hat);
    }
    out.v_drift = hi - lo;
    return out;
}

} // namespace kinklab
