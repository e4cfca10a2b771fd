#include "kinklab/diagnostics.hpp"

#include <cmath>
#include <stdexcept>

#include "kinklab/potential.hpp"
#include "kinklab/quadrature.hpp"

namespace kinklab {

namespace {

bool edges_at_vacuum(const FieldPair& s) {
    auto near_vac = [](double p) {
        return std::abs(p) < 1e-6 || std::abs(p - 1.0) < 1e-6 || std::abs(p + 1.0) < 1e-6;
    };
    return near_vac(s.phi.front()) && near_vac(s.phi.back());
}

} // namespace

double energy(const FieldPair& state, bool* boundary_flag) {
    if (boundary_flag) *boundary_flag = !edges_at_vacuum(state);
    auto dphi = derivative4(state.phi, state.grid);
    std::vector<double> dens(state.size());
    for (std::size_t i = 0; i < state.size(); ++i)
        dens[i] = 0.5 * (state.pi[i] * state.pi[i] + dphi[i] * dphi[i]) + potential(state.phi[i]);
    return integrate(dens, state.grid);
}

double momentum(const FieldPair& state) {
    auto dphi = derivative4(state.phi, state.grid);
    std::vector<double> dens(state.size());
    for (std::size_t i = 0; i < state.size(); ++i) dens[i] = state.pi[i] * dphi[i];
    return integrate(dens, state.grid);
}

HalfLineQuantities half_line_quantities(const FieldPair& state) {
    const Grid& g = state.grid;
    std::size_t i0 = g.index_near(0.0);
    if (std::abs(g.x(i0)) > 1e-9)
        throw std::invalid_argument("half_line_quantities: grid must contain x = 0");

    Grid half(0.0, g.dx, g.n - i0);
    auto dphi = derivative4(state.phi, g);
    std::vector<double> edens(half.n), pdens(half.n);
    for (std::size_t i = 0; i < half.n; ++i) {
        double pi = state.pi[i0 + i], dp = dphi[i0 + i], ph = state.phi[i0 + i];
        edens[i] = 0.5 * (pi * pi + dp * dp) + potential(ph);
        pdens[i] = pi * dp;
    }
    HalfLineQuantities out;
    out.E_plus = integrate(edens, half);
    out.P_plus = -0.5 * integrate(pdens, half);
    out.phi_at_0 = state.phi[i0];
    out.dphi_at_0 = dphi[i0];
    return out;
}

double lyapunov_M(const FieldPair& state, double v0) {
    auto h = half_line_quantities(state);
    return h.E_plus - v0 * h.P_plus;
}

DiagnosticsRecord diagnostics_record(const FieldPair& state, double v0) {
    DiagnosticsRecord r;
    r.t = state.t;
    auto h = half_line_quantities(state);
    r.E_plus = h.E_plus;
    r.P_plus = h.P_plus;
    r.phi_at_0 = h.phi_at_0;
    r.dphi_at_0 = h.dphi_at_0;
    r.M_lyap = h.E_plus - v0 * h.P_plus;
    bool half_line = std::abs(state.grid.x0) < 1e-12;
    if (half_line) {
        r.E = 2.0 * h.E_plus; // odd extension
        r.P = 0.0;
        r.boundary_flag = !(std::abs(state.phi.back()) < 1e-6 ||
                            std::abs(std::abs(state.phi.back()) - 1.0) < 1e-6);
    } else {
        r.E = energy(state, &r.boundary_flag);
        r.P = momentum(state);
    }
    return r;
}

FluxCheckResult flux_check(const std::vector<DiagnosticsRecord>& series) {
    FluxCheckResult out;
    if (series.size() < 3) return out;
    for (std::size_t k = 1; k + 1 < series.size(); ++k) {
        double dt = 0.5 * (series[k + 1].t - series[k - 1].t);
        if (!(dt > 0.0)) throw std::invalid_argument("flux_check: records must be time-ordered");
        double rate = (series[k + 1].P_plus - series[k - 1].P_plus) / (2.0 * dt);
        double s = series[k].dphi_at_0;
        double p0 = series[k].phi_at_0;
        out.max_flux_deviation = std::max(out.max_flux_deviation, std::abs(rate - 0.25 * s * s));
        out.max_flux_deviation_phi0 =
            std::max(out.max_flux_deviation_phi0, std::abs(rate - 0.25 * p0 * p0));
    }
    double m0 = series.front().M_lyap;
    for (std::size_t k = 1; k < series.size(); ++k) {
        double dP = series[k].P_plus - series[k - 1].P_plus;
        out.min_p_plus_increment = std::min(out.min_p_plus_increment, dP);
        out.max_m_increase = std::max(out.max_m_increase, series[k].M_lyap - m0);
    }
    out.p_plus_monotone_1e8 = out.min_p_plus_increment >= -1e-8;
    out.m_nonincreasing_1e7 = out.max_m_increase <= 1e-7;
    return out;
}

} // namespace kinklab
