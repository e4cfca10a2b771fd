#include "doctest.h"

#include <cmath>

#include "kinklab/ansatz.hpp"
#include "kinklab/diagnostics.hpp"
#include "kinklab/evolve.hpp"
#include "kinklab/null_modes.hpp"
#include "kinklab/quadrature.hpp"

using namespace kinklab;

namespace {

// half-height crossing of the kink profile, linearly interpolated
double crossing(const FieldPair& s) {
    const double c = 0.70710678118654752;
    for (std::size_t i = 0; i + 1 < s.grid.n; ++i)
        if (s.phi[i] < c && s.phi[i + 1] >= c) {
            double f = (c - s.phi[i]) / (s.phi[i + 1] - s.phi[i]);
            return s.grid.x(i) + f * s.grid.dx;
        }
    return -1e9;
}

} // namespace

TEST_CASE("static kink stays put") {
    Grid g = Grid::from_range(-30.0, 30.0, 0.02);
    FieldPair init = moving_kink_state(MovingKink(KinkOrientation::rise01, 0.0, 0.0), 0.0, g);
    EvolveConfig cfg;
    cfg.dt = 0.005;
    FieldPair out = evolve(init, cfg, 50.0);
    FieldPair diff = field_difference(out, init);
    CHECK(sobolev_norms(diff).h1_phi < 1e-5);
}

TEST_CASE("boosted kink: position and energy over 50 time units") {
    Grid g = Grid::from_range(-40.0, 45.0, 0.02);
    MovingKink k(KinkOrientation::rise01, 0.2, 0.0);
    FieldPair init = moving_kink_state(k, 0.0, g);
    EvolveConfig cfg;
    cfg.dt = 0.005;
    cfg.record_every = 2000;

    double drift = 0.0;
    double e0 = 0.0;
    bool first = true;
    auto sink = [&](const FieldPair& s) {
        double e = energy(s);
        if (first) {
            e0 = e;
            first = false;
        }
        drift = std::max(drift, std::abs(e - e0) / e0);
    };
    FieldPair out = evolve(init, cfg, 50.0, sink);

    double pos_err = std::abs(crossing(out) - 0.2 * 50.0);
    MESSAGE("position error: ", pos_err, ", energy drift: ", drift);
    CHECK(pos_err < 0.01);
    CHECK(drift < 1e-6);

    // halving (dx, dt) improves the position error by >= 3.5x
    Grid g2 = Grid::from_range(-40.0, 45.0, 0.01);
    EvolveConfig cfg2;
    cfg2.dt = 0.0025;
    FieldPair out2 = evolve(moving_kink_state(k, 0.0, g2), cfg2, 50.0);
    double pos_err2 = std::abs(crossing(out2) - 10.0);
    MESSAGE("refined position error: ", pos_err2);
    CHECK(pos_err / pos_err2 >= 3.5);
}

TEST_CASE("time reversal returns the initial data") {
    Grid g = Grid::from_range(-35.0, 35.0, 0.02);
    FieldPair init = ansatz_state({0.1, true, 0.0}, -15.0, g);
    init.phi.front() = -1.0;
    init.phi.back() = 1.0;
    init.pi.front() = init.pi.back() = 0.0;
    EvolveConfig cfg;
    cfg.dt = 0.01;
    FieldPair fwd = evolve(init, cfg, init.t + 12.0);
    for (auto& p : fwd.pi) p = -p;
    FieldPair back = evolve(fwd, cfg, fwd.t + 12.0);
    for (auto& p : back.pi) p = -p;
    FieldPair diff = field_difference(back, init);
    CHECK(energy_norm(diff) < 1e-6);
}

TEST_CASE("odd-half-line agrees with the full line") {
    Grid full = Grid::from_range(-40.0, 40.0, 0.02);
    FieldPair finit = ansatz_state({0.1, true, 0.0}, -20.0, full);
    finit.phi.front() = -1.0;
    finit.phi.back() = 1.0;
    finit.pi.front() = finit.pi.back() = 0.0;
    EvolveConfig fc;
    fc.dt = 0.005;
    FieldPair fout = evolve(finit, fc, -20.0 + 15.0);

    Grid half = Grid::from_range(0.0, 40.0, 0.02);
    FieldPair hinit = ansatz_state({0.1, true, 0.0}, -20.0, half);
    hinit.phi.front() = 0.0;
    hinit.pi.front() = 0.0;
    hinit.phi.back() = 1.0;
    hinit.pi.back() = 0.0;
    EvolveConfig hc;
    hc.dt = 0.005;
    hc.boundary = BoundaryMode::odd_half_line;
    FieldPair hout = evolve(hinit, hc, -20.0 + 15.0);

    std::size_t offset = full.index_near(0.0);
    double worst = 0.0;
    for (std::size_t i = 0; i < half.n; ++i) {
        worst = std::max(worst, std::abs(hout.phi[i] - fout.phi[offset + i]));
        worst = std::max(worst, std::abs(hout.pi[i] - fout.pi[offset + i]));
    }
    MESSAGE("half/full mismatch: ", worst);
    CHECK(worst < 1e-8);
}

TEST_CASE("usage and divergence errors") {
    Grid g = Grid::from_range(-20.0, 20.0, 0.02);
    FieldPair init = moving_kink_state(MovingKink(KinkOrientation::rise01, 0.0, 0.0), 0.0, g);
    EvolveConfig cfg;
    cfg.dt = 0.02; // violates dt <= 0.5 dx
    CHECK_THROWS_AS(evolve(init, cfg, 1.0), std::invalid_argument);

    EvolveConfig ok;
    ok.dt = 0.005;
    FieldPair bad = init;
    for (auto& p : bad.phi) p += 0.4; // edges no longer at a vacuum
    CHECK_THROWS_AS(evolve(bad, ok, 1.0), std::invalid_argument);

    EvolveConfig oc;
    oc.dt = 0.005;
    oc.boundary = BoundaryMode::odd_half_line;
    CHECK_THROWS_AS(evolve(init, oc, 1.0), std::invalid_argument); // grid not at x=0
}

TEST_CASE("linearized flow: zero data and the exact null directions") {
    Grid g = Grid::from_range(-28.0, 32.0, 0.02);
    MovingKink k(KinkOrientation::rise01, 0.1, 0.0);
    EvolveConfig cfg;
    cfg.dt = 0.005;

    FieldPair zero(g, 0.0);
    FieldPair out = evolve_linearized(k, zero, cfg, 10.0);
    CHECK(energy_norm(out) == 0.0);

    // Y^0 is preserved
    FieldPair y0 = y_solution(0, KinkOrientation::rise01, 0.1, 0.0, g);
    double n0 = energy_norm(y0);
    FieldPair y0t = evolve_linearized(k, y0, cfg, 10.0);
    FieldPair y0ref = y_solution(0, KinkOrientation::rise01, 0.1, 10.0, g);
    double r0 = energy_norm(field_difference(y0t, y0ref)) / n0;
    MESSAGE("Y0 propagation residual: ", r0);
    CHECK(r0 < 1e-3);

    // Y^1 including its secular linear-in-t part
    FieldPair y1 = y_solution(1, KinkOrientation::rise01, 0.1, 0.0, g);
    FieldPair y1t = evolve_linearized(k, y1, cfg, 10.0);
    FieldPair y1ref = y_solution(1, KinkOrientation::rise01, 0.1, 10.0, g);
    double r1 = energy_norm(field_difference(y1t, y1ref)) / energy_norm(y1ref);
    MESSAGE("Y1 propagation residual: ", r1);
    CHECK(r1 < 1e-3);

    // the left-moving orientation as well
    MovingKink km(KinkOrientation::rise_m10, -0.1, 0.0);
    FieldPair w0 = y_solution(0, KinkOrientation::rise_m10, 0.1, 0.0, g);
    FieldPair w0t = evolve_linearized(km, w0, cfg, 10.0);
    FieldPair w0ref = y_solution(0, KinkOrientation::rise_m10, 0.1, 10.0, g);
    CHECK(energy_norm(field_difference(w0t, w0ref)) / energy_norm(w0) < 1e-3);
}

TEST_CASE("convergence order of the evolved boosted kink") {
    MovingKink k(KinkOrientation::rise01, 0.2, 0.0);
    auto h1_error = [&](double dx, double dt) {
        Grid g = Grid::from_range(-30.0, 35.0, dx);
        EvolveConfig c;
        c.dt = dt;
        FieldPair out = evolve(moving_kink_state(k, 0.0, g), c, 20.0);
        FieldPair ref = moving_kink_state(k, 20.0, g);
        return energy_norm(field_difference(out, ref));
    };
    // the (0.04, 0.01) pair sits in a space-time error cancellation dip, so
    // measure the halving factor on the two clean pairs around it
    double e1 = h1_error(0.08, 0.02);
    double e2 = h1_error(0.04, 0.01);
    double e3 = h1_error(0.02, 0.005);
    double e4 = h1_error(0.01, 0.0025);
    MESSAGE("global errors: ", e1, " ", e2, " ", e3, " ", e4);
    CHECK(e1 / e2 >= 3.5);
    CHECK(e3 / e4 >= 3.5);
}
