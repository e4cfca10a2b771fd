#include "doctest.h"

#include <cmath>

#include "kinklab/diagnostics.hpp"
#include "kinklab/evolve.hpp"
#include "kinklab/kink.hpp"
#include "kinklab/potential.hpp"
#include "kinklab/quadrature.hpp"

using namespace kinklab;

TEST_CASE("vacuum has zero energy and momentum") {
    Grid g = Grid::from_range(-20.0, 20.0, 0.01);
    FieldPair s(g);
    for (auto& p : s.phi) p = 1.0;
    CHECK(std::abs(energy(s)) < 1e-14);
    CHECK(std::abs(momentum(s)) < 1e-14);
}

TEST_CASE("static kink carries the kink mass") {
    Grid g = Grid::from_range(-40.0, 40.0, 0.01);
    FieldPair s = moving_kink_state(MovingKink(KinkOrientation::rise01, 0.0, 0.0), 0.0, g);
    CHECK(std::abs(energy(s) - 0.35355339059327373) < 1e-7);
}

TEST_CASE("boosted kink energy follows the relativistic mass formula") {
    Grid g = Grid::from_range(-40.0, 40.0, 0.01);
    for (double v : {0.1, 0.3}) {
        FieldPair s = moving_kink_state(MovingKink(KinkOrientation::rise01, v, 0.0), 0.0, g);
        CHECK(std::abs(energy(s) * std::sqrt(1.0 - v * v) - 0.35355339059327373) < 1e-6);
    }
}

TEST_CASE("boundary flag on truncated data") {
    Grid g = Grid::from_range(-5.0, 5.0, 0.01);
    FieldPair s = moving_kink_state(MovingKink(KinkOrientation::rise01, 0.0, 0.0), 0.0, g);
    bool flag = false;
    energy(s, &flag);
    CHECK(flag); // H(-5) and H(5) are well away from the vacua at this width
}

TEST_CASE("half-line quantities on odd states") {
    Grid g = Grid::from_range(-30.0, 30.0, 0.01);
    FieldPair s = exact_pair_state(0.12, 8.0, g);
    auto h = half_line_quantities(s);
    // odd state: E = 2 E_plus
    CHECK(energy(s) == doctest::Approx(2.0 * h.E_plus).epsilon(1e-10));
    CHECK(std::abs(h.phi_at_0) < 1e-14);

    // P_plus against a brute quadrature on the right half only
    std::size_t i0 = g.index_near(0.0);
    auto dphi = derivative4(s.phi, g);
    double acc = 0.0; // plain trapezoid as an independent oracle
    for (std::size_t i = i0; i + 1 < g.n; ++i)
        acc += 0.5 * (s.pi[i] * dphi[i] + s.pi[i + 1] * dphi[i + 1]) * g.dx;
    CHECK(h.P_plus == doctest::Approx(-0.5 * acc).epsilon(1e-6));

    // static symmetric pair: P_plus = 0
    FieldPair stat = exact_pair_state(0.0, 8.0, g);
    CHECK(std::abs(half_line_quantities(stat).P_plus) < 1e-14);

    // the left-half quantities: energy identical, the momentum combination negated
    double e_left = 0.0, p_left = 0.0;
    for (std::size_t i = 0; i < i0; ++i) {
        auto cell = [&](std::size_t j) {
            return std::pair{0.5 * (s.pi[j] * s.pi[j] + dphi[j] * dphi[j]) + potential(s.phi[j]),
                             s.pi[j] * dphi[j]};
        };
        auto [ea, pa] = cell(i);
        auto [eb, pb] = cell(i + 1);
        e_left += 0.5 * (ea + eb) * g.dx;
        p_left += 0.5 * (pa + pb) * g.dx;
    }
    CHECK(e_left == doctest::Approx(h.E_plus).epsilon(1e-6));
    CHECK(-0.5 * p_left == doctest::Approx(-h.P_plus).epsilon(1e-6));

    CHECK_THROWS_AS(half_line_quantities(FieldPair(Grid(0.013, 0.1, 64))), std::invalid_argument);
}

TEST_CASE("lyapunov combination reduces to E_plus at v0 = 0") {
    Grid g = Grid::from_range(-30.0, 30.0, 0.01);
    FieldPair s = exact_pair_state(0.1, 7.0, g);
    CHECK(lyapunov_M(s, 0.0) == doctest::Approx(half_line_quantities(s).E_plus).epsilon(1e-14));
}

TEST_CASE("lyapunov value of the exact pair matches the closed leading term") {
    Grid g = Grid::from_range(-50.0, 50.0, 0.01);
    double v0 = 0.1, y0 = 12.0;
    FieldPair s = exact_pair_state(v0, y0, g);
    double m = lyapunov_M(s, v0);
    double g0 = std::sqrt(1.0 - v0 * v0);
    double lead = (0.5 / g0 + 0.5 * g0) * 0.35355339059327373;
    double interaction = y0 * std::exp(-2.0 * 1.4142135623730951 * y0);
    CHECK(std::abs(m - lead) < 1e3 * interaction + 1e-6);
}

TEST_CASE("flux law and monotone quantities along an odd collision run") {
    Grid g = Grid::from_range(0.0, 80.0, 0.02);
    double v = 0.1;
    FieldPair init = exact_pair_state(-v, 10.0, g); // incoming pair on the half line
    init.phi.front() = 0.0;
    init.pi.front() = 0.0;
    init.phi.back() = 1.0;
    init.pi.back() = 0.0;
    EvolveConfig cfg;
    cfg.dt = 0.005;
    cfg.boundary = BoundaryMode::odd_half_line;
    cfg.record_every = 100; // every 0.5 time units

    std::vector<DiagnosticsRecord> recs;
    auto sink = [&](const FieldPair& s) { recs.push_back(diagnostics_record(s, v)); };
    evolve(init, cfg, 130.0, sink); // through the bounce and back out

    auto flux = flux_check(recs);
    MESSAGE("max flux deviation: ", flux.max_flux_deviation);
    MESSAGE("min P_plus increment: ", flux.min_p_plus_increment);
    MESSAGE("max M increase: ", flux.max_m_increase);
    CHECK(flux.max_flux_deviation < 1e-4);
    CHECK(flux.p_plus_monotone_1e8);
    CHECK(flux.m_nonincreasing_1e7);

    // the literal phi(t,0)^2/4 form degenerates to |dP/dt| for odd data and
    // misses the full flux through the origin at closest approach
    CHECK(flux.max_flux_deviation_phi0 > 10.0 * flux.max_flux_deviation);

    // energy conservation along the run
    double e0 = recs.front().E;
    for (const auto& r : recs) CHECK(std::abs(r.E - e0) / e0 < 1e-6);
}

TEST_CASE("static pair: both sides of the flux law vanish") {
    Grid g = Grid::from_range(0.0, 40.0, 0.02);
    FieldPair init = exact_pair_state(0.0, 10.0, g);
    init.phi.front() = 0.0;
    init.pi.front() = 0.0;
    init.phi.back() = 1.0;
    init.pi.back() = 0.0;
    EvolveConfig cfg;
    cfg.dt = 0.005;
    cfg.boundary = BoundaryMode::odd_half_line;
    cfg.record_every = 200;
    std::vector<DiagnosticsRecord> recs;
    evolve(init, cfg, 10.0, [&](const FieldPair& s) { recs.push_back(diagnostics_record(s, 0.0)); });
    auto flux = flux_check(recs);
    CHECK(flux.max_flux_deviation < 1e-8);
}

TEST_CASE("full-line momentum is conserved with vacuum-clamped ends") {
    Grid g = Grid::from_range(-35.0, 40.0, 0.02);
    FieldPair init = moving_kink_state(MovingKink(KinkOrientation::rise01, 0.2, 0.0), 0.0, g);
    EvolveConfig cfg;
    cfg.dt = 0.005;
    cfg.record_every = 800;
    double p0 = momentum(init), worst = 0.0;
    evolve(init, cfg, 20.0,
           [&](const FieldPair& s) { worst = std::max(worst, std::abs(momentum(s) - p0)); });
    MESSAGE("momentum drift: ", worst, " (P0 = ", p0, ")");
    CHECK(worst < 1e-8);
}
