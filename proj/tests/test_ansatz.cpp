#include "doctest.h"

#include <cmath>

#include "kinklab/ansatz.hpp"
#include "kinklab/interaction.hpp"
#include "kinklab/kink.hpp"
#include "kinklab/quadrature.hpp"

using namespace kinklab;

TEST_CASE("frame_w basics") {
    double v = 0.1;
    // frame center at t = 0
    CHECK(frame_w(v, 0.0, 0.5 * separation(v, 0.0, 0)) == doctest::Approx(0.0).epsilon(1e-14));
    // contraction factor approaches the Lorentz gamma as |t| grows
    double t = 400.0;
    double dd = separation(v, t, 1);
    CHECK(std::sqrt(1.0 - 0.25 * dd * dd) ==
          doctest::Approx(std::sqrt(1.0 - v * v)).epsilon(1e-10));
    // mirrored frame: w(t,-x) evaluated directly
    double d = separation(v, 3.0, 0);
    double gt = std::sqrt(1.0 - 0.25 * std::pow(separation(v, 3.0, 1), 2));
    CHECK(frame_w(v, 3.0, -2.0) == doctest::Approx((-2.0 - 0.5 * d) / gt).epsilon(1e-14));
    CHECK_THROWS_AS(frame_w(0.0, 0.0, 0.0), std::domain_error);
}

TEST_CASE("ansatz state is odd") {
    Grid g = Grid::from_range(-60.0, 60.0, 0.02);
    AnsatzParams p{0.1, true, 0.0};
    FieldPair s = ansatz_state(p, -10.0, g);
    double worst = 0.0;
    for (std::size_t i = 0; i < g.n; ++i) {
        std::size_t j = g.n - 1 - i;
        worst = std::max(worst, std::abs(s.phi[i] + s.phi[j]));
        worst = std::max(worst, std::abs(s.pi[i] + s.pi[j]));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("ansatz margin preconditions") {
    AnsatzParams p{0.05, true, 0.0};
    // at t = -60/v the separation is large; a narrow grid must be refused
    CHECK_THROWS_AS(ansatz_state(p, -60.0 / p.v, Grid::from_range(-30.0, 30.0, 0.05)),
                    std::domain_error);
    // a half-line grid is accepted (odd extension implied)
    CHECK_NOTHROW(ansatz_state(p, 0.0, Grid::from_range(0.0, 60.0, 0.05)));
    CHECK_THROWS_AS(ansatz_state(AnsatzParams{1.2, true, 0.0}, 0.0,
                                 Grid::from_range(-60.0, 60.0, 0.05)),
                    std::domain_error);
}

TEST_CASE("ansatz pi matches a finite difference in t") {
    Grid g = Grid::from_range(-60.0, 60.0, 0.05);
    AnsatzParams p{0.1, true, 0.0};
    for (double t : {-12.0, 0.0, 7.0}) {
        FieldPair s = ansatz_state(p, t, g);
        double h = 1e-3;
        FieldPair m2 = ansatz_state(p, t - 2 * h, g), m1 = ansatz_state(p, t - h, g);
        FieldPair p1 = ansatz_state(p, t + h, g), p2 = ansatz_state(p, t + 2 * h, g);
        double worst = 0.0;
        for (std::size_t i = 0; i < g.n; ++i) {
            double fd = (m2.phi[i] - 8.0 * m1.phi[i] + 8.0 * p1.phi[i] - p2.phi[i]) / (12.0 * h);
            worst = std::max(worst, std::abs(fd - s.pi[i]));
        }
        CHECK(worst < 1e-8);
    }
}

TEST_CASE("ansatz converges to the free boosted kinks as t grows") {
    double v = 0.1;
    Grid g = Grid::from_range(-120.0, 120.0, 0.02);
    double t = 8.0 / v;
    FieldPair s = ansatz_state({v, true, 0.0}, t, g);
    // free pair on the fixed asymptote y(t) = v t + ln(2/v^2)/(2 sqrt2)
    double y = v * t + std::log(2.0 / (v * v)) / (2.0 * 1.4142135623730951);
    FieldPair freep = exact_pair_state(v, y, g);
    double diff = energy_norm(field_difference(s, freep));
    MESSAGE("norm difference at t = 8/v: ", diff);
    CHECK(diff < 1e-3);
}

TEST_CASE("lambda residual: exact solutions leave only discretization error") {
    Grid g = Grid::from_range(-30.0, 30.0, 0.005);
    // static kink
    {
        MovingKink k(KinkOrientation::rise01, 0.0, 0.0);
        auto states = [&](double t) { return moving_kink_state(k, t, g); };
        auto r = lambda_residual(states, 0.0, g, 5e-3);
        double worst = 0.0;
        for (double x : r) worst = std::max(worst, std::abs(x));
        CHECK(worst < 1e-8);
    }
    // boosted kink
    {
        MovingKink k(KinkOrientation::rise01, 0.2, 0.0);
        auto states = [&](double t) { return moving_kink_state(k, t, g); };
        auto r = lambda_residual(states, 0.0, g, 5e-3);
        CHECK(l2_norm(r, residual_grid(g)) < 1e-6);
    }
}

TEST_CASE("ansatz residual: scaling in v and effect of the correction") {
    Grid g = Grid::from_range(-40.0, 40.0, 0.005);
    std::vector<double> vs = {0.025, 0.05, 0.1};
    std::vector<double> lv, lbare;
    for (double v : vs) {
        double bare = residual_lambda_l2({v, false, 0.0}, 0.0, g);
        double corr = residual_lambda_l2({v, true, 0.0}, 0.0, g);
        MESSAGE("v=", v, " bare=", bare, " corrected=", corr);
        CHECK(corr < bare);
        if (v == 0.05) CHECK(corr * 2.0 <= bare);
        lv.push_back(std::log(v));
        lbare.push_back(std::log(bare));
    }
    // log-log slope of the bare-sum residual at t=0 is ~2
    double n = static_cast<double>(lv.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < lv.size(); ++i) {
        sx += lv[i];
        sy += lbare[i];
        sxx += lv[i] * lv[i];
        sxy += lv[i] * lbare[i];
    }
    double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    MESSAGE("bare residual slope: ", slope);
    CHECK(slope == doctest::Approx(2.0).epsilon(0.15));
}

TEST_CASE("ansatz residual is even in t") {
    Grid g = Grid::from_range(-40.0, 40.0, 0.01);
    AnsatzParams p{0.1, true, 0.0};
    for (double t : {3.0, 11.0}) {
        double rp = residual_lambda_l2(p, t, g);
        double rm = residual_lambda_l2(p, -t, g);
        CHECK(std::abs(rp - rm) < 1e-10);
    }
}

TEST_CASE("ansatz residual decays like the interaction envelope") {
    Grid g = Grid::from_range(-80.0, 80.0, 0.01);
    double v = 0.1;
    AnsatzParams p{v, true, 0.0};
    double r0 = residual_lambda_l2(p, 0.0, g);
    // envelope C e^{-2 sqrt2 v t} (1 + v t)^n with n <= 3; check the ratio at a few times
    for (double t : {5.0, 10.0, 20.0, 40.0}) {
        double rt = residual_lambda_l2(p, t, g);
        double envelope = std::exp(-2.0 * 1.4142135623730951 * v * t) * std::pow(1.0 + v * t, 3.0);
        CHECK(rt / r0 <= 4.0 * envelope);
    }
}
