#include "doctest.h"

#include <cmath>
#include <random>

#include "kinklab/interaction.hpp"
#include "kinklab/kink.hpp"
#include "kinklab/potential.hpp"
#include "kinklab/quadrature.hpp"

using namespace kinklab;

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

// Richardson-extrapolated central difference, an oracle independent of the
// closed-form derivative implementations.
template <typename F>
double fd_derivative(F f, double x, double h = 1e-3) {
    auto d = [&](double hh) { return (f(x + hh) - f(x - hh)) / (2.0 * hh); };
    double d1 = d(h), d2 = d(h / 2.0);
    return (4.0 * d2 - d1) / 3.0;
}

} // namespace

TEST_CASE("potential derivatives at the named points") {
    CHECK(potential_derivative(0, 0.0) == 0.0);
    CHECK(potential_derivative(2, 0.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(potential_derivative(2, 1.0) == doctest::Approx(8.0).epsilon(1e-15));
    CHECK(potential_derivative(1, 1.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(potential_derivative(6, 3.7) == 720.0);
    CHECK_THROWS_AS(potential_derivative(7, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(potential_derivative(-1, 0.0), std::invalid_argument);
}

TEST_CASE("potential symmetry and positivity") {
    for (double p = -1.0; p <= 1.0; p += 0.05) {
        CHECK(potential(p) >= 0.0);
        CHECK(potential(-p) == doctest::Approx(potential(p)).epsilon(1e-15));
    }
    CHECK(potential(1.0) == 0.0);
    CHECK(potential(-1.0) == 0.0);
}

TEST_CASE("potential derivatives against finite differences of U") {
    for (double p : {-0.9, -0.3, 0.0, 0.4, 0.7, 1.0, 1.3}) {
        for (int k = 0; k < 6; ++k) {
            double fd = fd_derivative([&](double q) { return potential_derivative(k, q); }, p);
            CHECK(potential_derivative(k + 1, p) == doctest::Approx(fd).epsilon(1e-8));
        }
    }
}

TEST_CASE("kink profile values") {
    CHECK(kink_eval(0, 0.0) == doctest::Approx(0.70710678118654752).epsilon(1e-15));
    CHECK(kink_eval(1, 0.0) == doctest::Approx(0.5).epsilon(1e-14));
    // saturation at the vacua
    CHECK(kink_eval(0, 1000.0) == doctest::Approx(1.0));
    CHECK(kink_eval(0, -1000.0) == doctest::Approx(0.0));
    CHECK(std::isfinite(kink_eval(3, 5000.0)));
    CHECK(std::isfinite(kink_eval(3, -5000.0)));
    CHECK_THROWS_AS(kink_eval(4, 0.0), std::invalid_argument);
}

TEST_CASE("kink derivatives against a Richardson oracle") {
    for (double x : {-8.0, -2.5, -0.7, 0.0, 0.4, 1.9, 6.0}) {
        for (int k = 0; k < 3; ++k) {
            double fd = fd_derivative([&](double q) { return kink_eval(k, q); }, x);
            CHECK(kink_eval(k + 1, x) == doctest::Approx(fd).epsilon(1e-9));
        }
    }
}

TEST_CASE("Bogomolny identity on the verification grid") {
    Grid g = default_verification_grid();
    double worst = 0.0;
    for (std::size_t i = 0; i < g.n; ++i) {
        double x = g.x(i);
        double r = kink_eval(1, x) - std::sqrt(2.0 * potential(kink_eval(0, x)));
        worst = std::max(worst, std::abs(r));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("stationarity -H'' + U'(H) = 0") {
    // closed forms cancel to rounding
    for (double x = -15.0; x <= 15.0; x += 0.1) {
        CHECK(std::abs(-kink_eval(2, x) + potential_derivative(1, kink_eval(0, x))) < 1e-13);
    }
    // 4th-order stencil on interior points of a grid
    Grid g = Grid::from_range(-20.0, 20.0, 0.005);
    std::vector<double> h(g.n);
    for (std::size_t i = 0; i < g.n; ++i) h[i] = kink_eval(0, g.x(i));
    auto hxx = second_derivative4(h, g);
    double worst = 0.0;
    for (std::size_t i = 2; i + 2 < g.n; ++i)
        worst = std::max(worst, std::abs(-hxx[i] + potential_derivative(1, h[i])));
    CHECK(worst < 1e-8);
}

TEST_CASE("decay bounds with a measured constant") {
    double worst_c = 0.0;
    for (double x = -30.0; x <= 30.0; x += 0.05) {
        CHECK(std::abs(kink_eval(0, x)) <= std::exp(kSqrt2 * std::min(x, 0.0)) + 1e-15);
        double bound = std::min(std::exp(kSqrt2 * x), std::exp(-2.0 * kSqrt2 * x));
        worst_c = std::max(worst_c, std::abs(kink_eval(1, x)) / bound);
    }
    CHECK(worst_c <= kSqrt2 + 1e-12);
    MESSAGE("measured decay constant C = ", worst_c);
}

TEST_CASE("reflection algebra of the four orientations") {
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> ux(-12.0, 12.0);
    for (int i = 0; i < 200; ++i) {
        double x = ux(rng);
        CHECK(kink_profile(KinkOrientation::rise_m10, 0, x) ==
              doctest::Approx(-kink_eval(0, -x)).epsilon(1e-15));
        CHECK(kink_profile(KinkOrientation::fall10, 0, x) ==
              doctest::Approx(kink_eval(0, -x)).epsilon(1e-15));
        CHECK(kink_profile(KinkOrientation::fall0m1, 0, x) ==
              doctest::Approx(-kink_eval(0, x)).epsilon(1e-15));
        // derivative parity carried through the reflections
        CHECK(kink_profile(KinkOrientation::rise_m10, 1, x) ==
              doctest::Approx(kink_eval(1, -x)).epsilon(1e-15));
        CHECK(kink_profile(KinkOrientation::fall10, 2, x) ==
              doctest::Approx(kink_eval(2, -x)).epsilon(1e-15));
    }
}

TEST_CASE("moving kink: stationary case and traveling-wave property") {
    Grid g = Grid::from_range(-30.0, 30.0, 0.01);
    MovingKink still(KinkOrientation::rise01, 0.0, 1.5);
    FieldPair a = moving_kink_state(still, 0.0, g);
    FieldPair b = moving_kink_state(still, 17.0, g);
    for (std::size_t i = 0; i < g.n; ++i) {
        CHECK(a.pi[i] == 0.0);
        CHECK(a.phi[i] == b.phi[i]);
    }

    // state at time t equals state at 0 translated by v t (pick v t = whole cells)
    MovingKink mk(KinkOrientation::rise01, 0.25, 0.0);
    double t = 40.0 * g.dx / 0.25;
    FieldPair s0 = moving_kink_state(mk, 0.0, g);
    FieldPair st = moving_kink_state(mk, t, g);
    double worst = 0.0;
    for (std::size_t i = 40; i < g.n; ++i) {
        worst = std::max(worst, std::abs(st.phi[i] - s0.phi[i - 40]));
        worst = std::max(worst, std::abs(st.pi[i] - s0.pi[i - 40]));
    }
    CHECK(worst < 1e-13);

    MovingKink bad;
    bad.v = 1.0;
    CHECK_THROWS_AS(moving_kink_state(bad, 0.0, g), std::domain_error);
    CHECK_THROWS_AS(MovingKink(KinkOrientation::rise01, 1.0, 0.0), std::domain_error);
}

TEST_CASE("moving kink reflection relation") {
    Grid g = Grid::from_range(-25.0, 25.0, 0.02);
    double v = 0.17, y = 2.3, t = 3.7;
    FieldPair lhs = moving_kink_state(MovingKink(KinkOrientation::rise_m10, v, y), t, g);
    // equals the negated space reflection of rise01 with flipped velocity and center
    FieldPair rhs = moving_kink_state(MovingKink(KinkOrientation::rise01, -v, -y), t, g);
    double worst = 0.0;
    for (std::size_t i = 0; i < g.n; ++i) {
        std::size_t j = g.n - 1 - i;
        worst = std::max(worst, std::abs(lhs.phi[i] + rhs.phi[j]));
        worst = std::max(worst, std::abs(lhs.pi[i] + rhs.pi[j]));
    }
    CHECK(worst < 1e-14);
}

TEST_CASE("moving kink energy equals mass over gamma") {
    Grid g = Grid::from_range(-40.0, 40.0, 0.01);
    for (double v : {0.0, 0.1, 0.3}) {
        FieldPair s = moving_kink_state(MovingKink(KinkOrientation::rise01, v, 0.0), 0.0, g);
        auto dphi = derivative4(s.phi, g);
        std::vector<double> dens(g.n);
        for (std::size_t i = 0; i < g.n; ++i)
            dens[i] = 0.5 * (s.pi[i] * s.pi[i] + dphi[i] * dphi[i]) + potential(s.phi[i]);
        double E = integrate(dens, g);
        double expected = 0.35355339059327373 / std::sqrt(1.0 - v * v);
        CHECK(E == doctest::Approx(expected).epsilon(1e-6));
    }
}

TEST_CASE("pair state is odd and built from mirrored kinks") {
    Grid g = Grid::from_range(-30.0, 30.0, 0.01);
    FieldPair p = exact_pair_state(0.12, 7.0, g);
    double worst = 0.0;
    for (std::size_t i = 0; i < g.n; ++i) {
        std::size_t j = g.n - 1 - i;
        worst = std::max(worst, std::abs(p.phi[i] + p.phi[j]));
        worst = std::max(worst, std::abs(p.pi[i] + p.pi[j]));
    }
    CHECK(worst < 1e-14);
}

TEST_CASE("interaction correction: orthogonality and boundedness") {
    double k1 = resolve_k1();
    MESSAGE("resolved k1 = ", k1);
    CHECK(k1 == doctest::Approx(-0.772588722239781).epsilon(1e-9));

    Grid g = default_verification_grid();
    std::vector<double> prod(g.n);
    for (std::size_t i = 0; i < g.n; ++i) prod[i] = g_correction(0, g.x(i)) * kink_eval(1, g.x(i));
    CHECK(std::abs(integrate(prod, g)) < 1e-9);

    // bounded, decaying at both ends
    double m = 0.0;
    for (double x = -60.0; x <= 60.0; x += 0.05) m = std::max(m, std::abs(g_correction(0, x)));
    CHECK(m < 1.0);
    CHECK(std::abs(g_correction(0, 35.0)) < 1e-12);
    CHECK(std::abs(g_correction(0, -35.0)) < 1e-12);
    CHECK(std::isfinite(g_correction(0, -600.0)));
    CHECK(std::isfinite(g_correction(2, 600.0)));
}

TEST_CASE("interaction correction derivatives against a Richardson oracle") {
    for (double x : {-6.0, -1.2, 0.0, 0.8, 3.3, 9.0}) {
        for (int k = 0; k < 2; ++k) {
            double fd = fd_derivative([&](double q) { return g_correction(k, q); }, x);
            CHECK(g_correction(k + 1, x) == doctest::Approx(fd).epsilon(1e-8));
        }
    }
}

TEST_CASE("interaction correction solves its second-order equation") {
    // residual with 4th-order differencing of G itself
    Grid g = Grid::from_range(-20.0, 20.0, 0.005);
    std::vector<double> G(g.n);
    for (std::size_t i = 0; i < g.n; ++i) G[i] = g_correction(0, g.x(i));
    auto Gxx = second_derivative4(G, g);
    double worst = 0.0;
    for (std::size_t i = 2; i + 2 < g.n; ++i) {
        double x = g.x(i);
        double H = kink_eval(0, x);
        double rhs = (-24.0 * H * H + 30.0 * H * H * H * H) * std::exp(-kSqrt2 * x) +
                     8.0 * kSqrt2 * kink_eval(1, x);
        worst = std::max(worst, std::abs(-Gxx[i] + potential_derivative(2, H) * G[i] - rhs));
    }
    CHECK(worst < 1e-6);

    // k1-independence: the k1 term is a zero mode, so the analytic residual is unchanged
    double k1 = resolve_k1();
    double worst_diff = 0.0;
    for (double x = -15.0; x <= 15.0; x += 0.05) {
        auto residual = [&](double k) {
            double H = kink_eval(0, x);
            double rhs = (-24.0 * H * H + 30.0 * H * H * H * H) * std::exp(-kSqrt2 * x) +
                         8.0 * kSqrt2 * kink_eval(1, x);
            return -g_correction_with_k1(2, x, k) +
                   potential_derivative(2, H) * g_correction_with_k1(0, x, k) - rhs;
        };
        worst_diff = std::max(worst_diff, std::abs(residual(k1) - residual(k1 + 1.0)));
    }
    CHECK(worst_diff < 1e-10);
}

TEST_CASE("separation law closed-form identities") {
    CHECK_THROWS_AS(separation(0.0, 1.0, 0), std::domain_error);
    CHECK_THROWS_AS(separation(1.0, 1.0, 0), std::domain_error);

    for (double v : {0.05, 0.1, 0.2}) {
        CHECK(separation(v, 0.0, 1) == 0.0);
        CHECK(separation(v, 0.0, 0) == doctest::Approx(std::log(8.0 / (v * v)) / kSqrt2).epsilon(1e-15));
        for (double t : {-40.0, -7.0, 0.0, 1.0, 13.0, 55.0}) {
            double d = separation(v, t, 0);
            // e^{-sqrt2 d} = (v^2/8) sech^2(sqrt2 v t)
            CHECK(std::abs(std::exp(-kSqrt2 * d) - interaction_weight(v, t)) < 1e-12);
            // dd/dt^2 = 16 sqrt2 e^{-sqrt2 d}
            CHECK(std::abs(separation(v, t, 2) - 16.0 * kSqrt2 * interaction_weight(v, t)) < 1e-12);
            // evenness and speed bound
            CHECK(separation(v, -t, 0) == doctest::Approx(d).epsilon(1e-14));
            CHECK(std::abs(separation(v, t, 1)) < 2.0 * v);
            CHECK(d >= separation(v, 0.0, 0) - 1e-14);
        }
        // derivative oracle
        for (double t : {-3.0, 0.7, 21.0}) {
            double fd0 = fd_derivative([&](double s) { return separation(v, s, 0); }, t);
            double fd1 = fd_derivative([&](double s) { return separation(v, s, 1); }, t);
            CHECK(separation(v, t, 1) == doctest::Approx(fd0).epsilon(1e-9));
            CHECK(separation(v, t, 2) == doctest::Approx(fd1).epsilon(1e-9));
        }
    }
    // no overflow far out
    CHECK(std::isfinite(separation(0.1, 1e6, 0)));
    CHECK(interaction_weight(0.1, 1e6) == 0.0);
}
