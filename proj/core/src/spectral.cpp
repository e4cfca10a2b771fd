#include "kinklab/spectral.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "kinklab/ansatz.hpp"
#include "kinklab/interaction.hpp"
#include "kinklab/kink.hpp"
#include "kinklab/potential.hpp"
#include "kinklab/quadrature.hpp"
#include "kinklab/rng.hpp"

namespace kinklab {

namespace {

void check_spec(const OperatorSpec& spec) {
    if ((spec.kind == ProfileKind::kink_pair) && spec.z < 3.0)
        throw std::invalid_argument("OperatorSpec: pair separation must be >= 3");
    if ((spec.kind == ProfileKind::boosted_pair || spec.kind == ProfileKind::single_moving) &&
        !(spec.v > 0.0 && spec.v < 1.0))
        throw std::invalid_argument("OperatorSpec: need 0 < v < 1");
}

} // namespace

std::vector<double> operator_profile(const OperatorSpec& spec) {
    check_spec(spec);
    const Grid& g = spec.grid;
    std::vector<double> prof(g.n);
    switch (spec.kind) {
        case ProfileKind::single_kink:
            for (std::size_t i = 0; i < g.n; ++i) prof[i] = kink_eval(0, g.x(i));
            break;
        case ProfileKind::kink_pair:
            for (std::size_t i = 0; i < g.n; ++i)
                prof[i] = kink_eval(0, g.x(i) - spec.z) +
                          kink_profile(KinkOrientation::rise_m10, 0, g.x(i));
            break;
        case ProfileKind::boosted_pair:
            for (std::size_t i = 0; i < g.n; ++i) {
                double wp = frame_w(spec.v, spec.t, g.x(i));
                double wm = frame_w(spec.v, spec.t, -g.x(i));
                prof[i] = kink_eval(0, wp) - kink_eval(0, wm);
            }
            break;
        case ProfileKind::single_moving: {
            double gamma = std::sqrt(1.0 - spec.v * spec.v);
            for (std::size_t i = 0; i < g.n; ++i)
                prof[i] = kink_eval(0, (g.x(i) - spec.v * spec.t) / gamma);
            break;
        }
    }
    return prof;
}

std::vector<std::vector<double>> translation_modes(const OperatorSpec& spec) {
    check_spec(spec);
    const Grid& g = spec.grid;
    std::vector<std::vector<double>> modes;
    auto sample = [&](auto f) {
        std::vector<double> m(g.n);
        for (std::size_t i = 0; i < g.n; ++i) m[i] = f(g.x(i));
        modes.push_back(std::move(m));
    };
    switch (spec.kind) {
        case ProfileKind::single_kink:
            sample([](double x) { return kink_eval(1, x); });
            break;
        case ProfileKind::kink_pair:
            sample([&](double x) { return kink_eval(1, x - spec.z); });
            sample([](double x) { return kink_profile(KinkOrientation::rise_m10, 1, x); });
            break;
        case ProfileKind::boosted_pair:
            sample([&](double x) { return kink_eval(1, frame_w(spec.v, spec.t, x)); });
            sample([&](double x) { return kink_eval(1, frame_w(spec.v, spec.t, -x)); });
            break;
        case ProfileKind::single_moving: {
            double gamma = std::sqrt(1.0 - spec.v * spec.v);
            sample([&](double x) { return kink_eval(1, (x - spec.v * spec.t) / gamma); });
            break;
        }
    }
    return modes;
}

SymBanded assemble(const OperatorSpec& spec) {
    check_spec(spec);
    std::vector<double> prof = operator_profile(spec);
    std::size_t n = spec.grid.n;
    double c = 1.0 / (12.0 * spec.grid.dx * spec.grid.dx);
    SymBanded A(n, 2);
    for (std::size_t i = 0; i < n; ++i)
        A.bands[0][i] = 30.0 * c + potential_derivative(2, prof[i]);
    for (std::size_t i = 0; i + 1 < n; ++i) A.bands[1][i] = -16.0 * c;
    for (std::size_t i = 0; i + 2 < n; ++i) A.bands[2][i] = c;
    return A;
}

SpectrumResult lowest_spectrum(const SymBanded& A, const Grid& grid, int m) {
    if (m < 1 || m > 10) throw std::invalid_argument("lowest_spectrum: need 1 <= m <= 10");
    SpectrumResult out;
    double lo = A.gershgorin_lower(), hi = A.gershgorin_upper();
    double scale = std::max(std::abs(lo), std::abs(hi));

    // Sturm bisection for the k-th eigenvalue (0-based)
    auto kth = [&](std::size_t k) {
        double a = lo, b = hi;
        while (b - a > 1e-12 * scale) {
            double mid = 0.5 * (a + b);
            if (eigenvalues_below(A, mid) > k)
                b = mid;
            else
                a = mid;
        }
        return 0.5 * (a + b);
    };

    std::mt19937_64 rng(7771);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> y(A.n);

    for (int k = 0; k < m; ++k) {
        double lambda = kth(static_cast<std::size_t>(k));
        // inverse iteration at a slightly offset shift, deflating previous vectors
        BandedLU lu(A, lambda + 1e-10 * std::max(1.0, scale) * 1e-3);
        std::vector<double> x(A.n);
        for (auto& xi : x) xi = u(rng);
        double lam_rq = lambda;
        for (int it = 0; it < 25; ++it) {
            for (const auto& prev : out.eigenvectors) {
                double dot = 0.0, nrm = 0.0;
                for (std::size_t i = 0; i < A.n; ++i) {
                    dot += x[i] * prev[i];
                    nrm += prev[i] * prev[i];
                }
                for (std::size_t i = 0; i < A.n; ++i) x[i] -= dot / nrm * prev[i];
            }
            double norm = 0.0;
            for (double xi : x) norm += xi * xi;
            norm = std::sqrt(norm);
            for (auto& xi : x) xi /= norm;
            std::vector<double> b = x;
            lu.solve(b);
            x.swap(b);
            // Rayleigh quotient on the normalized iterate
            double nx = 0.0;
            for (double xi : x) nx += xi * xi;
            nx = std::sqrt(nx);
            for (auto& xi : x) xi /= nx;
            A.multiply(x, y);
            double num = 0.0;
            for (std::size_t i = 0; i < A.n; ++i) num += x[i] * y[i];
            lam_rq = num;
            double res = 0.0;
            for (std::size_t i = 0; i < A.n; ++i) {
                double r = y[i] - lam_rq * x[i];
                res += r * r;
            }
            // certify an absolute residual (the iterate is grid-normalized below)
            if (std::sqrt(res * grid.dx) < 1e-9) break;
        }
        // grid normalization: ||psi||_{L2} = 1
        double l2 = 0.0;
        for (double xi : x) l2 += xi * xi * grid.dx;
        l2 = std::sqrt(l2);
        for (auto& xi : x) xi /= l2;
        A.multiply(x, y);
        double res = 0.0;
        for (std::size_t i = 0; i < A.n; ++i) {
            double r = y[i] - lam_rq * x[i];
            res += r * r;
        }
        out.eigenvalues.push_back(lam_rq);
        out.eigenvectors.push_back(std::move(x));
        out.residual_norms.push_back(std::sqrt(res * grid.dx));
    }
    // ascending order is guaranteed by construction; enforce on ties
    for (std::size_t k = 1; k < out.eigenvalues.size(); ++k)
        if (out.eigenvalues[k] < out.eigenvalues[k - 1])
            std::swap(out.eigenvalues[k], out.eigenvalues[k - 1]);
    return out;
}

double coercivity_check(const OperatorSpec& spec, int trial_count, std::uint64_t seed) {
    check_spec(spec);
    const Grid& g = spec.grid;
    std::vector<double> prof = operator_profile(spec);
    std::vector<double> upp(g.n);
    for (std::size_t i = 0; i < g.n; ++i) upp[i] = potential_derivative(2, prof[i]);
    auto modes = translation_modes(spec);

    auto project = [&](std::vector<double>& f) {
        if (modes.size() == 1) {
            double a = inner(f, modes[0], g) / inner(modes[0], modes[0], g);
            for (std::size_t i = 0; i < g.n; ++i) f[i] -= a * modes[0][i];
        } else {
            double g11 = inner(modes[0], modes[0], g), g12 = inner(modes[0], modes[1], g);
            double g22 = inner(modes[1], modes[1], g);
            double r1 = inner(f, modes[0], g), r2 = inner(f, modes[1], g);
            double det = g11 * g22 - g12 * g12;
            double a = (g22 * r1 - g12 * r2) / det;
            double b = (-g12 * r1 + g11 * r2) / det;
            for (std::size_t i = 0; i < g.n; ++i) f[i] -= a * modes[0][i] + b * modes[1][i];
        }
    };
    auto quotient = [&](const std::vector<double>& f) {
        auto df = derivative4(f, g);
        std::vector<double> qnum(g.n), qden(g.n);
        for (std::size_t i = 0; i < g.n; ++i) {
            qnum[i] = df[i] * df[i] + upp[i] * f[i] * f[i];
            qden[i] = f[i] * f[i] + df[i] * df[i];
        }
        double den = integrate(qden, g);
        return den > 1e-16 ? integrate(qnum, g) / den : std::numeric_limits<double>::infinity();
    };

    Rng rng(seed);
    double cmin = std::numeric_limits<double>::infinity();
    for (int trial = 0; trial < trial_count; ++trial) {
        std::vector<double> f =
            smooth_random_field(g, rng, 6, g.x0 + 5.0, g.x_max() - 5.0, 0.5, 3.0);
        project(f);
        cmin = std::min(cmin, quotient(f));
    }

    // sharpen with a Ritz search over the projected low-lying eigenvectors:
    // minimize <A f, f>/||f||_{H1}^2 over their span within the constraint space
    SpectrumResult low = lowest_spectrum(assemble(spec), g, 4);
    std::vector<std::vector<double>> basis;
    for (auto f : low.eigenvectors) {
        double before = l2_norm(f, g);
        project(f);
        if (l2_norm(f, g) > 1e-8 * before) basis.push_back(std::move(f));
    }
    if (!basis.empty()) {
        std::size_t m = basis.size();
        std::vector<std::vector<double>> dbasis(m);
        for (std::size_t k = 0; k < m; ++k) dbasis[k] = derivative4(basis[k], g);
        auto form = [&](std::size_t a, std::size_t b, bool with_potential) {
            std::vector<double> dens(g.n);
            for (std::size_t i = 0; i < g.n; ++i)
                dens[i] = dbasis[a][i] * dbasis[b][i] +
                          (with_potential ? upp[i] : 1.0) * basis[a][i] * basis[b][i];
            return integrate(dens, g);
        };
        // scan the simplex of pairwise mixtures; m <= 4 keeps this cheap and
        // captures the worst two-vector mixing direction
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t b = a; b < m; ++b) {
                double Aaa = form(a, a, true), Abb = form(b, b, true), Aab = form(a, b, true);
                double Baa = form(a, a, false), Bbb = form(b, b, false), Bab = form(a, b, false);
                for (int k = 0; k <= 64; ++k) {
                    double th = 3.14159265358979 * k / 64.0;
                    double ca = std::cos(th), cb = std::sin(th);
                    double num = ca * ca * Aaa + 2.0 * ca * cb * Aab + cb * cb * Abb;
                    double den = ca * ca * Baa + 2.0 * ca * cb * Bab + cb * cb * Bbb;
                    if (den > 1e-16) cmin = std::min(cmin, num / den);
                }
            }
        }
    }
    return cmin;
}

double q_functional(const FieldPair& r, double v, double t) {
    if (!(v > 0.0 && v < 1.0)) throw std::domain_error("q_functional: need 0 < v < 1");
    if (!(t > 0.0)) throw std::domain_error("q_functional: the cutoffs need t > 0");
    const Grid& g = r.grid;
    double gamma = std::sqrt(1.0 - v * v);
    double pv = 0.5 * v * (1.0 - 1e-3);

    // smooth step: 1 below 2(1-1e-3), 0 above 2
    auto chi = [](double s) {
        double a = 2.0 * (1.0 - 1e-3), b = 2.0;
        if (s <= a) return 1.0;
        if (s >= b) return 0.0;
        auto h = [](double q) { return q > 0.0 ? std::exp(-1.0 / q) : 0.0; };
        double xi = (s - a) / (b - a);
        return h(1.0 - xi) / (h(xi) + h(1.0 - xi));
    };

    auto dphi = derivative4(r.phi, g);
    std::vector<double> dens(g.n);
    for (std::size_t i = 0; i < g.n; ++i) {
        double x = g.x(i);
        double prof = kink_eval(0, (x - v * t) / gamma) +
                      kink_profile(KinkOrientation::rise_m10, 0, (x + v * t) / gamma);
        double quad = 0.5 * (r.pi[i] * r.pi[i] + dphi[i] * dphi[i] +
                             potential_derivative(2, prof) * r.phi[i] * r.phi[i]);
        double c1 = chi((x + v * t) / (pv * t));
        double c2 = 1.0 - c1;
        dens[i] = quad + v * (c2 - c1) * r.pi[i] * dphi[i];
    }
    return integrate(dens, g);
}

double quadratic_form_L1(const FieldPair& u, double v, double t) {
    if (!(v > 0.0 && v < 1.0)) throw std::domain_error("quadratic_form_L1: need 0 < v < 1");
    const Grid& g = u.grid;
    auto dphi = derivative4(u.phi, g);
    std::vector<double> dens(g.n);
    for (std::size_t i = 0; i < g.n; ++i) {
        double x = g.x(i);
        double prof = kink_eval(0, frame_w(v, t, x)) - kink_eval(0, frame_w(v, t, -x));
        dens[i] = u.pi[i] * u.pi[i] + dphi[i] * dphi[i] +
                  potential_derivative(2, prof) * u.phi[i] * u.phi[i];
    }
    return integrate(dens, g);
}

} // namespace kinklab
