#include "kinklab/identities.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "kinklab/interaction.hpp"
#include "kinklab/kink.hpp"
#include "kinklab/potential.hpp"
#include "kinklab/quadrature.hpp"

namespace kinklab {

namespace {
constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kFourSqrt2 = 5.656854249492381;
constexpr double kKinkMass = 0.35355339059327373; // 1/(2 sqrt2)
} // namespace

bool IdentityReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

const IdentityCheck* IdentityReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

std::string identity_report_json(const IdentityReport& report) {
    std::ostringstream os;
    os.precision(17);
    os << "{";
    bool first = true;
    for (const auto& c : report.checks) {
        if (!first) os << ",";
        first = false;
        os << "\"" << c.name << "\":{\"value\":" << c.value << ",\"reference\":" << c.reference
           << ",\"error\":" << c.error << ",\"tolerance\":" << c.tolerance
           << ",\"pass\":" << (c.pass ? "true" : "false") << "}";
    }
    os << "}";
    return os.str();
}

IdentityReport identity_suite(const Grid& grid,
                              const std::vector<std::pair<std::string, double>>& tol_overrides) {
    IdentityReport report;
    auto tol_for = [&](const std::string& name, double def) {
        for (const auto& [k, v] : tol_overrides)
            if (k == name) return v;
        return def;
    };
    auto add = [&](const std::string& name, double value, double reference, double tol) {
        IdentityCheck c;
        c.name = name;
        c.value = value;
        c.reference = reference;
        c.error = std::abs(value - reference);
        c.tolerance = tol_for(name, tol);
        c.pass = c.error < c.tolerance;
        report.checks.push_back(c);
    };

    std::size_t n = grid.n;
    std::vector<double> f(n);

    auto quad = [&](auto density) {
        for (std::size_t i = 0; i < n; ++i) f[i] = density(grid.x(i));
        return integrate(f, grid);
    };

    double mass = quad([](double x) {
        double hp = kink_eval(1, x);
        return hp * hp;
    });
    add("kink_mass", mass, kKinkMass, 1e-8);

    double cubic = quad([](double x) {
        double hp = kink_eval(1, x);
        return potential_derivative(3, kink_eval(0, x)) * hp * hp * hp;
    });
    add("odd_cubic_integral", cubic, 0.0, 1e-8);

    double ortho = quad([](double x) { return g_correction(0, x) * kink_eval(1, x); });
    add("g_orthogonality", ortho, 0.0, 1e-9);

    double est2 = quad([](double x) {
        double hp = kink_eval(1, x);
        double u3 = potential_derivative(3, kink_eval(0, x));
        return u3 * hp * hp * (g_correction(0, x) - std::exp(-kSqrt2 * x));
    });
    add("interaction_constant", est2, kFourSqrt2, 1e-6);

    double idd2 = quad([](double x) {
        double h = kink_eval(0, x);
        double h3 = h * h * h;
        return -2.0 * (6.0 * h3 * h * h - 8.0 * h3) * std::exp(-kSqrt2 * x);
    });
    add("interaction_constant_polynomial_form", idd2, kFourSqrt2, 1e-6);

    return report;
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                        int max_depth) {
    struct Rec {
        const std::function<double(double)>& f;
        double run(double a, double m, double b, double fa, double fm, double fb, double whole,
                   double tol, int depth) {
            double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
            double flm = f(lm), frm = f(rm);
            double h6 = (b - a) / 12.0;
            double left = h6 * (fa + 4.0 * flm + fm);
            double right = h6 * (fm + 4.0 * frm + fb);
            double delta = left + right - whole;
            if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
            return run(a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
                   run(m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
        }
    } rec{f};
    double m = 0.5 * (a + b);
    double fa = f(a), fm = f(m), fb = f(b);
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return rec.run(a, m, b, fa, fm, fb, whole, tol, max_depth);
}

double interaction_integral(double alpha, double beta, int m, double z) {
    if (!(alpha > 0.0) || !(beta > 0.0)) throw std::domain_error("interaction_integral: rates must be positive");
    if (m < 0) throw std::invalid_argument("interaction_integral: m must be >= 0");
    auto integrand = [&](double x) {
        double xp = x > 0.0 ? x : 0.0;
        double zmxp = (z - x) > 0.0 ? (z - x) : 0.0;
        return std::pow(std::abs(x), m) * std::exp(-alpha * xp) * std::exp(-beta * zmxp);
    };
    // the integrand is only piecewise smooth: split at the kink points 0 and z,
    // and cut the exponential tails where they are below machine weight
    double tail_left = -(745.0 + m * 10.0) / beta;
    double tail_right = z + (745.0 + m * 10.0) / alpha;
    // tolerance scaled to the integral's own magnitude (it decays like the bound)
    double scale = (1.0 + std::pow(std::max(z, 1.0), m + 1)) *
                   std::exp(-std::min(alpha, beta) * std::max(z, 0.0));
    double tol = std::max(1e-10 * scale, 1e-280);
    double total = adaptive_simpson(integrand, tail_left, 0.0, tol);
    if (z > 0.0) total += adaptive_simpson(integrand, 0.0, z, tol);
    total += adaptive_simpson(integrand, std::max(z, 0.0), tail_right, tol);
    return total;
}

InteractionProbeResult interaction_bound_probe(double alpha, double beta, int m,
                                               const std::vector<double>& z_values) {
    if (!(alpha > 0.0) || !(beta > 0.0)) throw std::domain_error("interaction_bound_probe: rates must be positive");
    InteractionProbeResult out;
    for (double z : z_values) {
        double I = interaction_integral(alpha, beta, m, z);
        double bound;
        if (alpha == beta) {
            bound = (1.0 + std::pow(z, m + 1)) * std::exp(-alpha * z);
        } else {
            bound = std::max((1.0 + std::pow(z, m)) * std::exp(-alpha * z), std::exp(-beta * z));
        }
        out.integrals.push_back(I);
        out.ratios.push_back(I / bound);
        out.worst_ratio = std::max(out.worst_ratio, I / bound);
    }
    // ratios settle monotonically toward a bounded limit; past a burn-in the
    // sequence must be one-directional (it typically approaches from below)
    std::size_t burn = out.ratios.size() / 4;
    bool nondec = true, noninc = true;
    for (std::size_t i = burn + 1; i < out.ratios.size(); ++i) {
        if (out.ratios[i] > out.ratios[i - 1] * (1.0 + 1e-6)) noninc = false;
        if (out.ratios[i] < out.ratios[i - 1] * (1.0 - 1e-6)) nondec = false;
    }
    out.monotone_after_burn_in = nondec || noninc;
    return out;
}

} // namespace kinklab
