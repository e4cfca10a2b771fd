#include "kinklab/rng.hpp"

#include <cmath>
#include <stdexcept>

#include "kinklab/quadrature.hpp"

namespace kinklab {

double Rng::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform(), u2 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

std::vector<double> smooth_random_field(const Grid& grid, Rng& rng, int bumps, double center_min,
                                        double center_max, double width_min, double width_max) {
    struct Bump {
        double a, c, w;
    };
    std::vector<Bump> bs(bumps);
    for (auto& b : bs) {
        b.a = rng.uniform(-1.0, 1.0);
        b.c = rng.uniform(center_min, center_max);
        b.w = rng.uniform(width_min, width_max);
    }
    std::vector<double> f(grid.n, 0.0);
    for (std::size_t i = 0; i < grid.n; ++i) {
        double x = grid.x(i);
        double s = 0.0;
        for (const auto& b : bs) {
            double z = (x - b.c) / b.w;
            s += b.a * std::exp(-0.5 * z * z);
        }
        f[i] = s;
    }
    return f;
}

FieldPair random_odd_perturbation(const Grid& grid, Rng& rng, double target_norm,
                                  double support_min, double support_max) {
    if (!(target_norm > 0.0))
        throw std::invalid_argument("random_odd_perturbation: need a positive norm");
    struct Bump {
        double a, c, w;
    };
    auto draw = [&](int count) {
        std::vector<Bump> bs(count);
        for (auto& b : bs) {
            b.a = rng.uniform(-1.0, 1.0);
            b.c = rng.uniform(support_min, support_max);
            b.w = rng.uniform(0.6, 2.5);
        }
        return bs;
    };
    auto eval_odd = [](const std::vector<Bump>& bs, double x) {
        double s = 0.0;
        for (const auto& b : bs) {
            double zp = (x - b.c) / b.w, zm = (-x - b.c) / b.w;
            s += b.a * (std::exp(-0.5 * zp * zp) - std::exp(-0.5 * zm * zm));
        }
        return s;
    };
    std::vector<Bump> phi_bumps = draw(5), pi_bumps = draw(5);
    FieldPair out(grid);
    for (std::size_t i = 0; i < grid.n; ++i) {
        double x = grid.x(i);
        out.phi[i] = eval_odd(phi_bumps, x);
        out.pi[i] = eval_odd(pi_bumps, x);
    }
    // pin the endpoints so the perturbed state stays boundary-compatible
    out.phi.front() = 0.0;
    out.phi.back() = 0.0;
    out.pi.front() = 0.0;
    out.pi.back() = 0.0;

    bool half_line = std::abs(grid.x0) < 1e-12;
    double nrm = energy_norm(out);
    if (half_line) nrm *= 1.4142135623730951; // odd extension doubles the square
    if (nrm < 1e-12) throw std::runtime_error("random_odd_perturbation: degenerate draw");
    double scale = target_norm / nrm;
    for (std::size_t i = 0; i < grid.n; ++i) {
        out.phi[i] *= scale;
        out.pi[i] *= scale;
    }
    return out;
}

} // namespace kinklab
