#ifndef KINKLAB_GRID_HPP
#define KINKLAB_GRID_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace kinklab {

/** Uniform 1D spatial mesh x_i = x0 + i*dx, i = 0..n-1. */
struct Grid {
    double x0 = 0.0;
    double dx = 0.0;
    std::size_t n = 0;

    Grid() = default;
    Grid(double x0_, double dx_, std::size_t n_) : x0(x0_), dx(dx_), n(n_) {
        if (!(dx > 0.0)) throw std::invalid_argument("Grid: dx must be positive");
        if (n < 8) throw std::invalid_argument("Grid: need at least 8 points");
    }

    static Grid from_range(double a, double b, double dx) {
        auto n = static_cast<std::size_t>(std::llround((b - a) / dx)) + 1;
        return Grid(a, dx, n);
    }

    double x(std::size_t i) const { return x0 + static_cast<double>(i) * dx; }
    double x_max() const { return x(n - 1); }

    // index of the grid point closest to x (clamped)
    std::size_t index_near(double xq) const {
        double r = (xq - x0) / dx;
        if (r <= 0.0) return 0;
        auto i = static_cast<std::size_t>(std::llround(r));
        return i >= n ? n - 1 : i;
    }

    bool contains_zero() const {
        std::size_t i = index_near(0.0);
        return std::abs(x(i)) < 1e-12 * std::max(1.0, dx);
    }

    bool operator==(const Grid& o) const { return x0 == o.x0 && dx == o.dx && n == o.n; }
};

/** A (phi, d_t phi) state sampled on a Grid at time t. */
struct FieldPair {
    double t = 0.0;
    Grid grid;
    std::vector<double> phi;
    std::vector<double> pi;

    FieldPair() = default;
    explicit FieldPair(const Grid& g, double time = 0.0)
        : t(time), grid(g), phi(g.n, 0.0), pi(g.n, 0.0) {}

    std::size_t size() const { return grid.n; }

    bool all_finite() const {
        for (double v : phi)
            if (!std::isfinite(v)) return false;
        for (double v : pi)
            if (!std::isfinite(v)) return false;
        return true;
    }
};

inline void require_same_grid(const FieldPair& a, const FieldPair& b) {
    if (!(a.grid == b.grid)) throw std::invalid_argument("field grids do not match");
}

} // namespace kinklab

#endif
