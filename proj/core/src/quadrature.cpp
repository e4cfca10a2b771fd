#include "kinklab/quadrature.hpp"

#include <stdexcept>

namespace kinklab {

double integrate(const std::vector<double>& f, const Grid& grid) {
    if (f.size() != grid.n) throw std::invalid_argument("integrate: sample count does not match grid");
    std::size_t n = f.size();
    double h = grid.dx;
    std::size_t intervals = n - 1;
    double tail = 0.0;
    std::size_t m = intervals;
    if (intervals % 2 != 0) {
        // 3/8 rule on the last three intervals, Simpson on the rest
        std::size_t j = n - 4;
        tail = 3.0 * h / 8.0 * (f[j] + 3.0 * f[j + 1] + 3.0 * f[j + 2] + f[j + 3]);
        m = intervals - 3;
    }
    double s = 0.0;
    if (m > 0) {
        s = f[0] + f[m];
        for (std::size_t i = 1; i < m; i += 2) s += 4.0 * f[i];
        for (std::size_t i = 2; i < m; i += 2) s += 2.0 * f[i];
        s *= h / 3.0;
    }
    return s + tail;
}

std::vector<double> derivative4(const std::vector<double>& f, const Grid& grid) {
    if (f.size() != grid.n) throw std::invalid_argument("derivative4: sample count does not match grid");
    std::size_t n = f.size();
    double c = 1.0 / (12.0 * grid.dx);
    std::vector<double> d(n);
    d[0] = c * (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]);
    d[1] = c * (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]);
    for (std::size_t i = 2; i + 2 < n; ++i)
        d[i] = c * (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]);
    d[n - 2] = -c * (-3.0 * f[n - 1] - 10.0 * f[n - 2] + 18.0 * f[n - 3] - 6.0 * f[n - 4] + f[n - 5]);
    d[n - 1] = -c * (-25.0 * f[n - 1] + 48.0 * f[n - 2] - 36.0 * f[n - 3] + 16.0 * f[n - 4] - 3.0 * f[n - 5]);
    return d;
}

std::vector<double> second_derivative4(const std::vector<double>& f, const Grid& grid) {
    if (f.size() != grid.n) throw std::invalid_argument("second_derivative4: sample count does not match grid");
    std::size_t n = f.size();
    double c = 1.0 / (12.0 * grid.dx * grid.dx);
    std::vector<double> d(n);
    d[0] = c * (45.0 * f[0] - 154.0 * f[1] + 214.0 * f[2] - 156.0 * f[3] + 61.0 * f[4] - 10.0 * f[5]);
    d[1] = c * (10.0 * f[0] - 15.0 * f[1] - 4.0 * f[2] + 14.0 * f[3] - 6.0 * f[4] + f[5]);
    for (std::size_t i = 2; i + 2 < n; ++i)
        d[i] = c * (-f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] + 16.0 * f[i + 1] - f[i + 2]);
    d[n - 2] = c * (10.0 * f[n - 1] - 15.0 * f[n - 2] - 4.0 * f[n - 3] + 14.0 * f[n - 4] - 6.0 * f[n - 5] + f[n - 6]);
    d[n - 1] = c * (45.0 * f[n - 1] - 154.0 * f[n - 2] + 214.0 * f[n - 3] - 156.0 * f[n - 4] + 61.0 * f[n - 5] - 10.0 * f[n - 6]);
    return d;
}

double inner(const std::vector<double>& a, const std::vector<double>& b, const Grid& grid) {
    if (a.size() != b.size()) throw std::invalid_argument("inner: size mismatch");
    std::vector<double> prod(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) prod[i] = a[i] * b[i];
    return integrate(prod, grid);
}

double pair_inner(const FieldPair& a, const FieldPair& b) {
    require_same_grid(a, b);
    std::vector<double> prod(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) prod[i] = a.phi[i] * b.phi[i] + a.pi[i] * b.pi[i];
    return integrate(prod, a.grid);
}

SobolevNorms sobolev_norms(const FieldPair& a) {
    SobolevNorms out;
    double l2sq = inner(a.phi, a.phi, a.grid);
    std::vector<double> dphi = derivative4(a.phi, a.grid);
    double dsq = inner(dphi, dphi, a.grid);
    double pisq = inner(a.pi, a.pi, a.grid);
    out.l2_phi = std::sqrt(l2sq);
    out.h1_phi = std::sqrt(l2sq + dsq);
    out.l2_pi = std::sqrt(pisq);
    out.energy_norm = std::sqrt(l2sq + dsq + pisq);
    return out;
}

FieldPair field_difference(const FieldPair& a, const FieldPair& b) {
    require_same_grid(a, b);
    FieldPair out(a.grid, a.t);
    for (std::size_t i = 0; i < a.size(); ++i) {
        out.phi[i] = a.phi[i] - b.phi[i];
        out.pi[i] = a.pi[i] - b.pi[i];
    }
    return out;
}

Grid default_verification_grid() { return Grid::from_range(-40.0, 40.0, 0.005); }

} // namespace kinklab
