#include "kinklab/null_modes.hpp"

#include <cmath>
#include <stdexcept>

namespace kinklab {

namespace {
void check(int kind, KinkOrientation o, double v) {
    if (kind != 0 && kind != 1) throw std::invalid_argument("null modes: kind must be 0 or 1");
    if (o != KinkOrientation::rise01 && o != KinkOrientation::rise_m10)
        throw std::invalid_argument("null modes: defined for the rising orientations only");
    if (!(std::abs(v) < 1.0)) throw std::domain_error("null modes: need |v| < 1");
}
} // namespace

FieldPair psi_vector(int kind, KinkOrientation o, double v, const Grid& grid, double shift) {
    check(kind, o, v);
    // psi^j_{0,1}(x, v) = psi^j_{-1,0}(-x, -v)
    double sgn = (o == KinkOrientation::rise_m10) ? 1.0 : -1.0;
    double vv = (o == KinkOrientation::rise_m10) ? v : -v;
    double g = std::sqrt(1.0 - v * v);
    FieldPair out(grid);
    for (std::size_t i = 0; i < grid.n; ++i) {
        double x = sgn * (grid.x(i) - shift);
        double hp = kink_profile(KinkOrientation::rise_m10, 1, x / g);
        double hpp = kink_profile(KinkOrientation::rise_m10, 2, x / g);
        if (kind == 0) {
            // J [H'(x/g); (v/g) H''(x/g)]
            out.phi[i] = (vv / g) * hpp;
            out.pi[i] = -hp;
        } else {
            // J [v x H'(x/g); (1/g) H'(x/g) + (v^2/g) x H''(x/g)]
            out.phi[i] = hp / g + (vv * vv / g) * x * hpp;
            out.pi[i] = -vv * x * hp;
        }
    }
    return out;
}

FieldPair y_solution(int kind, KinkOrientation o, double v, double t, const Grid& grid) {
    check(kind, o, v);
    double g = std::sqrt(1.0 - v * v);
    // rise01 moves right (eta = x - v t), rise_m10 left (eta = x + v t);
    // the sign s enters wherever v multiplies an odd power of the co-moving frame
    double s = (o == KinkOrientation::rise01) ? 1.0 : -1.0;
    FieldPair out(grid, t);
    for (std::size_t i = 0; i < grid.n; ++i) {
        double eta = grid.x(i) - s * v * t;
        double xi = eta / g;
        double hp = kink_profile(o, 1, xi);
        double hpp = kink_profile(o, 2, xi);
        if (kind == 0) {
            out.phi[i] = hp;
            out.pi[i] = -s * (v / g) * hpp;
        } else {
            out.phi[i] = (g * g * t - s * v * eta) * hp;
            out.pi[i] = hp + ((v * v / g) * eta - s * v * g * t) * hpp;
        }
    }
    return out;
}

} // namespace kinklab
