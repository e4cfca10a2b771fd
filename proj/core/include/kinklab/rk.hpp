#ifndef KINKLAB_RK_HPP
#define KINKLAB_RK_HPP

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace kinklab {

/**
 * Adaptive Cash-Karp RK45 on a fixed-size state, integrating y' = f(t, y)
 * from t0 to t1 (either direction) with per-step error control.
 */
template <std::size_t N>
std::array<double, N> rk45(const std::function<std::array<double, N>(double, const std::array<double, N>&)>& f,
                           double t0, std::array<double, N> y, double t1, double rtol = 1e-11,
                           double atol = 1e-13) {
    using V = std::array<double, N>;

    double dir = (t1 >= t0) ? 1.0 : -1.0;
    double t = t0;
    double h = dir * std::max(1e-8, std::abs(t1 - t0) / 100.0);
    int guard = 0;
    while (dir * (t1 - t) > 1e-14 * std::max(1.0, std::abs(t1))) {
        if (++guard > 2000000) throw std::runtime_error("rk45: step limit exceeded");
        if (dir * (t + h - t1) > 0.0) h = t1 - t;

        V k1 = f(t, y);
        V tmp;
        for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * 0.2 * k1[i];
        V k2 = f(t + 0.2 * h, tmp);
        for (std::size_t i = 0; i < N; ++i)
            tmp[i] = y[i] + h * (3.0 / 40.0 * k1[i] + 9.0 / 40.0 * k2[i]);
        V k3 = f(t + 0.3 * h, tmp);
        for (std::size_t i = 0; i < N; ++i)
            tmp[i] = y[i] + h * (0.3 * k1[i] - 0.9 * k2[i] + 1.2 * k3[i]);
        V k4 = f(t + 0.6 * h, tmp);
        for (std::size_t i = 0; i < N; ++i)
            tmp[i] = y[i] + h * (-11.0 / 54.0 * k1[i] + 2.5 * k2[i] - 70.0 / 27.0 * k3[i] +
                                 35.0 / 27.0 * k4[i]);
        V k5 = f(t + h, tmp);
        for (std::size_t i = 0; i < N; ++i)
            tmp[i] = y[i] + h * (1631.0 / 55296.0 * k1[i] + 175.0 / 512.0 * k2[i] +
                                 575.0 / 13824.0 * k3[i] + 44275.0 / 110592.0 * k4[i] +
                                 253.0 / 4096.0 * k5[i]);
        V k6 = f(t + 0.875 * h, tmp);

        V y5, y4;
        for (std::size_t i = 0; i < N; ++i) {
            y5[i] = y[i] + h * (37.0 / 378.0 * k1[i] + 250.0 / 621.0 * k3[i] +
                                125.0 / 594.0 * k4[i] + 512.0 / 1771.0 * k6[i]);
            y4[i] = y[i] + h * (2825.0 / 27648.0 * k1[i] + 18575.0 / 48384.0 * k3[i] +
                                13525.0 / 55296.0 * k4[i] + 277.0 / 14336.0 * k5[i] + 0.25 * k6[i]);
        }
        double err = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            double scale = atol + rtol * std::max(std::abs(y[i]), std::abs(y5[i]));
            err = std::max(err, std::abs(y5[i] - y4[i]) / scale);
        }
        if (err <= 1.0) {
            t += h;
            y = y5;
        }
        double fac = 0.9 * std::pow(std::max(err, 1e-12), -0.2);
        h *= std::min(5.0, std::max(0.2, fac));
    }
    return y;
}

} // namespace kinklab

#endif
