#ifndef KINKLAB_RNG_HPP
#define KINKLAB_RNG_HPP

#include <cstdint>
#include <random>

#include "kinklab/grid.hpp"

namespace kinklab {

/**
 * Deterministic random source. Draws go through mt19937_64 with hand-rolled
 * uniform/gaussian transforms so streams are identical across platforms.
 */
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double a, double b) { return a + (b - a) * uniform(); }
    double gaussian(); // Box-Muller

  private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/**
 * A smooth decaying trial field: `bumps` Gaussians with centers in
 * [center_min, center_max], widths in [width_min, width_max], amplitudes
 * in [-1, 1].
 */
std::vector<double> smooth_random_field(const Grid& grid, Rng& rng, int bumps, double center_min,
                                        double center_max, double width_min, double width_max);

/**
 * Random odd perturbation pair with exact H1 x L2 norm `target_norm`,
 * built as f(x) - f(-x) from Gaussian bumps supported in
 * [support_min, support_max]. Works on full-line and half-line grids.
 */
FieldPair random_odd_perturbation(const Grid& grid, Rng& rng, double target_norm,
                                  double support_min, double support_max);

} // namespace kinklab

#endif
