#include "kinklab/evolve.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "kinklab/potential.hpp"

namespace kinklab {

namespace {

double nearest_vacuum(double p) {
    double best = 0.0;
    for (double v : {-1.0, 0.0, 1.0})
        if (std::abs(p - v) < std::abs(p - best)) best = v;
    return best;
}

// 4th-order Laplacian with ghost cells: gl0/gl1 extend the left end
// (two cells out), gr0/gr1 the right end. Writes into lap.
void laplacian4(const std::vector<double>& f, double dx, double gl1, double gl0, double gr0,
                double gr1, std::vector<double>& lap) {
    std::size_t n = f.size();
    double c = 1.0 / (12.0 * dx * dx);
    auto at = [&](std::ptrdiff_t i) -> double {
        if (i == -1) return gl0;
        if (i == -2) return gl1;
        if (i == static_cast<std::ptrdiff_t>(n)) return gr0;
        if (i == static_cast<std::ptrdiff_t>(n) + 1) return gr1;
        return f[static_cast<std::size_t>(i)];
    };
    for (std::size_t i = 0; i < n; ++i) {
        auto j = static_cast<std::ptrdiff_t>(i);
        lap[i] = c * (-at(j - 2) + 16.0 * at(j - 1) - 30.0 * f[i] + 16.0 * at(j + 1) - at(j + 2));
    }
}

struct Stepper {
    Grid grid;
    BoundaryMode mode;
    double left_vac = 0.0, right_vac = 0.0;

    void ghosts(const std::vector<double>& phi, double& gl1, double& gl0, double& gr0,
                double& gr1) const {
        if (mode == BoundaryMode::odd_half_line) {
            gl0 = -phi[1]; // odd extension through x = 0
            gl1 = -phi[2];
            gr0 = right_vac;
            gr1 = right_vac;
        } else {
            gl0 = left_vac;
            gl1 = left_vac;
            gr0 = right_vac;
            gr1 = right_vac;
        }
    }

    void accel(const std::vector<double>& phi, std::vector<double>& a) const {
        double gl1, gl0, gr0, gr1;
        ghosts(phi, gl1, gl0, gr0, gr1);
        laplacian4(phi, grid.dx, gl1, gl0, gr0, gr1, a);
        for (std::size_t i = 0; i < phi.size(); ++i) a[i] -= potential_derivative(1, phi[i]);
        // boundary rows are held fixed
        a.front() = 0.0;
        a.back() = 0.0;
    }
};

void check_divergence(const FieldPair& s) {
    if (!s.all_finite()) {
        std::ostringstream os;
        os << "evolution diverged at t = " << s.t;
        throw std::runtime_error(os.str());
    }
}

std::size_t plan_steps(double t0, double t_final, double& dt) {
    double span = t_final - t0;
    if (span <= 0.0) return 0;
    auto steps = static_cast<std::size_t>(std::ceil(span / dt - 1e-9));
    if (steps == 0) steps = 1;
    dt = span / static_cast<double>(steps);
    return steps;
}

} // namespace

FieldPair evolve(const FieldPair& state, const EvolveConfig& cfg, double t_final,
                 const SnapshotSink& sink) {
    if (state.phi.size() != state.grid.n) throw std::invalid_argument("evolve: bad state");
    double dt = cfg.dt;
    std::size_t steps = plan_steps(state.t, t_final, dt);
    if (!(dt <= 0.5 * state.grid.dx + 1e-15))
        throw std::invalid_argument("evolve: CFL violated, need dt <= 0.5 dx");

    Stepper st{state.grid, cfg.boundary};
    if (cfg.boundary == BoundaryMode::odd_half_line) {
        if (std::abs(state.grid.x0) > 1e-12)
            throw std::invalid_argument("evolve: odd_half_line needs a grid starting at x = 0");
        if (std::abs(state.phi.front()) > 1e-6)
            throw std::invalid_argument("evolve: odd_half_line needs phi(0) = 0");
        st.right_vac = nearest_vacuum(state.phi.back());
        if (std::abs(state.phi.back() - st.right_vac) > 1e-6)
            throw std::invalid_argument("evolve: right edge is not at a vacuum");
    } else {
        st.left_vac = nearest_vacuum(state.phi.front());
        st.right_vac = nearest_vacuum(state.phi.back());
        if (std::abs(state.phi.front() - st.left_vac) > 1e-6 ||
            std::abs(state.phi.back() - st.right_vac) > 1e-6)
            throw std::invalid_argument("evolve: edges are not at vacua");
    }

    FieldPair s = state;
    s.phi.front() = (cfg.boundary == BoundaryMode::odd_half_line) ? 0.0 : st.left_vac;
    s.phi.back() = st.right_vac;
    s.pi.front() = 0.0;
    s.pi.back() = 0.0;

    if (sink && cfg.record_every > 0) sink(s);

    std::vector<double> a(s.size());
    st.accel(s.phi, a);
    for (std::size_t k = 0; k < steps; ++k) {
        for (std::size_t i = 0; i < s.size(); ++i) s.pi[i] += 0.5 * dt * a[i];
        for (std::size_t i = 0; i < s.size(); ++i) s.phi[i] += dt * s.pi[i];
        st.accel(s.phi, a);
        for (std::size_t i = 0; i < s.size(); ++i) s.pi[i] += 0.5 * dt * a[i];
        s.t = state.t + static_cast<double>(k + 1) * dt;
        if ((k + 1) % 64 == 0 || k + 1 == steps) check_divergence(s);
        if (sink && cfg.record_every > 0 && ((k + 1) % cfg.record_every == 0 || k + 1 == steps))
            sink(s);
    }
    return s;
}

FieldPair evolve_linearized(const MovingKink& background, const FieldPair& w,
                            const EvolveConfig& cfg, double t_final, const SnapshotSink& sink) {
    double dt = cfg.dt;
    std::size_t steps = plan_steps(w.t, t_final, dt);
    if (!(dt <= 0.5 * w.grid.dx + 1e-15))
        throw std::invalid_argument("evolve_linearized: CFL violated, need dt <= 0.5 dx");

    const Grid& g = w.grid;
    double gamma = background.gamma();
    std::vector<double> upp(g.n);
    auto refresh_potential = [&](double t) {
        for (std::size_t i = 0; i < g.n; ++i) {
            double xi = (g.x(i) - background.v * t - background.y) / gamma;
            upp[i] = potential_derivative(2, kink_profile(background.orientation, 0, xi));
        }
    };
    std::vector<double> lap(g.n);
    auto accel = [&](const std::vector<double>& w1, std::vector<double>& a) {
        laplacian4(w1, g.dx, 0.0, 0.0, 0.0, 0.0, lap);
        for (std::size_t i = 0; i < g.n; ++i) a[i] = lap[i] - upp[i] * w1[i];
        a.front() = 0.0;
        a.back() = 0.0;
    };

    FieldPair s = w;
    if (sink && cfg.record_every > 0) sink(s);
    std::vector<double> a(g.n);
    refresh_potential(s.t);
    accel(s.phi, a);
    for (std::size_t k = 0; k < steps; ++k) {
        for (std::size_t i = 0; i < g.n; ++i) s.pi[i] += 0.5 * dt * a[i];
        for (std::size_t i = 0; i < g.n; ++i) s.phi[i] += dt * s.pi[i];
        double t_next = w.t + static_cast<double>(k + 1) * dt;
        refresh_potential(t_next);
        accel(s.phi, a);
        for (std::size_t i = 0; i < g.n; ++i) s.pi[i] += 0.5 * dt * a[i];
        s.t = t_next;
        if ((k + 1) % 64 == 0 || k + 1 == steps) check_divergence(s);
        if (sink && cfg.record_every > 0 && ((k + 1) % cfg.record_every == 0 || k + 1 == steps))
            sink(s);
    }
    return s;
}

} // namespace kinklab
