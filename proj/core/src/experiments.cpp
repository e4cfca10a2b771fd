#include "kinklab/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "kinklab/ansatz.hpp"
#include "kinklab/evolve.hpp"
#include "kinklab/interaction.hpp"
#include "kinklab/kink.hpp"
#include "kinklab/mod_ode.hpp"
#include "kinklab/null_modes.hpp"
#include "kinklab/potential.hpp"
#include "kinklab/quadrature.hpp"
#include "kinklab/rng.hpp"

namespace kinklab {

namespace {
constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kHalfHeight = 0.70710678118654752; // H(0)

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

// straight-line fit y = a + b x, returns b
double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
    double n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// position where phi first crosses H(0) going up, scanning x >= 0
double half_height_crossing(const FieldPair& s) {
    const Grid& g = s.grid;
    std::size_t i0 = g.index_near(0.0);
    for (std::size_t i = i0; i + 1 < g.n; ++i) {
        if (s.phi[i] < kHalfHeight && s.phi[i + 1] >= kHalfHeight) {
            double f = (kHalfHeight - s.phi[i]) / (s.phi[i + 1] - s.phi[i]);
            return g.x(i) + f * g.dx;
        }
    }
    return 0.0;
}

// free incoming pair: right kink at v|t| + e_inf moving inward with speed v
FieldPair incoming_reference(double v, double t, const Grid& grid) {
    double e_inf = std::log(2.0 / (v * v)) / (2.0 * kSqrt2);
    return exact_pair_state(-v, -v * t + e_inf, grid);
}

double windowed_radiation_norm(const FieldPair& kappa, double y_hat, double core_half_width) {
    const Grid& g = kappa.grid;
    auto dphi = derivative4(kappa.phi, g);
    std::vector<double> dens(g.n, 0.0);
    for (std::size_t i = 0; i < g.n; ++i) {
        double ax = std::abs(g.x(i));
        if (ax > y_hat - core_half_width && ax < y_hat + core_half_width) continue;
        dens[i] = kappa.phi[i] * kappa.phi[i] + dphi[i] * dphi[i] + kappa.pi[i] * kappa.pi[i];
    }
    return std::sqrt(std::max(0.0, integrate(dens, g)));
}
} // namespace

FieldPair mirror_to_full_line(const FieldPair& half) {
    if (std::abs(half.grid.x0) > 1e-12)
        throw std::invalid_argument("mirror_to_full_line: grid must start at x = 0");
    std::size_t n = half.grid.n;
    Grid full(-half.grid.x_max(), half.grid.dx, 2 * n - 1);
    FieldPair out(full, half.t);
    for (std::size_t i = 0; i < n; ++i) {
        out.phi[n - 1 + i] = half.phi[i];
        out.pi[n - 1 + i] = half.pi[i];
        out.phi[n - 1 - i] = -half.phi[i];
        out.pi[n - 1 - i] = -half.pi[i];
    }
    return out;
}

ExperimentConfig ExperimentConfig::from_config(const Config& cfg) {
    ExperimentConfig e;
    e.v = cfg.get_double("v", e.v);
    e.v_list = cfg.get_list("v_list");
    e.dx = cfg.get_double("dx", e.dx);
    e.dt = cfg.get_double("dt", e.dt);
    e.domain = cfg.get_double("domain", e.domain);
    e.record_dt = cfg.get_double("record_dt", e.record_dt);
    e.t_span = cfg.get_double("t_span", e.t_span);
    e.seed = static_cast<std::uint64_t>(cfg.get_double("seed", static_cast<double>(e.seed)));
    e.y0 = cfg.get_double("y0", e.y0);
    e.psi_norm = cfg.get_double("psi_norm", e.psi_norm);
    e.out_dir = cfg.get_string("out", e.out_dir);
    e.threads = cfg.get_int("threads", e.threads);
    e.full_line = cfg.get_bool("full_line", e.full_line);
    e.snapshot_stride = cfg.get_int("snapshot_stride", e.snapshot_stride);
    e.profile = cfg.get_string("profile", e.profile);
    e.z = cfg.get_double("z", e.z);
    e.eigen_count = cfg.get_int("eigen_count", e.eigen_count);
    e.spec_t = cfg.get_double("spec_t", e.spec_t);
    e.spec_dx = cfg.get_double("spec_dx", e.spec_dx);
    for (const auto& [key, value] : cfg.raw())
        if (key.rfind("tol_", 0) == 0)
            e.tol_overrides.emplace_back(key.substr(4), cfg.get_double(key, 0.0));
    return e;
}

void ExperimentConfig::validate() const {
    auto positive = [](double x, const char* name) {
        if (!(x > 0.0)) throw ConfigError(std::string("config: ") + name + " must be positive");
    };
    positive(dx, "dx");
    positive(dt, "dt");
    positive(record_dt, "record_dt");
    if (domain < 0.0) throw ConfigError("config: domain must be positive");
    if (t_span < 0.0) throw ConfigError("config: t_span must be positive");
    if (!(v > 0.0)) throw ConfigError("config: v must be positive");
    if (v >= 1.0) throw ConfigError("config: v must be below 1");
    for (double vv : v_list)
        if (!(vv > 0.0 && vv <= 0.3))
            throw ConfigError("config: v_list entries must lie in (0, 0.3]");
    if (threads < 0) throw ConfigError("config: threads must be non-negative");
    if (eigen_count < 1 || eigen_count > 10)
        throw ConfigError("config: eigen_count must be in 1..10");
}

int ExperimentConfig::worker_count(std::size_t jobs) const {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw <= 0) hw = 2;
    int n = threads > 0 ? threads : hw;
    if (const char* env = std::getenv("KINKLAB_THREADS")) {
        int cap = std::atoi(env);
        if (cap > 0) n = std::min(n, cap);
    }
    return std::max(1, std::min<int>(n, static_cast<int>(jobs)));
}

CollisionReport run_collision(const ExperimentConfig& cfg, double v, CollisionOutputs* outputs) {
    CollisionReport rep;
    rep.v_in = v;
    rep.expected_min_separation = std::log(8.0 / (v * v)) / kSqrt2;
    double d0 = rep.expected_min_separation;

    double T = cfg.t_span > 0.0 ? cfg.t_span : 3.0 * std::log(1.0 / v) / v;
    double extent = cfg.domain > 0.0 ? cfg.domain : 260.0;

    Grid grid = cfg.full_line ? Grid::from_range(-extent, extent, cfg.dx)
                              : Grid::from_range(0.0, extent, cfg.dx);
    AnsatzParams ap{v, true, 0.0};
    FieldPair init = ansatz_state(ap, -T, grid);
    init.phi.front() = cfg.full_line ? -1.0 : 0.0;
    init.phi.back() = 1.0;
    init.pi.front() = 0.0;
    init.pi.back() = 0.0;

    EvolveConfig ec;
    ec.dt = cfg.dt;
    ec.boundary = cfg.full_line ? BoundaryMode::fixed_vacuum : BoundaryMode::odd_half_line;
    ec.record_every = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(cfg.record_dt / cfg.dt)));

    std::vector<DiagnosticsRecord> diags;
    std::vector<std::pair<double, double>> approach;
    std::vector<FieldPair> window;
    double min_sep = 1e300;
    long record_index = -1;

    auto sink = [&](const FieldPair& s) {
        DiagnosticsRecord r = diagnostics_record(s, v);
        diags.push_back(r);
        ++record_index;
        if (outputs && cfg.snapshot_stride > 0 && record_index % cfg.snapshot_stride == 0)
            outputs->snapshots.push_back(s);
        double sep = 2.0 * half_height_crossing(s);
        if (sep > 0.0) min_sep = std::min(min_sep, sep);
        if (s.t < 0.0) {
            FieldPair ref = incoming_reference(v, s.t, s.grid);
            approach.emplace_back(s.t, energy_norm(field_difference(s, ref)));
        } else if (sep >= d0 + 4.0) {
            window.push_back(s);
        }
    };

    FieldPair final_state = evolve(init, ec, T, sink);
    (void)final_state;

    double e0 = diags.front().E;
    for (const auto& r : diags)
        rep.energy_drift = std::max(rep.energy_drift, std::abs(r.E - e0) / std::abs(e0));
    rep.min_separation = min_sep;

    // approach-phase exponential fit over the signal-dominated window
    {
        double dmax = 0.0;
        for (const auto& [t, d] : approach) dmax = std::max(dmax, d);
        std::vector<double> ts, ls;
        for (const auto& [t, d] : approach) {
            if (t > -1.0 / v) continue;
            if (d < 1e-2 * dmax || d > 0.5 * dmax) continue;
            ts.push_back(t);
            ls.push_back(std::log(d));
        }
        if (ts.size() >= 4) rep.approach_rate = -ls_slope(ts, ls);
    }

    if (window.size() < 8) {
        rep.error = "post-collision window too short for the modulation series";
        if (outputs) {
            outputs->diagnostics = std::move(diags);
            outputs->approach = std::move(approach);
        }
        return rep;
    }

    std::vector<FieldPair> mirrored;
    mirrored.reserve(window.size());
    for (const auto& s : window)
        mirrored.push_back(cfg.full_line ? s : mirror_to_full_line(s));

    VelocitySeries series;
    try {
        double y_guess = half_height_crossing(window.front());
        series = velocity_series(mirrored, v, y_guess);
    } catch (const std::exception& e) {
        rep.error = e.what();
        if (outputs) {
            outputs->diagnostics = std::move(diags);
            outputs->approach = std::move(approach);
        }
        return rep;
    }

    rep.fit_ok = true;
    rep.nu_f = series.nu_f;
    rep.abs_dev = std::abs(series.nu_f - v);
    rep.rel_dev = rep.abs_dev / v;
    rep.v_drift = series.v_drift;

    // late-time center intercept (reported, no hard tolerance)
    {
        std::vector<double> ts, bs;
        std::size_t n = series.points.size();
        for (std::size_t i = n - std::max<std::size_t>(2, n / 4); i < n; ++i) {
            ts.push_back(series.points[i].t);
            bs.push_back(series.points[i].y_hat - series.nu_f * series.points[i].t);
        }
        double mean = 0.0;
        for (double b : bs) mean += b;
        rep.center_intercept = mean / static_cast<double>(bs.size());
        rep.expected_center = std::log(2.0 / (v * v)) / (2.0 * kSqrt2);
    }

    // radiation over the last quarter of the run, windowed away from the cores
    double t_quarter = T * 0.5;
    for (std::size_t i = 0; i < mirrored.size(); ++i) {
        if (series.points[i].t < t_quarter) continue;
        FieldPair pair = exact_pair_state(series.points[i].v_hat, series.points[i].y_hat,
                                          mirrored[i].grid);
        FieldPair kappa = field_difference(mirrored[i], pair);
        rep.radiation_norm_windowed = std::max(
            rep.radiation_norm_windowed, windowed_radiation_norm(kappa, series.points[i].y_hat, 8.0));
        rep.radiation_norm = std::max(rep.radiation_norm, energy_norm(kappa));
    }

    if (outputs) {
        outputs->diagnostics = std::move(diags);
        outputs->series = series.points;
        outputs->approach = std::move(approach);
    }
    return rep;
}

CollisionReport run_collision_gated(const ExperimentConfig& cfg, double v,
                                    CollisionOutputs* outputs) {
    CollisionReport rep = run_collision(cfg, v, outputs);
    if (!rep.fit_ok) return rep;
    ExperimentConfig fine = cfg;
    fine.dx = 0.5 * cfg.dx;
    fine.dt = 0.5 * cfg.dt;
    CollisionReport ref = run_collision(fine, v, nullptr);
    rep.gate_checked = true;
    if (ref.fit_ok) {
        rep.nu_f_refined = ref.nu_f;
        rep.gate_ratio = std::abs(rep.nu_f - ref.nu_f) / std::max(rep.abs_dev, 1e-300);
        rep.gate_pass = rep.gate_ratio < 0.2;
    }
    return rep;
}

SweepResult run_sweep(const ExperimentConfig& cfg) {
    std::vector<double> vs = cfg.v_list;
    if (vs.empty()) vs = {0.05, 0.1, 0.15, 0.2};
    if (vs.size() < 3) throw ConfigError("sweep: need at least 3 speeds");
    std::sort(vs.begin(), vs.end());

    SweepResult out;
    out.runs.resize(vs.size());
    std::atomic<std::size_t> next{0};
    int workers = cfg.worker_count(vs.size());
    auto work = [&]() {
        for (;;) {
            std::size_t k = next.fetch_add(1);
            if (k >= vs.size()) return;
            try {
                out.runs[k] = run_collision_gated(cfg, vs[k], nullptr);
            } catch (const std::exception& e) {
                out.runs[k].v_in = vs[k];
                out.runs[k].error = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int i = 1; i < workers; ++i) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();

    std::vector<double> lv, ldev, lrad;
    bool all_ok = true, all_gates = true;
    for (const auto& r : out.runs) {
        if (!r.fit_ok) {
            all_ok = false;
            continue;
        }
        all_gates = all_gates && r.gate_pass;
        lv.push_back(std::log(r.v_in));
        ldev.push_back(std::log(std::max(r.abs_dev, 1e-300)));
        lrad.push_back(std::log(std::max(r.radiation_norm, 1e-300)));
    }
    out.all_gates_pass = all_ok && all_gates;
    if (lv.size() >= 2) {
        out.slope_nu_dev = ls_slope(lv, ldev);
        out.slope_radiation = ls_slope(lv, lrad);
    }
    out.rel_dev_monotone = all_ok;
    for (std::size_t k = 1; k < out.runs.size() && out.rel_dev_monotone; ++k)
        if (!(out.runs[k - 1].rel_dev < out.runs[k].rel_dev)) out.rel_dev_monotone = false;
    return out;
}

OrbitalReport run_orbital(const ExperimentConfig& cfg) {
    OrbitalReport rep;
    double v0 = cfg.v;
    rep.v0 = v0;
    rep.y0 = cfg.y0 > 0.0 ? cfg.y0 : 4.0 * std::log(1.0 / v0);
    rep.psi_norm = cfg.psi_norm > 0.0 ? cfg.psi_norm : std::pow(v0, 4.125);

    double extent = cfg.domain > 0.0 ? cfg.domain : 160.0;
    Grid grid = Grid::from_range(0.0, extent, cfg.dx);
    FieldPair init = exact_pair_state(v0, rep.y0, grid);
    Rng rng(cfg.seed);
    FieldPair psi0 = random_odd_perturbation(grid, rng, rep.psi_norm, 2.0, rep.y0 + 8.0);
    for (std::size_t i = 0; i < grid.n; ++i) {
        init.phi[i] += psi0.phi[i];
        init.pi[i] += psi0.pi[i];
    }
    init.t = 0.0;
    init.phi.front() = 0.0;
    init.pi.front() = 0.0;
    init.phi.back() = 1.0;
    init.pi.back() = 0.0;

    EvolveConfig ec;
    ec.dt = cfg.dt;
    ec.boundary = BoundaryMode::odd_half_line;
    ec.record_every = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(cfg.record_dt / cfg.dt)));

    std::vector<FieldPair> snaps;
    std::vector<DiagnosticsRecord> diags;
    auto sink = [&](const FieldPair& s) {
        snaps.push_back(s);
        diags.push_back(diagnostics_record(s, v0));
    };
    evolve(init, ec, 5.0 / v0, sink);

    double e0 = diags.front().E;
    for (const auto& r : diags)
        rep.energy_drift = std::max(rep.energy_drift, std::abs(r.E - e0) / std::abs(e0));

    std::vector<FieldPair> mirrored;
    mirrored.reserve(snaps.size());
    for (const auto& s : snaps) mirrored.push_back(mirror_to_full_line(s));
    VelocitySeries series = velocity_series(mirrored, v0, rep.y0);
    rep.series = series.points;

    rep.bound_scale = std::sqrt(rep.psi_norm) +
                      std::sqrt(1.0 + rep.y0) * std::exp(-kSqrt2 * rep.y0);
    double y_first = series.points.front().y_hat;
    rep.y_monotone = true;
    for (const auto& p : series.points) {
        rep.sup_deviation =
            std::max(rep.sup_deviation, v0 * std::abs(p.v_hat - v0) + p.kappa_norm);
        if (p.y_hat < y_first - 1e-9) rep.y_monotone = false;
    }
    rep.measured_c = rep.sup_deviation / rep.bound_scale;
    return rep;
}

ResidualTable residual_table(const ExperimentConfig& cfg) {
    std::vector<double> vs = cfg.v_list;
    if (vs.empty()) vs = {0.025, 0.05, 0.1};
    std::sort(vs.begin(), vs.end());
    ResidualTable out;
    Grid grid = Grid::from_range(-40.0, 40.0, 0.005);
    std::vector<double> lv, lres;
    for (double v : vs) {
        for (double tmul : {0.0, 1.0, 2.0}) {
            double t = tmul / v;
            ResidualRow row;
            row.v = v;
            row.t = t;
            row.res_corrected = residual_lambda_l2({v, true, 0.0}, t, grid);
            row.res_bare = residual_lambda_l2({v, false, 0.0}, t, grid);
            out.rows.push_back(row);
            if (tmul == 0.0) {
                lv.push_back(std::log(v));
                lres.push_back(std::log(row.res_bare));
            }
        }
    }
    if (lv.size() >= 2) out.slope_bare_t0 = ls_slope(lv, lres);
    return out;
}

IdentityReport verify_all(const ExperimentConfig& cfg) {
    Grid vgrid = default_verification_grid();
    IdentityReport rep = identity_suite(vgrid, cfg.tol_overrides);

    auto tol_for = [&](const std::string& name, double def) {
        for (const auto& [k, t] : cfg.tol_overrides)
            if (k == name) return t;
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
        rep.checks.push_back(c);
    };
    // one-sided bound: pass iff value >= threshold
    auto add_lower_bound = [&](const std::string& name, double value, double threshold) {
        IdentityCheck c;
        c.name = name;
        c.value = value;
        c.reference = threshold;
        c.error = std::max(0.0, threshold - value);
        c.tolerance = tol_for(name, 1e-15);
        c.pass = c.error < c.tolerance;
        rep.checks.push_back(c);
    };

    // field_core closed forms
    {
        double worst = 0.0;
        for (std::size_t i = 0; i < vgrid.n; ++i) {
            double x = vgrid.x(i);
            worst = std::max(worst, std::abs(kink_eval(1, x) -
                                             std::sqrt(2.0 * potential(kink_eval(0, x)))));
        }
        add("bogomolny", worst, 0.0, 1e-12);
    }
    {
        Grid g = Grid::from_range(-20.0, 20.0, 0.005);
        std::vector<double> G(g.n), H(g.n);
        for (std::size_t i = 0; i < g.n; ++i) {
            G[i] = g_correction(0, g.x(i));
            H[i] = kink_eval(0, g.x(i));
        }
        auto Gxx = second_derivative4(G, g);
        double worst = 0.0;
        for (std::size_t i = 2; i + 2 < g.n; ++i) {
            double rhs = (-24.0 * H[i] * H[i] + 30.0 * std::pow(H[i], 4)) *
                             std::exp(-kSqrt2 * g.x(i)) +
                         8.0 * kSqrt2 * kink_eval(1, g.x(i));
            worst = std::max(worst,
                             std::abs(-Gxx[i] + potential_derivative(2, H[i]) * G[i] - rhs));
        }
        add("group_equation", worst, 0.0, 1e-6);

        double k1 = resolve_k1();
        double worst_k1 = 0.0;
        for (double x = -15.0; x <= 15.0; x += 0.1) {
            auto resid = [&](double k) {
                double h = kink_eval(0, x);
                double rhs = (-24.0 * h * h + 30.0 * std::pow(h, 4)) * std::exp(-kSqrt2 * x) +
                             8.0 * kSqrt2 * kink_eval(1, x);
                return -g_correction_with_k1(2, x, k) +
                       potential_derivative(2, h) * g_correction_with_k1(0, x, k) - rhs;
            };
            worst_k1 = std::max(worst_k1, std::abs(resid(k1) - resid(k1 + 1.0)));
        }
        add("group_equation_k1_independence", worst_k1, 0.0, 1e-10);
    }
    {
        double worst_sech = 0.0, worst_acc = 0.0;
        for (double v : {0.05, 0.1, 0.2})
            for (double t : {-31.0, -5.0, 0.0, 2.0, 17.0, 53.0}) {
                double d = separation(v, t, 0);
                worst_sech = std::max(worst_sech,
                                      std::abs(std::exp(-kSqrt2 * d) - interaction_weight(v, t)));
                worst_acc = std::max(worst_acc, std::abs(separation(v, t, 2) -
                                                         16.0 * kSqrt2 * interaction_weight(v, t)));
            }
        add("separation_sech_identity", worst_sech, 0.0, 1e-12);
        add("separation_acceleration_identity", worst_acc, 0.0, 1e-12);
    }
    {
        Grid g = Grid::from_range(-10.0, 10.0, 0.01);
        std::vector<double> f(g.n);
        for (std::size_t i = 0; i < g.n; ++i) f[i] = std::exp(-g.x(i) * g.x(i));
        add("gaussian_quadrature", integrate(f, g), 1.7724538509055160, 1e-10);
    }
    {
        double worst = 0.0;
        for (double v : {0.1, 0.3}) {
            Grid g = Grid::from_range(-40.0, 40.0, 0.01);
            FieldPair s = moving_kink_state(MovingKink(KinkOrientation::rise01, v, 0.0), 0.0, g);
            bool flag = false;
            double E = energy(s, &flag);
            worst = std::max(worst, std::abs(E * std::sqrt(1.0 - v * v) - 0.35355339059327373));
        }
        add("boost_energy_identity", worst, 0.0, 1e-6);
    }
    {
        std::vector<double> prod(vgrid.n);
        for (std::size_t i = 0; i < vgrid.n; ++i)
            prod[i] = kink_eval(1, vgrid.x(i)) * kink_eval(2, vgrid.x(i));
        add("derivative_pairing", integrate(prod, vgrid), 0.0, 1e-9);
    }

    // modulation ODE
    {
        double v = 0.1;
        double worst_w = 0.0;
        for (int k = 0; k < 100; ++k) {
            double t = -200.0 + 4.0 * k + 0.17;
            worst_w = std::max(worst_w, std::abs(wronskian(v, t) + kSqrt2 * v));
        }
        add("wronskian", worst_w, 0.0, 1e-10);

        double h = 0.02, worst_f = 0.0;
        for (double t = -200.0; t <= 200.0; t += 2.0) {
            auto Lm2 = fundamental_solutions(v, t - 2.0 * h), Lm1 = fundamental_solutions(v, t - h);
            auto Lp1 = fundamental_solutions(v, t + h), Lp2 = fundamental_solutions(v, t + 2.0 * h);
            auto L0 = fundamental_solutions(v, t);
            Matrix4 M = system_matrix(v, t);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) {
                    double deriv = (Lm2[i][j] - 8.0 * Lm1[i][j] + 8.0 * Lp1[i][j] - Lp2[i][j]) /
                                   (12.0 * h);
                    double rhs = 0.0;
                    for (int c = 0; c < 4; ++c) rhs += M[j][c] * L0[i][c];
                    worst_f = std::max(worst_f, std::abs(deriv - rhs));
                }
        }
        add("fundamental_solutions", worst_f, 0.0, 1e-7);

        Forcing4 forcing = [](double t) {
            return OdeState4{0.0, 0.0, 1e-3 * std::sin(0.3 * t), 1e-4};
        };
        OdeState4 y0{0.3, -0.2, 0.05, 0.01};
        auto traj = solve_forced(v, forcing, -30.0, y0, 30.0, 60);
        OdeState4 ref = solve_forced_rk(v, forcing, -30.0, y0, 30.0);
        double scale = 0.0, diff = 0.0;
        for (int j = 0; j < 4; ++j) {
            scale = std::max(scale, std::abs(ref[j]));
            diff = std::max(diff, std::abs(traj.back().second[j] - ref[j]));
        }
        add("forced_solve_vs_rk", diff / scale, 0.0, 1e-8);
    }

    // spectra
    {
        Grid g = Grid::from_range(-40.0, 40.0, cfg.spec_dx);
        OperatorSpec spec(ProfileKind::single_kink, g);
        SpectrumResult sr = lowest_spectrum(assemble(spec), g, 2);
        add("zero_mode_eigenvalue", sr.eigenvalues[0], 0.0, 5e-4);
        // correlation of the ground state with H'
        std::vector<double> hp(g.n);
        for (std::size_t i = 0; i < g.n; ++i) hp[i] = kink_eval(1, g.x(i));
        double corr = std::abs(inner(sr.eigenvectors[0], hp, g)) /
                      (l2_norm(sr.eigenvectors[0], g) * l2_norm(hp, g));
        add_lower_bound("zero_mode_correlation", corr, 0.9999);
        add_lower_bound("spectral_gap", sr.eigenvalues[1], 1.0);

        OperatorSpec pair(ProfileKind::kink_pair, Grid::from_range(-34.0, 46.0, cfg.spec_dx));
        pair.z = 12.0;
        SpectrumResult pr = lowest_spectrum(assemble(pair), pair.grid, 3);
        int below = 0;
        for (double ev : pr.eigenvalues)
            if (ev < 1e-2) ++below;
        add("pair_quasi_zero_count", below, 2.0, 0.5);
        add_lower_bound("pair_quasi_zero_floor", std::min(pr.eigenvalues[0], pr.eigenvalues[1]),
                        -1e-3);

        for (double z : {6.0, 9.0, 12.0}) {
            OperatorSpec ps(ProfileKind::kink_pair, Grid::from_range(-30.0, 30.0 + z, 0.02));
            ps.z = z;
            std::ostringstream name;
            name << "coercivity_pair_z" << static_cast<int>(z);
            add_lower_bound(name.str(), coercivity_check(ps, 60, cfg.seed), 0.0);
        }
        OperatorSpec bs(ProfileKind::boosted_pair, Grid::from_range(-40.0, 40.0, 0.02));
        bs.v = 0.1;
        bs.t = 0.0;
        add_lower_bound("coercivity_boosted_pair", coercivity_check(bs, 60, cfg.seed), 0.0);
    }

    // interaction integral bounds
    {
        std::vector<double> zs;
        for (double z = 2.0; z <= 20.0; z += 2.0) zs.push_back(z);
        auto p1 = interaction_bound_probe(kSqrt2, 2.0 * kSqrt2, 0, zs);
        add_lower_bound("interaction_bound_ratio", 10.0 - p1.worst_ratio, 0.0);
        auto p2 = interaction_bound_probe(kSqrt2, kSqrt2, 2, zs);
        add_lower_bound("interaction_bound_equal_rates",
                        p2.monotone_after_burn_in ? 1.0 : -1.0, 0.0);
    }
    return rep;
}

// ---- CSV ----

std::string csv_velocity_series(const std::vector<VelocitySeriesPoint>& pts) {
    std::string out = "t,v_hat,y_hat,kappa_norm,ortho_res_1,ortho_res_2\n";
    for (const auto& p : pts)
        out += fmt(p.t) + "," + fmt(p.v_hat) + "," + fmt(p.y_hat) + "," + fmt(p.kappa_norm) + "," +
               fmt(p.ortho_res_1) + "," + fmt(p.ortho_res_2) + "\n";
    return out;
}

std::string csv_diagnostics(const std::vector<DiagnosticsRecord>& recs) {
    std::string out = "t,E,P,E_plus,P_plus,phi0,M_lyap\n";
    for (const auto& r : recs)
        out += fmt(r.t) + "," + fmt(r.E) + "," + fmt(r.P) + "," + fmt(r.E_plus) + "," +
               fmt(r.P_plus) + "," + fmt(r.phi_at_0) + "," + fmt(r.M_lyap) + "\n";
    return out;
}

std::string csv_spectrum(const SpectrumResult& spec) {
    std::string out = "index,eigenvalue,residual\n";
    for (std::size_t i = 0; i < spec.eigenvalues.size(); ++i)
        out += std::to_string(i) + "," + fmt(spec.eigenvalues[i]) + "," +
               fmt(spec.residual_norms[i]) + "\n";
    return out;
}

std::string csv_residual(const ResidualTable& table) {
    std::string out = "v,t,res_bare,res_corrected\n";
    for (const auto& r : table.rows)
        out += fmt(r.v) + "," + fmt(r.t) + "," + fmt(r.res_bare) + "," + fmt(r.res_corrected) +
               "\n";
    return out;
}

std::string csv_sweep(const SweepResult& sweep) {
    std::string out =
        "v,nu_f,abs_dev,rel_dev,radiation_norm,radiation_norm_windowed,energy_drift,"
        "min_separation,approach_rate,gate_ratio,gate_pass\n";
    for (const auto& r : sweep.runs)
        out += fmt(r.v_in) + "," + fmt(r.nu_f) + "," + fmt(r.abs_dev) + "," + fmt(r.rel_dev) +
               "," + fmt(r.radiation_norm) + "," + fmt(r.radiation_norm_windowed) + "," +
               fmt(r.energy_drift) + "," + fmt(r.min_separation) + "," + fmt(r.approach_rate) +
               "," + fmt(r.gate_ratio) + "," + (r.gate_pass ? "1" : "0") + "\n";
    return out;
}

std::string csv_snapshots(const std::vector<FieldPair>& snaps) {
    std::string out;
    for (const auto& s : snaps) {
        out += fmt(s.t);
        for (double p : s.phi) out += "," + fmt(p);
        for (double p : s.pi) out += "," + fmt(p);
        out += "\n";
    }
    return out;
}

std::string csv_ode_trajectory(const std::vector<std::pair<double, std::array<double, 4>>>& traj) {
    std::string out = "t,e1,e2,xi1_dot,xi2_dot\n";
    for (const auto& [t, y] : traj)
        out += fmt(t) + "," + fmt(y[0]) + "," + fmt(y[1]) + "," + fmt(y[2]) + "," + fmt(y[3]) +
               "\n";
    return out;
}

} // namespace kinklab
