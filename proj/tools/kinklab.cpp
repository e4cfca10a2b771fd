// Experiment driver: verification suites, ansatz-residual sweeps, collision
// and orbital-stability runs, spectrum and modulation-ODE checks.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "kinklab/experiments.hpp"
#include "kinklab/mod_ode.hpp"
#include "kinklab/spectral.hpp"

using json = nlohmann::ordered_json;
using namespace kinklab;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitConfigError = 2;

const std::vector<std::string> kCommonKeys = {
    "v",      "v_list",    "dx",     "dt",        "domain",  "record_dt", "t_span",
    "seed",   "y0",        "psi_norm", "out",     "threads", "full_line", "profile",
    "z",      "eigen_count", "spec_t", "spec_dx", "gate",      "snapshot_stride"};

struct Invocation {
    Config raw;
    ExperimentConfig cfg;
    bool gate = true;
};

Invocation load(const std::string& config_path, const std::vector<std::string>& overrides) {
    Invocation inv;
    if (!config_path.empty()) inv.raw = Config::from_file(config_path);
    for (const auto& o : overrides) inv.raw.apply_override(o);
    inv.raw.require_known(kCommonKeys);
    inv.cfg = ExperimentConfig::from_config(inv.raw);
    inv.cfg.validate();
    inv.gate = inv.raw.get_bool("gate", true);
    return inv;
}

void write_file(const std::string& dir, const std::string& name, const std::string& content) {
    std::filesystem::create_directories(dir);
    std::ofstream out(std::filesystem::path(dir) / name, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + name + " under " + dir);
    out << content;
}

json config_echo(const Invocation& inv) {
    json cfg = json::object();
    for (const auto& [k, v] : inv.raw.raw()) cfg[k] = v;
    json env = json::object();
    env["workers"] = inv.cfg.worker_count(64);
    const char* cap = std::getenv("KINKLAB_THREADS");
    env["KINKLAB_THREADS"] = cap ? cap : "";
    return json{{"config", cfg}, {"environment", env}};
}

void write_run_json(const Invocation& inv, const std::string& command, const json& results) {
    json doc = config_echo(inv);
    doc["command"] = command;
    doc["results"] = results;
    write_file(inv.cfg.out_dir, "run.json", doc.dump(2) + "\n");
}

json collision_json(const CollisionReport& r) {
    return json{{"v_in", r.v_in},
                {"nu_f", r.nu_f},
                {"abs_dev", r.abs_dev},
                {"rel_dev", r.rel_dev},
                {"radiation_norm", r.radiation_norm},
                {"radiation_norm_windowed", r.radiation_norm_windowed},
                {"energy_drift", r.energy_drift},
                {"min_separation", r.min_separation},
                {"expected_min_separation", r.expected_min_separation},
                {"approach_rate", r.approach_rate},
                {"center_intercept", r.center_intercept},
                {"expected_center", r.expected_center},
                {"v_drift", r.v_drift},
                {"gate_checked", r.gate_checked},
                {"gate_ratio", r.gate_ratio},
                {"gate_pass", r.gate_pass},
                {"fit_ok", r.fit_ok},
                {"error", r.error}};
}

int cmd_verify(const Invocation& inv) {
    IdentityReport rep = verify_all(inv.cfg);
    for (const auto& c : rep.checks)
        std::printf("%-38s %s  value=%.12g error=%.3g tol=%.3g\n", c.name.c_str(),
                    c.pass ? "PASS" : "FAIL", c.value, c.error, c.tolerance);
    write_file(inv.cfg.out_dir, "verify_report.json", identity_report_json(rep) + "\n");
    write_run_json(inv, "verify",
                   json{{"checks", rep.checks.size()}, {"all_pass", rep.all_pass()}});
    std::printf("%zu checks, all_pass=%d\n", rep.checks.size(), rep.all_pass() ? 1 : 0);
    return rep.all_pass() ? kExitPass : kExitCheckFailure;
}

int cmd_residual(const Invocation& inv) {
    ResidualTable table = residual_table(inv.cfg);
    write_file(inv.cfg.out_dir, "residual.csv", csv_residual(table));
    write_run_json(inv, "residual", json{{"slope_bare_t0", table.slope_bare_t0}});
    std::printf("residual table: %zu rows, bare-sum slope at t=0: %.3f\n", table.rows.size(),
                table.slope_bare_t0);
    bool corrected_wins = true;
    for (const auto& r : table.rows)
        if (!(r.res_corrected < r.res_bare)) corrected_wins = false;
    return corrected_wins ? kExitPass : kExitCheckFailure;
}

int cmd_collide(const Invocation& inv) {
    CollisionOutputs outs;
    CollisionReport rep = inv.gate ? run_collision_gated(inv.cfg, inv.cfg.v, &outs)
                                   : run_collision(inv.cfg, inv.cfg.v, &outs);
    write_file(inv.cfg.out_dir, "diagnostics.csv", csv_diagnostics(outs.diagnostics));
    write_file(inv.cfg.out_dir, "velocity_series.csv", csv_velocity_series(outs.series));
    std::string approach = "t,deviation\n";
    char buf[64];
    for (const auto& [t, d] : outs.approach) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", t, d);
        approach += buf;
    }
    write_file(inv.cfg.out_dir, "approach.csv", approach);
    if (inv.cfg.snapshot_stride > 0)
        write_file(inv.cfg.out_dir, "snapshots.csv", csv_snapshots(outs.snapshots));
    write_run_json(inv, "collide", collision_json(rep));
    std::printf("v=%.4g nu_f=%.8g |nu_f-v|=%.3g radiation=%.3g drift=%.3g min_sep=%.4g (expect %.4g)\n",
                rep.v_in, rep.nu_f, rep.abs_dev, rep.radiation_norm, rep.energy_drift,
                rep.min_separation, rep.expected_min_separation);
    if (rep.gate_checked)
        std::printf("gate: refined nu_f=%.8g ratio=%.3g %s\n", rep.nu_f_refined, rep.gate_ratio,
                    rep.gate_pass ? "pass" : "resolution-limited");
    return rep.fit_ok ? kExitPass : kExitCheckFailure;
}

int cmd_sweep(const Invocation& inv) {
    SweepResult sweep = run_sweep(inv.cfg);
    write_file(inv.cfg.out_dir, "sweep.csv", csv_sweep(sweep));
    json runs = json::array();
    for (const auto& r : sweep.runs) runs.push_back(collision_json(r));
    write_run_json(inv, "sweep",
                   json{{"slope_nu_dev", sweep.slope_nu_dev},
                        {"slope_radiation", sweep.slope_radiation},
                        {"rel_dev_monotone", sweep.rel_dev_monotone},
                        {"all_gates_pass", sweep.all_gates_pass},
                        {"runs", runs}});
    bool ok = true;
    for (const auto& r : sweep.runs) {
        std::printf("v=%.4g nu_f=%.8g |nu_f-v|/v=%.3g rad=%.3g gate=%s %s\n", r.v_in, r.nu_f,
                    r.rel_dev, r.radiation_norm, r.gate_pass ? "pass" : "limited",
                    r.error.empty() ? "" : r.error.c_str());
        ok = ok && r.fit_ok;
    }
    std::printf("slopes: |nu_f-v| %.3f, radiation %.3f, rel-dev monotone %d\n", sweep.slope_nu_dev,
                sweep.slope_radiation, sweep.rel_dev_monotone ? 1 : 0);
    return ok ? kExitPass : kExitCheckFailure;
}

int cmd_orbital(const Invocation& inv) {
    OrbitalReport rep = run_orbital(inv.cfg);
    write_file(inv.cfg.out_dir, "orbital_series.csv", csv_velocity_series(rep.series));
    write_run_json(inv, "orbital",
                   json{{"v0", rep.v0},
                        {"y0", rep.y0},
                        {"psi_norm", rep.psi_norm},
                        {"sup_deviation", rep.sup_deviation},
                        {"bound_scale", rep.bound_scale},
                        {"measured_c", rep.measured_c},
                        {"y_monotone", rep.y_monotone},
                        {"energy_drift", rep.energy_drift}});
    std::printf("orbital: sup deviation %.3g, bound scale %.3g, C=%.3g, y monotone %d\n",
                rep.sup_deviation, rep.bound_scale, rep.measured_c, rep.y_monotone ? 1 : 0);
    return (rep.measured_c <= 100.0 && rep.y_monotone) ? kExitPass : kExitCheckFailure;
}

int cmd_spectrum(const Invocation& inv) {
    ProfileKind kind;
    if (inv.cfg.profile == "single-kink")
        kind = ProfileKind::single_kink;
    else if (inv.cfg.profile == "pair")
        kind = ProfileKind::kink_pair;
    else if (inv.cfg.profile == "boosted-pair")
        kind = ProfileKind::boosted_pair;
    else if (inv.cfg.profile == "single-moving")
        kind = ProfileKind::single_moving;
    else
        throw ConfigError("profile must be one of single-kink|pair|boosted-pair|single-moving");

    double right = (kind == ProfileKind::kink_pair) ? 40.0 + inv.cfg.z : 40.0;
    OperatorSpec spec(kind, Grid::from_range(-40.0, right, inv.cfg.spec_dx));
    spec.z = inv.cfg.z;
    spec.v = inv.cfg.v;
    spec.t = inv.cfg.spec_t;
    SpectrumResult sr = lowest_spectrum(assemble(spec), spec.grid, inv.cfg.eigen_count);
    write_file(inv.cfg.out_dir, "spectrum.csv", csv_spectrum(sr));
    json evs = json::array();
    for (double ev : sr.eigenvalues) evs.push_back(ev);
    write_run_json(inv, "spectrum", json{{"eigenvalues", evs}});
    for (std::size_t i = 0; i < sr.eigenvalues.size(); ++i)
        std::printf("lambda_%zu = %.10g (residual %.2e)\n", i, sr.eigenvalues[i],
                    sr.residual_norms[i]);
    bool ok = true;
    for (double r : sr.residual_norms) ok = ok && r < 1e-8;
    return ok ? kExitPass : kExitCheckFailure;
}

int cmd_ode_check(const Invocation& inv) {
    double v = inv.cfg.v;
    double worst_w = 0.0;
    for (int k = 0; k < 100; ++k)
        worst_w = std::max(worst_w, std::abs(wronskian(v, -20.0 / v + 0.4 * k / v) +
                                             1.4142135623730951 * v));
    Forcing4 forcing = [](double t) { return OdeState4{0.0, 0.0, 1e-3 * std::sin(0.3 * t), 0.0}; };
    OdeState4 y0{0.1, 0.0, 0.02, 0.005};
    auto traj = solve_forced(v, forcing, -20.0 / v, y0, 20.0 / v, 200);
    OdeState4 ref = solve_forced_rk(v, forcing, -20.0 / v, y0, 20.0 / v);
    double diff = 0.0, scale = 0.0;
    for (int j = 0; j < 4; ++j) {
        diff = std::max(diff, std::abs(traj.back().second[j] - ref[j]));
        scale = std::max(scale, std::abs(ref[j]));
    }
    write_file(inv.cfg.out_dir, "ode_trajectory.csv", csv_ode_trajectory(traj));
    write_run_json(inv, "ode-check",
                   json{{"wronskian_deviation", worst_w}, {"rk_relative_difference", diff / scale}});
    std::printf("wronskian deviation %.3g, rk agreement %.3g\n", worst_w, diff / scale);
    return (worst_w < 1e-10 && diff / scale < 1e-8) ? kExitPass : kExitCheckFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"kink collision laboratory"};
    app.require_subcommand(1);

    struct Sub {
        CLI::App* cmd;
        std::string config_path;
        std::vector<std::string> overrides;
    };
    std::vector<std::pair<std::string, int (*)(const Invocation&)>> handlers = {
        {"verify", cmd_verify},   {"residual", cmd_residual}, {"collide", cmd_collide},
        {"sweep", cmd_sweep},     {"orbital", cmd_orbital},   {"spectrum", cmd_spectrum},
        {"ode-check", cmd_ode_check}};
    std::vector<Sub> subs;
    subs.reserve(handlers.size());
    for (auto& [name, fn] : handlers) {
        Sub s;
        s.cmd = app.add_subcommand(name);
        subs.push_back(s);
    }
    for (std::size_t i = 0; i < handlers.size(); ++i) {
        subs[i].cmd->add_option("--config", subs[i].config_path, "flat key = value config file");
        subs[i].cmd->add_option("overrides", subs[i].overrides, "key=value overrides");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitConfigError;
    }

    for (std::size_t i = 0; i < handlers.size(); ++i) {
        if (!subs[i].cmd->parsed()) continue;
        try {
            Invocation inv = load(subs[i].config_path, subs[i].overrides);
            return handlers[i].second(inv);
        } catch (const ConfigError& e) {
            std::fprintf(stderr, "config error: %s\n", e.what());
            return kExitConfigError;
        } catch (const std::exception& e) {
            std::fprintf(stderr, "error: %s\n", e.what());
            return kExitCheckFailure;
        }
    }
    return kExitConfigError;
}
