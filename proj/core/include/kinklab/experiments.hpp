#ifndef KINKLAB_EXPERIMENTS_HPP
#define KINKLAB_EXPERIMENTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "kinklab/config.hpp"
#include "kinklab/diagnostics.hpp"
#include "kinklab/identities.hpp"
#include "kinklab/modulation.hpp"
#include "kinklab/spectral.hpp"

namespace kinklab {

struct ExperimentConfig {
    double v = 0.1;
    std::vector<double> v_list;
    double dx = 0.02;
    double dt = 0.005;
    double domain = 0.0;    // half-line extent; 0 = per-command default
    double record_dt = 0.5; // diagnostics / modulation sampling interval
    double t_span = 0.0;    // collision half-window; 0 = 3 ln(1/v)/v
    std::uint64_t seed = 20260801;
    double y0 = 0.0;       // orbital initial half-separation; 0 = 4 ln(1/v)
    double psi_norm = 0.0; // orbital perturbation norm; 0 = v^{4.125}
    std::string out_dir = ".";
    int threads = 0; // 0 = hardware; env KINKLAB_THREADS caps
    bool full_line = false;
    int snapshot_stride = 0; // keep every k-th recorded state (0 = none)
    // spectrum command
    std::string profile = "single-kink";
    double z = 12.0;
    int eigen_count = 3;
    double spec_t = 0.0;
    double spec_dx = 0.01;
    std::vector<std::pair<std::string, double>> tol_overrides;

    static ExperimentConfig from_config(const Config& cfg);
    void validate() const; // throws ConfigError
    int worker_count(std::size_t jobs) const;
};

struct CollisionReport {
    double v_in = 0.0;
    double nu_f = 0.0;
    double abs_dev = 0.0; // |nu_f - v_in|
    double rel_dev = 0.0; // abs_dev / v_in
    double radiation_norm = 0.0;          // global energy norm of the remainder
    double radiation_norm_windowed = 0.0; // cores excised (see README)
    double energy_drift = 0.0;
    double min_separation = 0.0;
    double expected_min_separation = 0.0;
    double approach_rate = 0.0;    // fitted exponential rate (negative on approach)
    double center_intercept = 0.0; // intercept of y_hat(t) - nu_f t on the final window
    double expected_center = 0.0;  // closed-form asymptote ln(2/v^2)/(2 sqrt2)
    double v_drift = 0.0;
    double nu_f_refined = 0.0;
    double gate_ratio = 0.0; // |nu_f - nu_f_refined|/abs_dev
    bool gate_pass = false;
    bool gate_checked = false;
    bool fit_ok = false;
    std::string error;
};

struct CollisionOutputs {
    std::vector<DiagnosticsRecord> diagnostics;
    std::vector<VelocitySeriesPoint> series;
    std::vector<std::pair<double, double>> approach; // (t, distance to the free pair)
    std::vector<FieldPair> snapshots;                // per snapshot_stride
};

/** One collision run; optional capture of the diagnostic streams. */
CollisionReport run_collision(const ExperimentConfig& cfg, double v,
                              CollisionOutputs* outputs = nullptr);

/** Collision plus the halved-resolution convergence gate. */
CollisionReport run_collision_gated(const ExperimentConfig& cfg, double v,
                                    CollisionOutputs* outputs = nullptr);

struct SweepResult {
    std::vector<CollisionReport> runs;
    double slope_nu_dev = 0.0;     // log-log slope of |nu_f - v| vs v
    double slope_radiation = 0.0;  // log-log slope of radiation_norm vs v
    bool rel_dev_monotone = false; // |nu_f - v|/v decreasing as v decreases
    bool all_gates_pass = false;
};

SweepResult run_sweep(const ExperimentConfig& cfg);

struct OrbitalReport {
    double v0 = 0.0;
    double y0 = 0.0;
    double psi_norm = 0.0;
    double sup_deviation = 0.0; // sup_t v0|v(t)-v0| + ||psi(t)||
    double bound_scale = 0.0;   // ||psi_0||^{1/2} + (1+y0)^{1/2} e^{-sqrt2 y0}
    double measured_c = 0.0;    // sup_deviation / bound_scale
    bool y_monotone = false;    // y(t) >= y(0) throughout
    double energy_drift = 0.0;
    std::vector<VelocitySeriesPoint> series;
};

OrbitalReport run_orbital(const ExperimentConfig& cfg);

struct ResidualRow {
    double v = 0.0;
    double t = 0.0;
    double res_bare = 0.0;
    double res_corrected = 0.0;
};

struct ResidualTable {
    std::vector<ResidualRow> rows;
    double slope_bare_t0 = 0.0; // log-log slope of the bare residual at t = 0
};

ResidualTable residual_table(const ExperimentConfig& cfg);

/** The full verification battery (identities, spectra, ODE checks, evolution-free). */
IdentityReport verify_all(const ExperimentConfig& cfg);

// ---- CSV serialization (formats documented in the README) ----
std::string csv_velocity_series(const std::vector<VelocitySeriesPoint>& pts);
std::string csv_diagnostics(const std::vector<DiagnosticsRecord>& recs);
std::string csv_spectrum(const SpectrumResult& spec);
std::string csv_residual(const ResidualTable& table);
std::string csv_sweep(const SweepResult& sweep);
std::string csv_ode_trajectory(const std::vector<std::pair<double, std::array<double, 4>>>& traj);
std::string csv_snapshots(const std::vector<FieldPair>& snaps); // rows: t, phi..., pi...

/** Mirror a half-line state (grid starting at 0) to the odd full-line state. */
FieldPair mirror_to_full_line(const FieldPair& half);

} // namespace kinklab

#endif
