#include "doctest.h"

#include <cmath>

#include "kinklab/experiments.hpp"
#include "kinklab/kink.hpp"
#include "kinklab/quadrature.hpp"

using namespace kinklab;

TEST_CASE("mirror to full line") {
    Grid half = Grid::from_range(0.0, 10.0, 0.1);
    FieldPair h(half, 3.0);
    for (std::size_t i = 0; i < half.n; ++i) {
        h.phi[i] = std::sin(0.3 * half.x(i));
        h.pi[i] = half.x(i) * std::exp(-half.x(i));
    }
    FieldPair full = mirror_to_full_line(h);
    CHECK(full.grid.n == 2 * half.n - 1);
    CHECK(full.t == 3.0);
    std::size_t mid = half.n - 1;
    CHECK(full.phi[mid] == 0.0);
    for (std::size_t i = 0; i < half.n; ++i) {
        CHECK(full.phi[mid + i] == h.phi[i]);
        CHECK(full.phi[mid - i] == -h.phi[i]);
        CHECK(full.pi[mid - i] == -h.pi[i]);
    }
    CHECK_THROWS_AS(mirror_to_full_line(FieldPair(Grid::from_range(-1.0, 1.0, 0.1))),
                    std::invalid_argument);
}

TEST_CASE("residual table: corrected beats bare, bare slope near 2") {
    ExperimentConfig cfg;
    cfg.v_list = {0.025, 0.05, 0.1};
    ResidualTable table = residual_table(cfg);
    CHECK(table.rows.size() == 9); // 3 speeds x 3 times
    for (const auto& r : table.rows) CHECK(r.res_corrected < r.res_bare);
    CHECK(table.slope_bare_t0 == doctest::Approx(2.0).epsilon(0.15));

    std::string csv = csv_residual(table);
    CHECK(csv.rfind("v,t,res_bare,res_corrected\n", 0) == 0);
}

TEST_CASE("unperturbed orbital run drifts only at the interaction scale") {
    ExperimentConfig cfg;
    cfg.v = 0.1;
    cfg.psi_norm = 1e-14; // effectively no perturbation
    OrbitalReport rep = run_orbital(cfg);
    MESSAGE("unperturbed sup deviation: ", rep.sup_deviation, ", interaction scale: ",
            std::sqrt(1.0 + rep.y0) * std::exp(-1.4142135623730951 * rep.y0));
    double interaction = std::sqrt(1.0 + rep.y0) * std::exp(-1.4142135623730951 * rep.y0);
    CHECK(rep.sup_deviation <= 100.0 * interaction);
    CHECK(rep.y_monotone);
}

TEST_CASE("csv writers carry the documented headers") {
    std::vector<DiagnosticsRecord> recs(1);
    CHECK(csv_diagnostics(recs).rfind("t,E,P,E_plus,P_plus,phi0,M_lyap\n", 0) == 0);
    std::vector<VelocitySeriesPoint> pts(1);
    CHECK(csv_velocity_series(pts).rfind("t,v_hat,y_hat,kappa_norm,ortho_res_1,ortho_res_2\n", 0) ==
          0);
    std::vector<std::pair<double, std::array<double, 4>>> traj(1);
    CHECK(csv_ode_trajectory(traj).rfind("t,e1,e2,xi1_dot,xi2_dot\n", 0) == 0);
}
