#pragma once
// Report-producing entry points behind each CLI command.

#include "hirota/convergence.hpp"
#include "hirota/verify.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hirota {

// Continuum bilinear (N = 1..3), semi-discrete bilinear (N = 1, 2) and
// nonlinear lattice residuals on the standard fixtures.
std::vector<Report> verify_reports(EquationId id, std::uint64_t seed = kDefaultSeed);

// vacuum -> 1 and 1 -> 2 BT solves in the exact backend; SK also in float.
// Each report includes the semi-discrete residual of the returned g.
std::vector<Report> bt_reports(EquationId id);

// Lax residuals for the pairs produced by the BT solver.
std::vector<Report> lax_reports(EquationId id, std::uint64_t seed = kDefaultSeed);

double lattice_tolerance(EquationId id);  // max field error allowed for a soliton run

struct SimulationOutcome {
    Report report;
    RunResult result;
};

SimulationOutcome simulate_report(const SolverConfig& c);

// One-soliton lattice config with exact-tau boundaries.
SolverConfig soliton_config(EquationId id, double k, double h);

// Pass rules: h-study order 2 +/- 0.3 with residual <= 0.1 for KdV and order >= 1
// elsewhere; dt-study order 4 +/- 0.3.
Report study_report(const RefinementStudy& s);

nlohmann::json systems_json();

}  // namespace hirota
