#pragma once
// Method-of-lines solver for the semi-discrete KdV and SK lattices. Primary
// fields (v, u) are stepped with RK4; auxiliary fields are rebuilt at every
// stage by marching the shift relations from the left boundary.

#include "hirota/soliton.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace hirota {

enum class Boundary { ExactTau, ZeroBackground };

std::string boundary_name(Boundary b);
Boundary parse_boundary(const std::string& s);

struct LatticeState {
    EquationId id = EquationId::KdV;
    double h = 0.5;
    double time = 0;
    int first_site = 0;  // lattice index of array slot 0
    // v, u, p, q, r, and for SK also s, eta.
    std::vector<std::vector<double>> f;

    int sites() const { return f.empty() ? 0 : static_cast<int>(f[0].size()); }
    static int field_count(EquationId id) { return id == EquationId::SK ? 7 : 5; }
};

struct SolverConfig {
    EquationId id = EquationId::KdV;
    double h = 0.5;
    int M = 256;
    double dt = 1e-3;
    double t_end = 2.0;
    int stride = 100;  // steps between recorded frames
    Boundary boundary = Boundary::ExactTau;
    std::optional<TauSpec<cplx>> tau;  // initial data and exact-tau boundary source
    int first_site = -128;
    double x = 0;  // continuous coordinate held fixed
};

void validate(const SolverConfig& c);  // throws std::invalid_argument

bool supports_evolution(EquationId id);

// Exact fields v, u, p, ... of a tau function at (x, t) and site m.
std::vector<double> tau_fields(const ExpSum<cplx>& tau, EquationId id, double x, double t, int site);

LatticeState init_from_tau(const SolverConfig& c);

// Fills p, q, r (and s, eta) left to right. `left` holds their values at
// slot 0; missing entries are taken as zero.
void reconstruct_aux(LatticeState& st, const std::vector<double>& left);

// Pointwise (v_t, u_t).
std::pair<std::vector<double>, std::vector<double>> time_derivative(const LatticeState& st);

// One classical RK4 step. Throws OverflowError on non-finite values.
LatticeState rk4_step(const LatticeState& st, double dt, const SolverConfig& c);

struct RunResult {
    std::vector<LatticeState> frames;
    std::vector<double> frame_error;  // max-abs field error vs exact tau, per frame
    double max_error = 0;
    bool ok = true;
    std::string failure;
    int steps = 0;
};

RunResult run(const SolverConfig& c);

// site,time,v,u,p,q,r[,s,eta]
void write_csv(std::ostream& os, const std::vector<LatticeState>& frames);

// Relative mismatch of each marching relation over all interior bonds.
double marching_defect(const LatticeState& st);

}  // namespace hirota
