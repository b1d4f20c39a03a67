#pragma once
// Correctness checks: bilinear residuals, nonlinear lattice residuals, BT
// parameter solving, Lax-pair residuals and the bilinear identity suite.

#include "hirota/poly.hpp"
#include "hirota/soliton.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace hirota {

struct ResidualEntry {
    std::string label;
    double max_abs = 0;
    bool exact = false;  // exact backend: zero is decided symbolically
    bool pass = false;
    std::string note;
};

struct Report {
    std::string kind;  // bilinear | nonlinear | bt | lax | identity | lattice | convergence
    std::string equation;
    std::string name;
    nlohmann::json params = nlohmann::json::object();
    nlohmann::json grid = nlohmann::json::object();
    std::vector<ResidualEntry> entries;
    double tolerance = 0;
    bool pass = true;
    std::vector<std::string> notes;

    void add(ResidualEntry e) {
        pass = pass && e.pass;
        entries.push_back(std::move(e));
    }
    void fail(const std::string& why) {
        pass = false;
        notes.push_back(why);
    }
    nlohmann::json to_json() const;
};

constexpr double kFloatTol = 1e-8;

// Deterministic uniform draws in [0, 1) from a 64-bit Mersenne twister.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}
    double uniform() { return static_cast<double>(g_() >> 11) * 0x1.0p-53; }
    double uniform(double a, double b) { return a + (b - a) * uniform(); }
    long integer(long lo, long hi) { return lo + static_cast<long>(g_() % static_cast<std::uint64_t>(hi - lo + 1)); }

private:
    std::mt19937_64 g_;
};

struct SamplePoint {
    double x = 0, y = 0, t = 0;
    int site = 0;  // lattice site m, half-step s = 2m
};

struct SampleGrid {
    std::vector<SamplePoint> points;
    std::uint64_t seed = 0;
    nlohmann::json describe() const;
};

constexpr std::uint64_t kDefaultSeed = 20240607;

// Points where some soliton phase lies in [-5, 5].
template <class S>
SampleGrid core_grid(const ExpSum<S>& tau, int count = 50, std::uint64_t seed = kDefaultSeed, bool vary_y = false);

// Each equation applied to (f, g), or (f, f) when g is absent.
template <class S>
Report bilinear_residual(const std::vector<BilinearEquation<S>>& eqs, const ExpSum<S>& f,
                         const std::optional<ExpSum<S>>& g = std::nullopt);

template <class S>
Report nonlinear_residual(EquationId id, const ExpSum<S>& tau, double h, const SampleGrid& grid);

template <class S>
struct BTSolution {
    bool found = false;
    BTParams<S> params;
    LinForm<S> theta;
    S nu = ScalarOps<S>::from_int(1);
    ExpSum<S> f, g;  // f with solved term rescalings, g with the gauge applied
    Report report;
};

// Solves the BT slots (plus f term rescalings and a gauge e^theta nu^s on g)
// so that every BT equation vanishes on (f, g).
template <class S>
BTSolution<S> solve_bt_params(EquationId id, const ExpSum<S>& f, const ExpSum<S>& g, const S& h);

template <class S>
Report lax_residual(EquationId id, const ExpSum<S>& f, const ExpSum<S>& g, const std::map<std::string, cplx>& params,
                    double h, const SampleGrid& grid);

template <class S>
std::map<std::string, cplx> params_to_complex(const BTParams<S>& p, const S& h) {
    std::map<std::string, cplx> m;
    for (const auto& [k, v] : p.slots) m[k] = ScalarOps<S>::to_complex(v);
    m["h"] = ScalarOps<S>::to_complex(h);
    return m;
}

// Both sides of identity `n` (1..12). Sides after the first are compared to
// the first.
std::vector<ExpSum<Quad>> identity_sides(int n, const ExpSum<Quad>& f, const ExpSum<Quad>& g);
Report identity_check(int n, const ExpSum<Quad>& f, const ExpSum<Quad>& g, const Quad& h);

// Random exact exponential sum with 1..max_terms terms and small rational data.
ExpSum<Quad> random_sum(Rng& rng, int max_terms = 4);

// Every identity on `pairs` random pairs.
Report identity_suite(std::uint64_t seed, int pairs = 100);

}  // namespace hirota
