// Acceptance run: one PASS/FAIL line per criterion, details after a colon.

#include "hirota/cli.hpp"
#include "hirota/fixtures.hpp"
#include "hirota/suite.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace hirota;

namespace {

struct Line {
    bool pass = true;
    std::string detail;
    void note(const std::string& s) { detail += (detail.empty() ? "" : "; ") + s; }
    void require(bool ok, const std::string& s) {
        pass = pass && ok;
        if (!ok) note(s);
    }
};

std::string fmt(double v) {
    char b[32];
    std::snprintf(b, sizeof b, "%.3g", v);
    return b;
}

double worst(const Report& r) {
    double w = 0;
    for (const auto& e : r.entries) w = std::max(w, e.max_abs);
    return w;
}

template <class S>
ExpSum<S> tau(EquationId id, const S& h, const std::vector<SolitonParam<S>>& ps, TauMode mode) {
    return build_tau(make_tau_spec(id, h, ps, mode), mode);
}

Line c1() {
    Line l;
    for (EquationId id : all_equations()) {
        auto ps = exact_continuum_params(id);
        for (std::size_t n = 1; n <= 3; ++n) {
            std::vector<SolitonParam<Quad>> sub(ps.begin(), ps.begin() + static_cast<long>(n));
            Report r = bilinear_residual(get_system(id, Quad(1)).continuum, tau(id, Quad(1), sub, TauMode::Continuum));
            l.require(r.pass, equation_name(id) + " N=" + std::to_string(n) + " nonzero");
        }
    }
    return l;
}

Line c2() {
    Line l;
    for (EquationId id : all_equations()) {
        auto fx = exact_semidiscrete_fixture(id);
        for (std::size_t n = 1; n <= 2; ++n) {
            std::vector<SolitonParam<Quad>> sub(fx.params.begin(), fx.params.begin() + static_cast<long>(n));
            auto t = tau(id, fx.h, sub, TauMode::Semidiscrete);
            l.require(bilinear_residual(get_system(id, fx.h).semidiscrete, t).pass,
                      equation_name(id) + " N=" + std::to_string(n) + " nonzero");
            if (id == EquationId::Boussinesq)
                for (const auto& term : t.terms())
                    l.require(term.coeff.field() == 0 || term.coeff.field() == -3, "boussinesq scalar outside Q(sqrt -3)");
        }
    }
    return l;
}

Line c3() {
    Line l;
    Report r = identity_suite(kDefaultSeed, 100);
    int failed = 0;
    for (const auto& e : r.entries) failed += e.pass ? 0 : 1;
    l.require(r.pass, std::to_string(failed) + " identities failed");
    l.note("12 identities x 100 pairs, seed " + std::to_string(kDefaultSeed));
    return l;
}

Line c4() {
    Line l;
    for (const Report& r : [] {
             std::vector<Report> all;
             for (EquationId id : all_equations())
                 for (auto& x : verify_reports(id))
                     if (x.kind == "nonlinear") all.push_back(x);
             return all;
         }()) {
        l.require(r.pass, r.equation + " residual " + fmt(worst(r)));
        l.note(r.equation + " " + fmt(worst(r)));
    }
    l.note("sk uses k-first float solitons");
    return l;
}

Line c5() {
    Line l;
    for (EquationId id : all_equations())
        for (const Report& r : bt_reports(id)) {
            if (r.name.find("exact") == std::string::npos) continue;
            l.require(r.pass, r.equation + " " + r.name + " not solved" +
                                  (r.notes.empty() ? std::string() : " (" + r.notes.front() + ")"));
        }
    return l;
}

Line c6() {
    Line l;
    for (EquationId id : all_equations())
        for (const Report& r : lax_reports(id)) {
            l.require(r.pass, r.equation + " " + r.name + " residual " + fmt(worst(r)));
            if (r.pass) l.note(r.equation + " " + fmt(worst(r)));
        }
    return l;
}

Line c7() {
    Line l;
    for (EquationId id : {EquationId::KdV, EquationId::SK}) {
        SolverConfig c = soliton_config(id, 0.8, 0.5);
        SimulationOutcome o = simulate_report(c);
        std::string what = equation_name(id) + (o.result.ok ? " max error " + fmt(o.result.max_error)
                                                            : " aborted after " + std::to_string(o.result.steps) +
                                                                  " steps (" + o.result.failure + ")");
        l.require(o.report.pass, what);
        if (o.report.pass) l.note(what);
    }
    return l;
}

Line c8() {
    Line l;
    for (EquationId id : {EquationId::KdV, EquationId::SK}) {
        RefinementStudy s = dt_refinement_study(id, 0.8, 0.5, {4e-3, 2e-3, 1e-3});
        Report r = study_report(s);
        l.require(r.pass, "dt " + equation_name(id) + (s.aborted ? " aborted: " + s.diagnosis : " order " + fmt(s.order)));
    }
    const std::vector<double> hs{0.4, 0.2, 0.1, 0.05};
    for (EquationId id : all_equations()) {
        RefinementStudy s = h_refinement_study(id, id == EquationId::SK ? 0.6 : 1.0, hs, HProtocol::SemidiscreteExact);
        Report r = study_report(s);
        std::string what = "h " + equation_name(id) + " order " + fmt(s.order) + " (fit residual " + fmt(s.residual) + ")";
        l.require(r.pass, what);
        if (r.pass) l.note(what);
    }
    return l;
}

Line c9() {
    Line l;
    const std::vector<std::vector<std::string>> runs{
        {"identities", "--seed", "42", "--pairs", "20"},
        {"verify", "--equation", "all", "--seed", "7"},
        {"lax", "--equation", "all"},
        {"converge", "--equation", "kdv"},
    };
    for (const auto& args : runs) {
        std::ostringstream a, b, e;
        cli::main(args, a, e);
        cli::main(args, b, e);
        l.require(!a.str().empty() && a.str() == b.str(), args.front() + " output differs");
    }
    l.note(std::to_string(runs.size()) + " commands compared");
    return l;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Line()>>> criteria{
        {"continuum N-soliton exact residuals", c1},
        {"semi-discrete N-soliton exact residuals", c2},
        {"bilinear identity suite", c3},
        {"nonlinear lattice residuals <= 1e-8", c4},
        {"exact Backlund parameters", c5},
        {"Lax eigenfunction residuals <= 1e-8", c6},
        {"lattice solver fidelity", c7},
        {"refinement orders", c8},
        {"CLI determinism", c9},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto t0 = std::chrono::steady_clock::now();
        Line l;
        try {
            l = criteria[i].second();
        } catch (const std::exception& e) {
            l.pass = false;
            l.note(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failed += l.pass ? 0 : 1;
        std::cout << (l.pass ? "PASS " : "FAIL ") << i + 1 << " " << criteria[i].first << " [" << fmt(secs)
                  << " s]: " << l.detail << std::endl;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria pass"
              << std::endl;
    return failed == 0 ? 0 : 1;
}
