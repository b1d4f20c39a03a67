#include "hirota/convergence.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hirota {

double error_metric(const std::vector<double>& a, const std::vector<double>& b, Norm norm, double h) {
    if (a.size() != b.size())
        throw std::invalid_argument("error_metric: shape mismatch (" + std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()) + ")");
    double r = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = std::abs(a[i] - b[i]);
        r = norm == Norm::Max ? std::max(r, d) : r + d * d;
    }
    return norm == Norm::Max ? r : std::sqrt(h * r);
}

OrderFit order_fit(const std::vector<std::pair<double, double>>& levels) {
    if (levels.size() < 3) throw std::invalid_argument("order_fit: need at least 3 levels");
    std::vector<double> X, Y;
    for (const auto& [p, e] : levels) {
        if (!(p > 0)) throw std::invalid_argument("order_fit: parameter must be positive");
        if (!(e > 0)) throw std::invalid_argument("order_fit: error must be positive (got " + format_double(e) + ")");
        X.push_back(std::log10(p));
        Y.push_back(std::log10(e));
    }
    const double n = static_cast<double>(X.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < X.size(); ++i) mx += X[i] / n, my += Y[i] / n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < X.size(); ++i) {
        sxx += (X[i] - mx) * (X[i] - mx);
        sxy += (X[i] - mx) * (Y[i] - my);
    }
    if (sxx == 0) throw std::invalid_argument("order_fit: parameter values must differ");
    OrderFit f;
    f.order = sxy / sxx;
    const double b = my - f.order * mx;
    for (std::size_t i = 0; i < X.size(); ++i) f.residual = std::max(f.residual, std::abs(Y[i] - (b + f.order * X[i])));
    return f;
}

std::string protocol_name(HProtocol p) {
    return p == HProtocol::SemidiscreteExact ? "semidiscrete-exact" : "lattice-run";
}

HProtocol parse_protocol(const std::string& s) {
    if (s == "semidiscrete-exact") return HProtocol::SemidiscreteExact;
    if (s == "lattice-run") return HProtocol::LatticeRun;
    throw std::invalid_argument("unknown protocol '" + s + "' (expected semidiscrete-exact, lattice-run)");
}

void finish_study(RefinementStudy& s) {
    for (std::size_t i = 1; i < s.levels.size(); ++i) {
        if (!(s.levels[i].first < s.levels[i - 1].first))
            throw std::invalid_argument("refinement levels must be strictly decreasing");
        if (s.levels[i].second > s.levels[i - 1].second) s.monotone = false;
    }
    bool any_floor = false, all_floor = !s.levels.empty();
    for (const auto& [p, e] : s.levels) {
        bool f = e < kErrorFloor;
        any_floor = any_floor || f;
        all_floor = all_floor && f;
    }
    s.below_floor = all_floor;
    if (s.aborted || all_floor) return;
    if (any_floor) {
        s.diagnosis = "some levels below the error floor; order not fitted";
        return;
    }
    if (s.levels.size() < 3) {
        s.diagnosis = "fewer than 3 levels";
        return;
    }
    OrderFit f = order_fit(s.levels);
    s.order = f.order;
    s.residual = f.residual;
    s.fitted = true;
    if (!s.monotone) s.diagnosis = "non-monotone error sequence";
}

nlohmann::json RefinementStudy::to_json() const {
    nlohmann::json j;
    j["equation"] = equation_name(id);
    j["parameter"] = parameter;
    j["protocol"] = protocol;
    j["levels"] = nlohmann::json::array();
    for (const auto& [p, e] : levels) j["levels"].push_back({{"param", p}, {"error", e}});
    j["fitted"] = fitted;
    j["order"] = fitted ? nlohmann::json(order) : nlohmann::json(nullptr);
    j["fit_residual"] = fitted ? nlohmann::json(residual) : nlohmann::json(nullptr);
    j["below_floor"] = below_floor;
    j["monotone"] = monotone;
    j["aborted"] = aborted;
    j["diagnosis"] = diagnosis;
    return j;
}

void RefinementStudy::write_csv(std::ostream& os) const {
    os << "param,error\n";
    for (const auto& [p, e] : levels) os << format_double(p) << ',' << format_double(e) << '\n';
}

namespace {

ExpSum<cplx> one_soliton(EquationId id, double k, double l, double h, TauMode mode, bool vacuum) {
    if (vacuum) return ExpSum<cplx>::from_terms({ExpTerm<cplx>{cplx(1), {}, cplx(1)}});
    auto p = soliton_from_k(id, k, id == EquationId::KP ? std::optional<cplx>(l) : std::nullopt, h);
    auto spec = make_tau_spec<cplx>(id, cplx(h), {p}, mode);
    return build_tau(spec, mode);
}

std::pair<double, double> vu(const ExpSum<cplx>& tau, double x, double t, int s) {
    FieldJet fj(taylor_jet_float(tau, x, 0, t, s, {2, 0, 0}));
    return {fj.dlog(1).real(), fj.dlog(2).real()};
}

}  // namespace

RefinementStudy h_refinement_study(EquationId id, double k, const std::vector<double>& hs, HProtocol protocol,
                                   const HStudyOptions& opt) {
    RefinementStudy st;
    st.id = id;
    st.parameter = "h";
    st.protocol = protocol_name(protocol);
    if (!(k > 0)) throw std::invalid_argument("k must be positive");
    if (protocol == HProtocol::LatticeRun && !supports_evolution(id))
        throw std::invalid_argument("lattice-run protocol unsupported for this equation: " + equation_name(id));
    const double L = opt.window / k;
    for (double h : hs) {
        if (!(h > 0)) throw std::invalid_argument("h must be positive");
        ExpSum<cplx> cont = one_soliton(id, k, opt.l, h, TauMode::Continuum, opt.vacuum);
        const int half = static_cast<int>(std::floor(L / h));
        std::vector<double> a, b;
        if (protocol == HProtocol::SemidiscreteExact) {
            ExpSum<cplx> disc = opt.continuum_self ? cont
                                                   : one_soliton(id, k, opt.l, h, TauMode::Semidiscrete, opt.vacuum);
            for (int m = -half; m <= half; ++m) {
                auto [vc, uc] = vu(cont, m * h, opt.t, 0);
                auto [vd, ud] = opt.continuum_self ? vu(disc, m * h, opt.t, 0) : vu(disc, 0, opt.t, 2 * m);
                a.insert(a.end(), {vd, ud});
                b.insert(b.end(), {vc, uc});
            }
        } else {
            SolverConfig c;
            c.id = id;
            c.h = h;
            c.first_site = -half;
            c.M = 2 * half + 1;
            c.dt = h * h * h;
            c.t_end = opt.t;
            c.stride = std::max(1, static_cast<int>(std::lround(opt.t / c.dt)));
            c.boundary = Boundary::ExactTau;
            if (!opt.vacuum) {
                auto p = soliton_from_k(id, k, std::nullopt, h);
                c.tau = make_tau_spec<cplx>(id, cplx(h), {p}, TauMode::Semidiscrete);
            } else {
                c.tau = TauSpec<cplx>{id, cplx(h), {}, {}, std::nullopt};
            }
            RunResult r = run(c);
            if (!r.ok) {
                st.aborted = true;
                st.diagnosis = "lattice run aborted at h=" + format_double(h) + ": " + r.failure;
                break;
            }
            const LatticeState& fin = r.frames.back();
            for (int m = 0; m < fin.sites(); ++m) {
                auto [vc, uc] = vu(cont, (c.first_site + m) * h, fin.time, 0);
                a.insert(a.end(), {fin.f[0][static_cast<std::size_t>(m)], fin.f[1][static_cast<std::size_t>(m)]});
                b.insert(b.end(), {vc, uc});
            }
        }
        st.levels.emplace_back(h, error_metric(a, b));
    }
    finish_study(st);
    return st;
}

RefinementStudy dt_refinement_study(EquationId id, double k, double h, const std::vector<double>& dts,
                                    const DtStudyOptions& opt) {
    RefinementStudy st;
    st.id = id;
    st.parameter = "dt";
    st.protocol = "lattice-vs-semidiscrete-exact";
    for (double dt : dts) {
        SolverConfig c;
        c.id = id;
        c.h = h;
        c.M = opt.M;
        c.first_site = -opt.M / 2;
        c.dt = dt;
        c.t_end = opt.t_end;
        c.stride = std::max(1, static_cast<int>(std::lround(opt.t_end / dt)));
        c.boundary = Boundary::ExactTau;
        if (opt.vacuum)
            c.tau = TauSpec<cplx>{id, cplx(h), {}, {}, std::nullopt};
        else
            c.tau = make_tau_spec<cplx>(id, cplx(h), {soliton_from_k(id, k, std::nullopt, h)}, TauMode::Semidiscrete);
        RunResult r = run(c);
        if (!r.ok) {
            st.aborted = true;
            st.diagnosis = "instability at dt=" + format_double(dt) + ": " + r.failure;
            break;
        }
        double e = r.frame_error.back();
        if (!st.levels.empty() && e > 1e3 * std::max(st.levels.back().second, kErrorFloor)) {
            st.levels.emplace_back(dt, e);
            st.aborted = true;
            st.diagnosis = "instability: error grew more than 1e3x at dt=" + format_double(dt);
            break;
        }
        st.levels.emplace_back(dt, e);
    }
    finish_study(st);
    return st;
}

}  // namespace hirota
