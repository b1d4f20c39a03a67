#include "hirota/lattice.hpp"

#include <cmath>
#include <iomanip>

namespace hirota {

std::string boundary_name(Boundary b) { return b == Boundary::ExactTau ? "exact-tau" : "zero-background"; }

Boundary parse_boundary(const std::string& s) {
    if (s == "exact-tau") return Boundary::ExactTau;
    if (s == "zero-background") return Boundary::ZeroBackground;
    throw std::invalid_argument("unknown boundary policy '" + s + "' (expected exact-tau, zero-background)");
}

bool supports_evolution(EquationId id) { return id == EquationId::KdV || id == EquationId::SK; }

void validate(const SolverConfig& c) {
    if (!supports_evolution(c.id))
        throw std::invalid_argument("evolution unsupported for this equation: " + equation_name(c.id));
    if (!(c.h > 0)) throw std::invalid_argument("h must be positive");
    if (c.M < 4) throw std::invalid_argument("M must be at least 4");
    if (!(c.dt > 0)) throw std::invalid_argument("dt must be positive");
    if (!(c.t_end >= 0)) throw std::invalid_argument("t_end must be non-negative");
    if (c.stride < 1) throw std::invalid_argument("stride must be at least 1");
    if (c.boundary == Boundary::ExactTau && !c.tau) throw std::invalid_argument("exact-tau boundary needs soliton data");
}

std::vector<double> tau_fields(const ExpSum<cplx>& tau, EquationId id, double x, double t, int site) {
    const int nf = LatticeState::field_count(id);
    Jet j = taylor_jet_float(tau, x, 0, t, 2 * site, {nf, 0, 0});
    if (std::abs(j.at(0, 0, 0)) < 1e-13)
        throw SingularPoint("tau vanishes at site " + std::to_string(site) + " t=" + format_double(t));
    FieldJet fj(j);
    std::vector<double> out(static_cast<std::size_t>(nf));
    for (int i = 0; i < nf; ++i) out[static_cast<std::size_t>(i)] = fj.dlog(i + 1).real();
    return out;
}

namespace {

using Fields = std::vector<std::vector<double>>;

// Increment X_{m+1} - X_m (SK) or the sum X_{m+1} + X_m (KdV) for field k >= 2.
double bond_rhs(EquationId id, const Fields& f, int k, std::size_t m, double h) {
    auto D = [&](int i) { return f[static_cast<std::size_t>(i)][m + 1] - f[static_cast<std::size_t>(i)][m]; };
    auto S = [&](int i) { return f[static_cast<std::size_t>(i)][m + 1] + f[static_cast<std::size_t>(i)][m]; };
    const double c2 = 2 / h, c6 = 6 / h, c12 = 12 / (h * h);
    if (id == EquationId::KdV) {
        double dv = D(0), du = D(1);
        switch (k) {
            case 2: return c2 * du - 2 * du * dv;
            case 3: return c2 * D(2) - 2 * D(2) * dv - 2 * du * du;
            case 4: return c2 * D(3) - 6 * D(2) * du - 2 * D(3) * dv;
        }
    } else {
        double dv = D(0), du = D(1), su = S(1);
        switch (k) {
            case 2: return -(3 * dv * su + dv * dv * dv - c6 * (su + dv * dv) + c12 * dv);
            case 3: {
                double sp = S(2);
                return -(3 * du * su + 3 * dv * sp + 3 * dv * dv * du - c6 * (sp + 2 * dv * du) + c12 * du);
            }
            case 4: {
                double dp = D(2), sp = S(2), sq = S(3);
                return -(3 * dp * su + 3 * dv * sq + 6 * du * sp + 6 * dv * du * du + 3 * dv * dv * dp -
                         c6 * (sq + 2 * dv * dp + 2 * du * du) + c12 * dp);
            }
            case 5: {
                double dp = D(2), dq = D(3), sp = S(2), sq = S(3), sr = S(4);
                return -(3 * dq * su + 9 * dp * sp + 9 * du * sq + 3 * dv * sr + 6 * du * du * du +
                         18 * dv * du * dp + 3 * dv * dv * dq - c6 * (sr + 2 * dv * dq + 6 * du * dp) + c12 * dq);
            }
            case 6: {
                double dp = D(2), dq = D(3), dr = D(4), sp = S(2), sq = S(3), sr = S(4), ss = S(5);
                return -(3 * dr * su + 12 * dq * sp + 18 * dp * sq + 12 * du * sr + 3 * dv * ss +
                         36 * du * du * dp + 18 * dv * dp * dp + 24 * dv * du * dq + 3 * dv * dv * dr -
                         c6 * (ss + 2 * dv * dr + 8 * du * dq + 6 * dp * dp) + c12 * dr);
            }
        }
    }
    throw std::logic_error("bond_rhs: bad field index");
}

// The KdV relations give X_{m+1} + X_m; SK gives X_{m+1} - X_m.
double march_sign(EquationId id) { return id == EquationId::KdV ? -1.0 : 1.0; }

void check_state(const LatticeState& st) {
    for (const auto& col : st.f)
        for (std::size_t m = 0; m < col.size(); ++m)
            if (!std::isfinite(col[m]) || std::abs(col[m]) > 1e150)
                throw OverflowError("lattice state blew up at site " +
                                    std::to_string(st.first_site + static_cast<int>(m)) +
                                    " t=" + format_double(st.time));
}

std::vector<double> left_values(const SolverConfig& c, const ExpSum<cplx>* tau, double t, int site) {
    if (c.boundary == Boundary::ExactTau && tau) return tau_fields(*tau, c.id, c.x, t, site);
    return {};
}

// Pins slot 0 to tau (exact-tau policy) and rebuilds auxiliaries.
void refresh(LatticeState& st, const SolverConfig& c, const ExpSum<cplx>* tau) {
    std::vector<double> left = left_values(c, tau, st.time, st.first_site);
    if (!left.empty()) {
        st.f[0][0] = left[0];
        st.f[1][0] = left[1];
        left.erase(left.begin(), left.begin() + 2);
    }
    reconstruct_aux(st, left);
}

}  // namespace

void reconstruct_aux(LatticeState& st, const std::vector<double>& left) {
    const int nf = LatticeState::field_count(st.id);
    const std::size_t M = static_cast<std::size_t>(st.sites());
    const double sg = march_sign(st.id);
    for (int k = 2; k < nf; ++k) {
        auto& col = st.f[static_cast<std::size_t>(k)];
        std::size_t li = static_cast<std::size_t>(k - 2);
        col[0] = li < left.size() ? left[li] : 0.0;
        for (std::size_t m = 0; m + 1 < M; ++m) col[m + 1] = sg * col[m] + bond_rhs(st.id, st.f, k, m, st.h);
    }
}

double marching_defect(const LatticeState& st) {
    const int nf = LatticeState::field_count(st.id);
    const std::size_t M = static_cast<std::size_t>(st.sites());
    const double sg = march_sign(st.id);
    double worst = 0;
    for (int k = 2; k < nf; ++k) {
        const auto& col = st.f[static_cast<std::size_t>(k)];
        for (std::size_t m = 0; m + 1 < M; ++m) {
            double g = bond_rhs(st.id, st.f, k, m, st.h);
            double scale = std::max({std::abs(col[m + 1]), std::abs(col[m]), std::abs(g), 1e-300});
            worst = std::max(worst, std::abs(col[m + 1] - sg * col[m] - g) / scale);
        }
    }
    return worst;
}

std::pair<std::vector<double>, std::vector<double>> time_derivative(const LatticeState& st) {
    const std::size_t M = static_cast<std::size_t>(st.sites());
    std::vector<double> vt(M), ut(M);
    const auto& F = st.f;
    for (std::size_t m = 0; m < M; ++m) {
        double u = F[1][m], p = F[2][m], q = F[3][m], r = F[4][m];
        if (st.id == EquationId::KdV) {
            vt[m] = q / 4 + 1.5 * u * u;
            ut[m] = r / 4 + 3 * u * p;
        } else {
            double s = F[5][m], eta = F[6][m];
            vt[m] = -(s + 30 * u * q + 60 * u * u * u);
            ut[m] = -(eta + 30 * p * q + 30 * u * r + 180 * u * u * p);
        }
    }
    return {vt, ut};
}

LatticeState init_from_tau(const SolverConfig& c) {
    LatticeState st;
    st.id = c.id;
    st.h = c.h;
    st.time = 0;
    st.first_site = c.first_site;
    const std::size_t nf = static_cast<std::size_t>(LatticeState::field_count(c.id));
    st.f.assign(nf, std::vector<double>(static_cast<std::size_t>(c.M), 0.0));
    if (!c.tau) return st;
    ExpSum<cplx> tau = build_tau(*c.tau, TauMode::Semidiscrete);
    for (int m = 0; m < c.M; ++m) {
        auto vals = tau_fields(tau, c.id, c.x, 0.0, c.first_site + m);
        st.f[0][static_cast<std::size_t>(m)] = vals[0];
        st.f[1][static_cast<std::size_t>(m)] = vals[1];
    }
    refresh(st, c, &tau);
    return st;
}

LatticeState rk4_step(const LatticeState& st, double dt, const SolverConfig& c) {
    std::optional<ExpSum<cplx>> tau;
    if (c.tau) tau = build_tau(*c.tau, TauMode::Semidiscrete);
    const ExpSum<cplx>* tp = tau ? &*tau : nullptr;
    const std::size_t M = static_cast<std::size_t>(st.sites());

    auto stage = [&](const LatticeState& base, const std::pair<std::vector<double>, std::vector<double>>* k,
                     double a, double t) {
        LatticeState s = base;
        s.time = t;
        if (k)
            for (std::size_t m = 0; m < M; ++m) {
                s.f[0][m] += a * k->first[m];
                s.f[1][m] += a * k->second[m];
            }
        refresh(s, c, tp);
        check_state(s);
        return s;
    };

    auto k1 = time_derivative(st);
    LatticeState s2 = stage(st, &k1, dt / 2, st.time + dt / 2);
    auto k2 = time_derivative(s2);
    LatticeState s3 = stage(st, &k2, dt / 2, st.time + dt / 2);
    auto k3 = time_derivative(s3);
    LatticeState s4 = stage(st, &k3, dt, st.time + dt);
    auto k4 = time_derivative(s4);

    LatticeState out = st;
    out.time = st.time + dt;
    for (std::size_t m = 0; m < M; ++m) {
        out.f[0][m] += dt / 6 * (k1.first[m] + 2 * k2.first[m] + 2 * k3.first[m] + k4.first[m]);
        out.f[1][m] += dt / 6 * (k1.second[m] + 2 * k2.second[m] + 2 * k3.second[m] + k4.second[m]);
    }
    refresh(out, c, tp);
    check_state(out);
    return out;
}

namespace {

double state_error(const LatticeState& st, const ExpSum<cplx>& tau, const SolverConfig& c) {
    double e = 0;
    for (int m = 0; m < st.sites(); ++m) {
        auto ex = tau_fields(tau, c.id, c.x, st.time, st.first_site + m);
        for (std::size_t k = 0; k < ex.size(); ++k)
            e = std::max(e, std::abs(st.f[k][static_cast<std::size_t>(m)] - ex[k]));
    }
    return e;
}

}  // namespace

RunResult run(const SolverConfig& c) {
    validate(c);
    RunResult res;
    std::optional<ExpSum<cplx>> tau;
    if (c.tau) tau = build_tau(*c.tau, TauMode::Semidiscrete);
    LatticeState st = init_from_tau(c);
    auto record = [&](const LatticeState& s) {
        res.frames.push_back(s);
        double e = tau ? state_error(s, *tau, c) : 0.0;
        for (const auto& col : s.f)
            for (double x : col)
                if (!tau) e = std::max(e, std::abs(x));
        res.frame_error.push_back(e);
        res.max_error = std::max(res.max_error, e);
    };
    record(st);
    const long n = std::lround(c.t_end / c.dt);
    try {
        for (long i = 1; i <= n; ++i) {
            st = rk4_step(st, c.dt, c);
            st.time = static_cast<double>(i) * c.dt;
            ++res.steps;
            if (i % c.stride == 0 || i == n) record(st);
        }
    } catch (const OverflowError& e) {
        res.ok = false;
        res.failure = e.what();
    } catch (const SingularPoint& e) {
        res.ok = false;
        res.failure = e.what();
    }
    return res;
}

void write_csv(std::ostream& os, const std::vector<LatticeState>& frames) {
    bool sk = !frames.empty() && frames.front().id == EquationId::SK;
    os << "site,time,v,u,p,q,r" << (sk ? ",s,eta" : "") << "\n";
    for (const auto& st : frames)
        for (int m = 0; m < st.sites(); ++m) {
            os << st.first_site + m << ',' << format_double(st.time);
            for (const auto& col : st.f) os << ',' << format_double(col[static_cast<std::size_t>(m)]);
            os << '\n';
        }
}

}  // namespace hirota
