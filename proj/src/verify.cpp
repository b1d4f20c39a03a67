#include "hirota/verify.hpp"

#include <cmath>
#include <sstream>

namespace hirota {

using nlohmann::json;

json Report::to_json() const {
    json j;
    j["kind"] = kind;
    j["equation"] = equation;
    j["name"] = name;
    j["params"] = params;
    j["grid"] = grid;
    j["tolerance"] = tolerance;
    json es = json::array();
    for (const auto& e : entries) {
        json x;
        x["label"] = e.label;
        x["max_abs"] = e.max_abs;
        x["exact"] = e.exact;
        x["pass"] = e.pass;
        if (!e.note.empty()) x["note"] = e.note;
        es.push_back(x);
    }
    j["residuals"] = es;
    j["notes"] = notes;
    j["pass"] = pass;
    return j;
}

json SampleGrid::describe() const {
    return {{"points", points.size()}, {"seed", seed}, {"rng", "mt19937_64"}, {"region", "|phase| <= 5"}};
}

namespace {

template <class S>
json scalar_json(const S& v) {
    if constexpr (ScalarOps<S>::exact)
        return v.str();
    else
        return json::array({v.real(), v.imag()});
}

template <class S>
ExpSum<S> normalized(const ExpSum<S>& f) {
    double m = f.max_abs_coeff();
    if (m == 0) return f;
    return f.scale(ScalarOps<S>::from_double(1.0 / m));
}

void check_finite(cplx v, const SamplePoint& p) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw OverflowError("non-finite value at x=" + format_double(p.x) + " t=" + format_double(p.t) +
                            " site=" + std::to_string(p.site));
}

FieldJet field_jet(const ExpSum<cplx>& tau, const SamplePoint& p, int s, JetShape sh) {
    Jet j = taylor_jet_float(tau, p.x, p.y, p.t, s, sh);
    if (std::abs(j.at(0, 0, 0)) < 1e-13)
        throw SingularPoint("tau vanishes near x=" + format_double(p.x) + " y=" + format_double(p.y) +
                            " t=" + format_double(p.t) + " site=" + std::to_string(p.site));
    return FieldJet(j);
}

}  // namespace

// ------------------------------------------------------------------- grids

template <class S>
SampleGrid core_grid(const ExpSum<S>& tau, int count, std::uint64_t seed, bool vary_y) {
    SampleGrid g;
    g.seed = seed;
    Rng rng(seed);
    ExpSum<cplx> ft = to_float(tau);
    std::vector<ExpTerm<cplx>> movers;
    for (const auto& t : ft.terms())
        if (std::abs(t.phase.ax.real()) > 1e-12) movers.push_back(t);
    for (int i = 0; i < count; ++i) {
        SamplePoint p;
        p.site = static_cast<int>(rng.integer(-3, 3));
        p.t = rng.uniform(-1, 1);
        p.y = vary_y ? rng.uniform(-1, 1) : 0.0;
        if (movers.empty()) {
            p.x = rng.uniform(-1, 1);
        } else {
            const auto& t = movers[static_cast<std::size_t>(rng.integer(0, static_cast<long>(movers.size()) - 1))];
            double target = rng.uniform(-5, 5);
            double rest = (std::log(t.coeff) + t.phase.ay * p.y + t.phase.at * p.t +
                           std::log(t.mu) * static_cast<double>(2 * p.site))
                              .real();
            p.x = (target - rest) / t.phase.ax.real();
        }
        g.points.push_back(p);
    }
    return g;
}

// --------------------------------------------------------------- bilinear

template <class S>
Report bilinear_residual(const std::vector<BilinearEquation<S>>& eqs, const ExpSum<S>& f,
                         const std::optional<ExpSum<S>>& g) {
    Report r;
    r.kind = "bilinear";
    constexpr bool exact = ScalarOps<S>::exact;
    r.tolerance = exact ? 0.0 : kFloatTol;
    ExpSum<S> a = exact ? f : normalized(f);
    ExpSum<S> b = g ? (exact ? *g : normalized(*g)) : a;
    for (const auto& eq : eqs) {
        ExpSum<S> res = hirota_apply(eq.op, a, b);
        ResidualEntry e;
        e.label = eq.label;
        e.exact = exact;
        e.max_abs = res.max_abs_coeff();
        e.pass = exact ? res.is_zero() : e.max_abs <= kFloatTol;
        if (exact && !res.is_zero()) e.note = to_string(res);
        r.add(std::move(e));
    }
    r.params["terms_f"] = f.size();
    if (g) r.params["terms_g"] = g->size();
    return r;
}

// -------------------------------------------------------------- nonlinear

template <class S>
Report nonlinear_residual(EquationId id, const ExpSum<S>& tau, double h, const SampleGrid& grid) {
    Report r;
    r.kind = "nonlinear";
    r.equation = equation_name(id);
    r.tolerance = kFloatTol;
    r.grid = grid.describe();
    r.params["h"] = h;
    NonlinearSystem sys = nonlinear_equations(id);
    std::vector<NamedExpr> all = sys.evolution;
    for (auto ne : sys.auxiliary) {
        ne.label += " (auxiliary)";
        all.push_back(ne);
    }
    std::vector<double> worst(all.size(), 0.0);
    ExpSum<cplx> ft = to_float(tau);
    FieldEnv env;
    env.params = {{"h", cplx(h)}, {"a", rho<cplx>()}};
    for (const auto& p : grid.points) {
        FieldJet j0 = field_jet(ft, p, 2 * p.site, {});
        FieldJet j1 = field_jet(ft, p, 2 * p.site + 2, {});
        env.site[0] = &j0;
        env.site[1] = &j1;
        for (std::size_t i = 0; i < all.size(); ++i) {
            cplx v = all[i].expr.eval_scalar(env);
            check_finite(v, p);
            worst[i] = std::max(worst[i], std::abs(v));
        }
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
        ResidualEntry e;
        e.label = all[i].label;
        e.max_abs = worst[i];
        e.pass = worst[i] <= kFloatTol;
        r.add(std::move(e));
    }
    return r;
}

// --------------------------------------------------------------------- BT

namespace {

template <class S>
struct PolyTerm {
    Poly<S> coeff;
    LinForm<S> phase;
    S mu;
};

template <class S>
struct Attempt {
    std::map<int, S> val;
    std::vector<Poly<S>> remaining;
    bool ok = false;
};

template <class S>
bool poly_zero(const Poly<S>& p) {
    return p.is_zero();
}

template <class S>
Poly<S> clean(const Poly<S>& p) {
    if constexpr (ScalarOps<S>::exact)
        return p;
    else
        return p.pruned(1e-9);
}

template <class S>
bool scalar_small(const S& v) {
    if constexpr (ScalarOps<S>::exact)
        return ScalarOps<S>::is_zero(v);
    else
        return std::abs(v) <= 1e-10;
}

// Iterated linear elimination: fix every determined unknown, pin the last
// free one to zero when stuck, repeat.
template <class S>
Attempt<S> solve_system(std::vector<Poly<S>> eqs, int n_unknowns) {
    using O = ScalarOps<S>;
    Attempt<S> at;
    auto& val = at.val;
    auto bail = [&](std::vector<Poly<S>> rest) {
        for (int u = 0; u < n_unknowns; ++u) val.try_emplace(u, O::from_int(0));
        at.remaining = std::move(rest);
        return at;
    };
    for (int iter = 0; iter < 4 * n_unknowns + 8; ++iter) {
        std::vector<Poly<S>> next;
        for (const auto& e : eqs) {
            Poly<S> s = clean(e.subs(val));
            if (!s.is_zero()) next.push_back(std::move(s));
        }
        eqs = std::move(next);
        for (const auto& e : eqs)
            if (e.vars().empty()) return bail(eqs);
        std::vector<const Poly<S>*> lin;
        std::set<int> vset;
        for (const auto& e : eqs)
            if (e.degree() <= 1) {
                lin.push_back(&e);
                auto v = e.vars();
                vset.insert(v.begin(), v.end());
            }
        if (lin.empty()) break;
        std::vector<int> vs(vset.begin(), vset.end());
        const std::size_t nc = vs.size();
        std::vector<std::vector<S>> rows;
        for (const auto* e : lin) {
            std::vector<S> row;
            for (int v : vs) row.push_back(e->coeff({v}));
            row.push_back(-e->coeff({}));
            rows.push_back(std::move(row));
        }
        std::vector<std::pair<std::size_t, std::size_t>> piv;
        std::size_t r = 0;
        for (std::size_t c = 0; c < nc && r < rows.size(); ++c) {
            std::size_t best = rows.size();
            double bmag = 0;
            for (std::size_t i = r; i < rows.size(); ++i) {
                if (scalar_small(rows[i][c])) continue;
                double m = O::magnitude(rows[i][c]);
                if (best == rows.size() || (!O::exact && m > bmag)) {
                    best = i;
                    bmag = m;
                    if (O::exact) break;
                }
            }
            if (best == rows.size()) continue;
            std::swap(rows[r], rows[best]);
            S inv = O::inv(rows[r][c]);
            for (auto& x : rows[r]) x = x * inv;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (i == r || scalar_small(rows[i][c])) continue;
                S fct = rows[i][c];
                for (std::size_t j = 0; j <= nc; ++j) rows[i][j] = rows[i][j] - fct * rows[r][j];
            }
            piv.emplace_back(r, c);
            ++r;
        }
        for (std::size_t i = r; i < rows.size(); ++i)
            if (!scalar_small(rows[i][nc])) return bail({Poly<S>(rows[i][nc])});
        bool fresh = false;
        std::set<std::size_t> pivcols;
        for (auto [ri, ci] : piv) {
            pivcols.insert(ci);
            bool alone = true;
            for (std::size_t j = 0; j < nc; ++j)
                if (j != ci && !scalar_small(rows[ri][j])) alone = false;
            if (alone) {
                val[vs[ci]] = rows[ri][nc];
                fresh = true;
            }
        }
        if (!fresh) {
            int last = -1;
            for (std::size_t j = 0; j < nc; ++j)
                if (!pivcols.count(j)) last = vs[j];
            if (last < 0) break;
            val[last] = O::from_int(0);
        }
    }
    for (int u = 0; u < n_unknowns; ++u) val.try_emplace(u, O::from_int(0));
    std::vector<Poly<S>> rest;
    for (const auto& e : eqs) {
        Poly<S> s = clean(e.subs(val));
        if (!s.is_zero()) rest.push_back(std::move(s));
    }
    at.remaining = std::move(rest);
    at.ok = at.remaining.empty();
    return at;
}

template <class S>
std::vector<S> theta_candidates(const std::vector<LinForm<S>>& keys, const S& h) {
    using O = ScalarOps<S>;
    std::vector<S> c{O::from_int(0)};
    auto push = [&](const std::function<S()>& make) {
        try {
            S v = make();
            for (const auto& x : c)
                if (O::compare(x, v) == 0) return;
            c.push_back(v);
        } catch (const FieldMismatch&) {
        } catch (const std::domain_error&) {
        }
    };
    const S two = O::from_int(2);
    for (const auto& key : keys) {
        const S& k = key.ax;
        const S& l = key.ay;
        const S& w = key.at;
        if (O::is_zero(k)) continue;
        for (int sg : {1, -1}) {
            S s = O::from_int(sg);
            push([&] { return s * k / two; });
            push([&] { return s * k; });
            push([&] { return s * (l + k * k) / (two * k); });
            push([&] { return s * (w / rho<S>() + k * k) / (two * k); });
            for (int e = 1; e <= 2; ++e)
                push([&] {
                    S zeta = (O::from_int(-1) + rho<S>()) / two;
                    return s * k / (O::from_int(1) - ipow(zeta, e));
                });
        }
    }
    (void)h;
    return c;
}

template <class S>
std::vector<S> nu_candidates(const S& thx, const S& h) {
    using O = ScalarOps<S>;
    std::vector<S> out{O::from_int(1), O::from_int(-1)};
    try {
        S two_h = O::from_int(2) / h;
        if (!scalar_small(thx - two_h)) {
            if (auto s = O::sqrt((thx + two_h) / (thx - two_h)); s && !O::is_zero(*s))
                for (S v : {*s, -*s, O::inv(*s), -O::inv(*s)}) out.push_back(v);
        }
    } catch (const FieldMismatch&) {
    }
    return out;
}

}  // namespace

template <class S>
BTSolution<S> solve_bt_params(EquationId id, const ExpSum<S>& f, const ExpSum<S>& g, const S& h) {
    using O = ScalarOps<S>;
    using P = Poly<S>;
    BTSolution<S> sol;
    Report& rep = sol.report;
    rep.kind = "bt";
    rep.equation = equation_name(id);
    rep.tolerance = O::exact ? 0.0 : kFloatTol;

    const auto& names = bt_slot_names(id);
    const int ns = static_cast<int>(names.size());
    std::vector<PolyTerm<S>> fterms;
    int nc = 0;
    for (const auto& t : f.terms()) {
        bool constant = t.phase.is_zero() && O::compare(t.mu, O::from_int(1)) == 0;
        P c = constant ? P(t.coeff) : P::var(ns + nc++) * P(t.coeff);
        fterms.push_back({c, t.phase, t.mu});
    }
    const int i_thy = ns + nc, i_tht = ns + nc + 1, n_unknowns = ns + nc + 2;
    std::map<std::string, P> slot;
    for (int i = 0; i < ns; ++i) slot[names[static_cast<std::size_t>(i)]] = P::var(i);
    auto ops = bt_template<P, S>(id, slot, h, [](const S& v) { return P(v); });

    std::vector<LinForm<S>> keys;
    for (const auto* src : {&f, &g})
        for (const auto& t : src->terms())
            if (!t.phase.is_zero()) keys.push_back(t.phase);

    auto assemble = [&](const S& thx, const S& nu) {
        struct Slot {
            std::size_t op;
            LinForm<S> phase;
            S mu;
            P value;
            double scale;
        };
        std::vector<Slot> acc;
        P thy = P::var(i_thy), tht = P::var(i_tht);
        for (std::size_t oi = 0; oi < ops.size(); ++oi)
            for (const auto& ft : fterms)
                for (const auto& gt : g.terms()) {
                    P dx(ft.phase.ax - gt.phase.ax - thx);
                    P dy = P(ft.phase.ay - gt.phase.ay) - thy;
                    P dt = P(ft.phase.at - gt.phase.at) - tht;
                    S mug = gt.mu * nu;
                    P tot;
                    double scale = 0;
                    for (const auto& m : ops[oi].op) {
                        P term = m.coeff;
                        for (int i = 0; i < m.mx; ++i) term = term * dx;
                        for (int i = 0; i < m.my; ++i) term = term * dy;
                        for (int i = 0; i < m.mt; ++i) term = term * dt;
                        if (m.shift != 0) term = term * P(ipow(ft.mu, m.shift) * ipow(mug, -m.shift));
                        term = term * ft.coeff * P(gt.coeff);
                        scale += term.max_abs();
                        tot = tot + term;
                    }
                    LinForm<S> ph = ft.phase + gt.phase;
                    S mu = ft.mu * gt.mu;
                    bool merged = false;
                    for (auto& s : acc)
                        if (s.op == oi && key_compare(s.phase, s.mu, ph, mu) == 0) {
                            s.value = s.value + tot;
                            s.scale += scale;
                            merged = true;
                            break;
                        }
                    if (!merged) acc.push_back({oi, ph, mu, tot, scale});
                }
        std::vector<P> eqs;
        for (auto& s : acc) {
            if (s.value.is_zero()) continue;
            if constexpr (!O::exact) s.value = s.value.scaled(O::from_double(1.0 / std::max(s.scale, 1e-300)));
            eqs.push_back(clean(s.value));
        }
        return eqs;
    };

    std::optional<Attempt<S>> best;
    S best_thx = O::from_int(0), best_nu = O::from_int(1);
    int tried = 0;
    for (const S& thx : theta_candidates(keys, h)) {
        for (const S& nu : nu_candidates(thx, h)) {
            Attempt<S> at;
            try {
                at = solve_system(assemble(thx, nu), n_unknowns);
            } catch (const FieldMismatch&) {
                continue;
            }
            ++tried;
            if (!best || at.ok || at.remaining.size() < best->remaining.size()) {
                best = at;
                best_thx = thx;
                best_nu = nu;
            }
            if (at.ok) break;
        }
        if (best && best->ok) break;
    }
    rep.params["gauge_candidates_tried"] = tried;
    if (!best) {
        rep.fail("no gauge candidate is representable in the scalar field");
        return sol;
    }

    const auto& val = best->val;
    for (int i = 0; i < ns; ++i) sol.params.slots[names[static_cast<std::size_t>(i)]] = val.at(i);
    sol.theta = {best_thx, val.at(i_thy), val.at(i_tht)};
    sol.nu = best_nu;
    {
        std::vector<ExpTerm<S>> ts;
        for (const auto& ft : fterms) ts.push_back({ft.coeff.subs(val).coeff({}), ft.phase, ft.mu});
        sol.f = ExpSum<S>::from_terms(ts);
        std::vector<ExpTerm<S>> gs;
        for (const auto& t : g.terms()) gs.push_back({t.coeff, t.phase + sol.theta, t.mu * sol.nu});
        sol.g = ExpSum<S>::from_terms(gs);
    }
    for (const auto& [k, v] : sol.params.slots) rep.params[k] = scalar_json(v);
    rep.params["theta"] = {scalar_json(sol.theta.ax), scalar_json(sol.theta.ay), scalar_json(sol.theta.at)};
    rep.params["nu"] = scalar_json(sol.nu);

    auto check = bilinear_residual(bt_system(id, sol.params, h), sol.f, std::optional<ExpSum<S>>(sol.g));
    for (auto e : check.entries) rep.add(std::move(e));
    if (!best->ok) rep.fail("irreducible residual: " + std::to_string(best->remaining.size()) + " coefficient equations");
    sol.found = rep.pass;
    return sol;
}

// -------------------------------------------------------------------- Lax

namespace {

struct PhiJet {
    Jet q;
    cplx d(int i, int j = 0, int k = 0) const { return q.deriv(i, j, k); }
};

// sum_m c_m d_y^m applied to x-derivative component j.
cplx apply_entry(const DyPoly& e, const PhiJet& phi, int j, double& mag) {
    cplx s = 0;
    for (std::size_t m = 0; m < e.c.size(); ++m) {
        if (e.c[m] == cplx(0)) continue;
        cplx t = e.c[m] * phi.d(j, static_cast<int>(m), 0);
        mag += std::abs(t);
        s += t;
    }
    return s;
}

}  // namespace

template <class S>
Report lax_residual(EquationId id, const ExpSum<S>& f, const ExpSum<S>& g, const std::map<std::string, cplx>& params,
                    double h, const SampleGrid& grid) {
    Report r;
    r.kind = "lax";
    r.equation = equation_name(id);
    r.tolerance = kFloatTol;
    r.grid = grid.describe();
    for (const auto& [k, v] : params) r.params[k] = json::array({v.real(), v.imag()});
    std::map<std::string, cplx> env = params;
    env["h"] = h;
    ExpSum<cplx> ff = to_float(f), gf = to_float(g);
    const int dim = lax_template(id).dim;
    JetShape psh{dim, 2, 1};
    double worst_sp = 0, worst_tm = 0;
    int used = 0, skipped = 0;
    for (const auto& p : grid.points) {
        try {
            PhiJet phi[2];
            FieldJet fj[2];
            for (int side = 0; side < 2; ++side) {
                int s = 2 * p.site + 2 * side;
                Jet jf = taylor_jet_float(ff, p.x, p.y, p.t, s, psh);
                Jet jg = taylor_jet_float(gf, p.x, p.y, p.t, s, psh);
                if (std::abs(jg.at(0, 0, 0)) < 1e-13) throw SingularPoint("g vanishes");
                phi[side].q = jf / jg;
                fj[side] = field_jet(gf, p, s, {});
            }
            LaxMatrices m = lax_matrices(id, env, fj[0], fj[1]);
            for (int i = 0; i < dim; ++i) {
                double mag = 0;
                cplx sp = 0, tm = phi[0].d(i, 0, 1);
                mag = std::abs(tm);
                double smag = 0;
                for (int j = 0; j < dim; ++j) {
                    sp += apply_entry(m.left[i][j], phi[1], j, smag);
                    sp -= apply_entry(m.right[i][j], phi[0], j, smag);
                    tm -= apply_entry(m.temporal[i][j], phi[0], j, mag);
                }
                check_finite(sp, p);
                check_finite(tm, p);
                worst_sp = std::max(worst_sp, std::abs(sp) / std::max(1.0, smag));
                worst_tm = std::max(worst_tm, std::abs(tm) / std::max(1.0, mag));
            }
            ++used;
        } catch (const SingularPoint&) {
            ++skipped;
        }
    }
    r.grid["skipped_singular"] = skipped;
    if (used == 0) throw SingularPoint("lax_residual: every sample is singular");
    r.add({"spatial", worst_sp, false, worst_sp <= kFloatTol, ""});
    r.add({"temporal", worst_tm, false, worst_tm <= kFloatTol, ""});
    return r;
}

// -------------------------------------------------------------- identities

namespace {

using QS = ExpSum<Quad>;

QS P(const QS& a, const QS& b, int x = 0, int y = 0, int t = 0, int r = 0) {
    return hirota_apply(HirotaOperator<Quad>{mono(Quad(1), x, y, t, r)}, a, b);
}
QS sc(const QS& a, long c) { return a.scale(Quad(c)); }
QS sc(const QS& a, long n, long d) { return a.scale(Quad(n, d)); }
QS SH(const QS& a, const QS& b) { return P(a, b, 0, 0, 0, 1) - P(a, b, 0, 0, 0, -1); }

struct D3 {
    int x = 0, y = 0, t = 0;
};

}  // namespace

std::vector<QS> identity_sides(int n, const QS& f, const QS& g) {
    const QS fg = f * g;
    auto comm = [&](int x, int y = 0, int t = 0) {
        return P(f, f, x, y, t, 1) * P(g, g, 0, 0, 0, 1) - P(f, f, 0, 0, 0, 1) * P(g, g, x, y, t, 1);
    };
    // D_d (A e+ f.g) . (B e- f.g)
    auto Dpair = [&](D3 d, D3 a, D3 b) {
        return P(P(f, g, a.x, a.y, a.t, 1), P(f, g, b.x, b.y, b.t, -1), d.x, d.y, d.t);
    };
    const D3 X{1, 0, 0}, Y{0, 1, 0}, T{0, 0, 1}, Z{}, X2{2, 0, 0}, X3{3, 0, 0};
    auto cross = [&](int a, int b) {
        return P(f, f, a, 0, 0, 1) * P(g, g, b, 0, 0, 1) - P(f, f, b, 0, 0, 1) * P(g, g, a, 0, 0, 1);
    };
    switch (n) {
        case 1: return {comm(1), SH(P(f, g, 1), fg), Dpair(X, Z, Z)};
        case 2: return {comm(2), Dpair(X, X, Z) - Dpair(X, Z, X)};
        case 3: return {Dpair(X, X, Z) + Dpair(X, Z, X), SH(P(f, g, 2), fg)};
        case 4:
            return {comm(1, 1), Dpair(Y, X, Z) - Dpair(Y, Z, X) + P(f, f, 1, 0, 0, 1) * P(g, g, 0, 1, 0, 1) -
                                    P(f, f, 0, 1, 0, 1) * P(g, g, 1, 0, 0, 1)};
        case 5: return {Dpair(Y, X, Z) + Dpair(Y, Z, X), SH(P(f, g, 1, 1), fg) + SH(P(f, g, 0, 1), P(f, g, 1))};
        case 6: return {comm(3), SH(P(f, g, 3), fg) - sc(Dpair(X, X, X), 3)};
        case 7: return {cross(1, 2), SH(P(f, g, 1), P(f, g, 2)) + Dpair(X, X, X)};
        case 8:
            return {comm(0, 1, 1), sc(Dpair(Y, T, Z) - Dpair(Y, Z, T) + Dpair(T, Y, Z) - Dpair(T, Z, Y), 1, 2)};
        case 9: {
            QS a = P(f, g, 0, 1, 0, -1), b = P(f, g, 0, 0, 0, -1), c = P(f, g, 0, 0, 1, -1);
            return {P(a, b, 0, 0, 1), P(c, b, 0, 1, 0)};
        }
        case 10: {
            QS a = P(f, g, 0, 0, 0, 1), b = P(f, g, 0, 1, 0, 1), c = P(f, g, 0, 0, 1, 1);
            return {P(a, b, 0, 0, 1), P(a, c, 0, 1, 0)};
        }
        case 11:
            return {comm(5), SH(P(f, g, 5), fg) + sc(SH(P(f, g, 3), P(f, g, 2)), 5) - sc(Dpair(X, X3, X), 5) -
                                 sc(Dpair(X, X, X3), 5) - sc(cross(3, 2), 5)};
        case 12:
            return {comm(4), Dpair(X, X3, Z) - Dpair(X, Z, X3) - sc(Dpair(X, X2, X), 3) + sc(Dpair(X, X, X2), 3) -
                                 sc(cross(3, 1), 2)};
        default: throw std::invalid_argument("identity index must be 1..12");
    }
}

Report identity_check(int n, const QS& f, const QS& g, const Quad& h) {
    Report r;
    r.kind = "identity";
    r.name = "A." + std::to_string(n);
    r.params["h"] = h.str();
    auto sides = identity_sides(n, f, g);
    for (std::size_t i = 1; i < sides.size(); ++i) {
        QS d = sides[0] - sides[i];
        r.add({"side 1 = side " + std::to_string(i + 1), d.max_abs_coeff(), true, d.is_zero(), ""});
    }
    return r;
}

ExpSum<Quad> random_sum(Rng& rng, int max_terms) {
    auto rq = [&](long lo, long hi) { return Quad(rng.integer(lo, hi), rng.integer(1, 4)); };
    int n = static_cast<int>(rng.integer(1, max_terms));
    std::vector<ExpTerm<Quad>> ts;
    for (int i = 0; i < n; ++i) {
        Quad c = rq(-5, 5);
        if (c.is_zero()) c = Quad(1);
        Quad mu = rq(1, 6);
        ts.push_back({c, {rq(-4, 4), rq(-4, 4), rq(-4, 4)}, mu});
    }
    return ExpSum<Quad>::from_terms(ts);
}

Report identity_suite(std::uint64_t seed, int pairs) {
    Report r;
    r.kind = "identity";
    r.name = "bilinear identities";
    r.grid = {{"pairs", pairs}, {"seed", seed}, {"rng", "mt19937_64"}, {"max_terms", 4}};
    Rng rng(seed);
    std::vector<int> fails(13, 0);
    for (int i = 0; i < pairs; ++i) {
        QS f = random_sum(rng), g = random_sum(rng);
        for (int n = 1; n <= 12; ++n) {
            auto sides = identity_sides(n, f, g);
            for (std::size_t s = 1; s < sides.size(); ++s)
                if (!(sides[0] - sides[s]).is_zero()) ++fails[static_cast<std::size_t>(n)];
        }
    }
    for (int n = 1; n <= 12; ++n) {
        int k = fails[static_cast<std::size_t>(n)];
        r.add({"A." + std::to_string(n), static_cast<double>(k), true, k == 0,
               std::to_string(k) + " failing pairs of " + std::to_string(pairs)});
    }
    return r;
}

// ------------------------------------------------------- instantiations

#define HIROTA_VERIFY_INST(S)                                                                                     \
    template SampleGrid core_grid<S>(const ExpSum<S>&, int, std::uint64_t, bool);                                  \
    template Report bilinear_residual<S>(const std::vector<BilinearEquation<S>>&, const ExpSum<S>&,                 \
                                         const std::optional<ExpSum<S>>&);                                          \
    template Report nonlinear_residual<S>(EquationId, const ExpSum<S>&, double, const SampleGrid&);                \
    template BTSolution<S> solve_bt_params<S>(EquationId, const ExpSum<S>&, const ExpSum<S>&, const S&);           \
    template Report lax_residual<S>(EquationId, const ExpSum<S>&, const ExpSum<S>&,                                \
                                    const std::map<std::string, cplx>&, double, const SampleGrid&);

HIROTA_VERIFY_INST(Quad)
HIROTA_VERIFY_INST(cplx)

}  // namespace hirota
