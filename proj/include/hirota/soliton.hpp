#pragma once
// Continuum and semi-discrete N-soliton tau functions (N <= 3).

#include "hirota/systems.hpp"

#include <optional>
#include <stdexcept>

namespace hirota {

template <class S>
struct SolitonParam {
    S k;
    S l = ScalarOps<S>::from_int(0);  // KP only
    S omega;
    S W = ScalarOps<S>::from_int(1);   // whole-step multiplier
    S mu = ScalarOps<S>::from_int(1);  // half-step multiplier, mu^2 = W
    S phase0 = ScalarOps<S>::from_int(1);
};

enum class TauMode { Continuum, Semidiscrete };

template <class S>
struct TauSpec {
    EquationId id;
    S h;
    std::vector<SolitonParam<S>> params;
    std::vector<std::vector<S>> interaction;  // A_ij, symmetric
    std::optional<S> triple;                  // coefficient of E1 E2 E3 relative to A12 A13 A23
};

class SolitonError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

template <class S>
bool near_zero(const S& x, double scale = 1.0) {
    if constexpr (ScalarOps<S>::exact)
        return ScalarOps<S>::is_zero(x);
    else
        return std::abs(x) <= 1e-12 * std::max(1.0, scale);
}

template <class S>
bool near_equal(const S& a, const S& b) {
    if constexpr (ScalarOps<S>::exact)
        return ScalarOps<S>::is_zero(a - b);
    else
        return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
}

// Operator symbol on a single exponential, ignoring shifts.
template <class S>
S symbol_no_shift(const HirotaOperator<S>& op, const S& k, const S& l, const S& w) {
    S t = ScalarOps<S>::from_int(0);
    for (const auto& m : op) t = t + m.coeff * ipow(k, m.mx) * ipow(l, m.my) * ipow(w, m.mt);
    return t;
}

template <class S>
S sqrt_or_throw(const S& x, const char* what) {
    auto r = ScalarOps<S>::sqrt(x);
    if (!r) throw SolitonError(std::string(what) + ": square root of " + ScalarOps<S>::str(x) + " not representable");
    return *r;
}

}  // namespace detail

// Continuum frequency of 1 + exp(kx + ly + wt).
template <class S>
S dispersion(EquationId id, const S& k, const std::optional<S>& l = std::nullopt) {
    using O = ScalarOps<S>;
    if (O::is_zero(k)) throw SolitonError("dispersion: k must be nonzero");
    if ((id == EquationId::KP) != l.has_value()) throw SolitonError("dispersion: l is required for KP only");
    switch (id) {
        case EquationId::KdV: return k * k * k / O::from_int(4);
        case EquationId::KP: return (ipow(k, 4) + O::from_int(3) * *l * *l) / (O::from_int(4) * k);
        case EquationId::Boussinesq: return detail::sqrt_or_throw(k * k + ipow(k, 4), "boussinesq dispersion");
        case EquationId::SK: return -ipow(k, 5);
        case EquationId::Ito: return -ipow(k, 3);
    }
    throw SolitonError("dispersion: unknown equation");
}

// Whole-step multiplier W making 1 + W^m exp(kx + ly + wt) solve every
// cross-pair equation. Checks agreement across the family.
template <class S>
S step_factor(EquationId id, const S& k, const S& l, const S& omega, const S& h) {
    using O = ScalarOps<S>;
    if (O::is_zero(k) && O::is_zero(l) && O::is_zero(omega)) return O::from_int(1);
    auto sys = get_system(id, h);
    std::optional<S> W;
    std::string first;
    for (const auto& eq : sys.semidiscrete) {
        if (eq.arity != Arity::Cross) continue;
        S P = detail::symbol_no_shift(eq.op, k, l, omega);
        S M = detail::symbol_no_shift(eq.op, -k, -l, -omega);
        double scale = std::max(O::magnitude(P), O::magnitude(M));
        if (detail::near_zero(P, scale) && detail::near_zero(M, scale)) continue;
        if (detail::near_zero(P, scale)) throw SolitonError("step_factor: singular parameters in " + eq.label);
        S w = -M / P;
        if (!W) {
            W = w;
            first = eq.label;
        } else if (!detail::near_equal(*W, w)) {
            throw SolitonError("step_factor: " + eq.label + " disagrees with " + first);
        }
    }
    if (!W) throw SolitonError("step_factor: no cross-pair equation constrains W");
    if (detail::near_zero(*W)) throw SolitonError("step_factor: W vanishes");
    return *W;
}

// Float 1-soliton parameters from k (and l for KP). mu is the principal root.
SolitonParam<cplx> soliton_from_k(EquationId id, cplx k, std::optional<cplx> l, cplx h);

// Exact 1-soliton parameters from the half-step multiplier mu. Boussinesq and
// SK have two branches; KP takes k and solves for l.
template <class S>
SolitonParam<S> soliton_from_mu(EquationId id, const S& mu, const S& h, int branch = 0,
                                const std::optional<S>& kp_k = std::nullopt);

// k with step_factor(id, k, h) = mu^2 (KdV, Ito, Boussinesq, SK).
template <class S>
S k_from_mu(EquationId id, const S& mu, const S& h, int branch = 0) {
    if (id == EquationId::KP) throw SolitonError("k_from_mu: KP fixes k and solves for l (use soliton_from_mu)");
    return soliton_from_mu(id, mu, h, branch).k;
}

template <class S>
SolitonParam<S> soliton_from_mu(EquationId id, const S& mu, const S& h, int branch, const std::optional<S>& kp_k) {
    using O = ScalarOps<S>;
    if (O::is_zero(mu)) throw SolitonError("soliton_from_mu: mu must be nonzero");
    const S one = O::from_int(1), two_h = O::from_int(2) / h;
    S W = mu * mu;
    SolitonParam<S> p;
    p.mu = mu;
    p.W = W;
    if (id != EquationId::KP && detail::near_zero(W - one)) {
        p.k = p.omega = O::from_int(0);
        return p;
    }
    switch (id) {
        case EquationId::KdV:
        case EquationId::Ito: {
            if (detail::near_zero(W + one)) throw SolitonError("soliton_from_mu: W = -1 is a pole");
            p.k = two_h * (W - one) / (W + one);
            p.omega = dispersion(id, p.k);
            break;
        }
        case EquationId::KP: {
            if (!kp_k) throw SolitonError("soliton_from_mu: KP needs k");
            if (detail::near_zero(W - one)) throw SolitonError("soliton_from_mu: KP with W = 1 has no finite l");
            p.k = *kp_k;
            p.l = p.k * p.k * (W + one) / (W - one) - two_h * p.k;
            p.omega = dispersion(id, p.k, std::optional<S>(p.l));
            break;
        }
        case EquationId::Boussinesq: {
            // omega = a k (k c - 2/h) with c = (W+1)/(W-1); dispersion gives a quadratic in k.
            S a = rho<S>();
            S c = (W + one) / (W - one);
            S A2 = O::from_int(3) * c * c + one, B = -O::from_int(6) * c * two_h,
              C = O::from_int(3) * two_h * two_h + one;
            S disc = detail::sqrt_or_throw(B * B - O::from_int(4) * A2 * C, "boussinesq k_from_mu");
            S sg = O::from_int(branch == 0 ? 1 : -1);
            p.k = (-B + sg * disc) / (O::from_int(2) * A2);
            p.omega = a * p.k * (p.k * c - two_h);
            break;
        }
        case EquationId::SK: {
            S a2 = W - one, b = -O::from_int(3) * (W + one) * two_h, c = O::from_int(3) * (W - one) * two_h * two_h;
            S disc = detail::sqrt_or_throw(b * b - O::from_int(4) * a2 * c, "sk k_from_mu");
            S sg = O::from_int(branch == 0 ? 1 : -1);
            p.k = (-b + sg * disc) / (O::from_int(2) * a2);
            p.omega = dispersion(id, p.k);
            break;
        }
    }
    S check = step_factor(id, p.k, p.l, p.omega, h);
    if (!detail::near_equal(check, W)) throw SolitonError("soliton_from_mu: inverse map inconsistent");
    return p;
}

template <class S>
ExpTerm<S> soliton_term(const SolitonParam<S>& p, TauMode mode) {
    return {p.phase0, {p.k, p.l, p.omega}, mode == TauMode::Continuum ? ScalarOps<S>::from_int(1) : p.mu};
}

// Pairwise coefficient A_ij from the E_i E_j key of the residual.
template <class S>
S interaction_coeff(EquationId id, const SolitonParam<S>& pi, const SolitonParam<S>& pj, const S& h, TauMode mode) {
    using O = ScalarOps<S>;
    SolitonParam<S> a = pi, b = pj;
    a.phase0 = b.phase0 = O::from_int(1);
    ExpTerm<S> ta = soliton_term(a, mode), tb = soliton_term(b, mode);
    if (key_compare(ta.phase, ta.mu, tb.phase, tb.mu) == 0)
        throw SolitonError("interaction_coeff: coincident solitons");
    auto sys = get_system(id, h);
    const auto& eqs = mode == TauMode::Continuum ? sys.continuum : sys.semidiscrete;
    ExpSum<S> base = ExpSum<S>::from_terms({{O::from_int(1), {}, O::from_int(1)}, ta, tb});
    ExpTerm<S> key{O::from_int(1), ta.phase + tb.phase, ta.mu * tb.mu};
    ExpSum<S> e12 = ExpSum<S>::from_terms({key});
    auto coeff_at = [&](const ExpSum<S>& r) {
        for (const auto& t : r.terms())
            if (key_compare(t.phase, t.mu, key.phase, key.mu) == 0) return t.coeff;
        return O::from_int(0);
    };
    std::optional<S> A;
    std::string first;
    for (const auto& eq : eqs) {
        S r0 = coeff_at(hirota_apply(eq.op, base, base));
        S r1 = coeff_at(hirota_apply(eq.op, base, e12) + hirota_apply(eq.op, e12, base));
        double scale = std::max({1.0, O::magnitude(r0), O::magnitude(r1)});
        if (detail::near_zero(r1, scale)) {
            if (!detail::near_zero(r0, scale)) throw SolitonError("interaction_coeff: no solution for " + eq.label);
            continue;
        }
        S v = -r0 / r1;
        if (!A) {
            A = v;
            first = eq.label;
        } else if (!detail::near_equal(*A, v)) {
            throw SolitonError("interaction_coeff: " + eq.label + " disagrees with " + first);
        }
    }
    if (!A) throw SolitonError("interaction_coeff: undetermined");
    return *A;
}

// Fills the interaction matrix (and the triple coefficient for N = 3).
template <class S>
TauSpec<S> make_tau_spec(EquationId id, const S& h, std::vector<SolitonParam<S>> params, TauMode mode);

template <class S>
ExpSum<S> build_tau(const TauSpec<S>& spec, TauMode mode) {
    using O = ScalarOps<S>;
    const std::size_t n = spec.params.size();
    if (n > 3) throw SolitonError("build_tau: at most 3 solitons");
    if (spec.interaction.size() < n && n > 1) throw SolitonError("build_tau: interaction matrix missing");
    std::vector<ExpTerm<S>> ts;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        ExpTerm<S> t{O::from_int(1), {}, O::from_int(1)};
        for (std::size_t i = 0; i < n; ++i) {
            if (!(mask & (1u << i))) continue;
            ExpTerm<S> e = soliton_term(spec.params[i], mode);
            t.coeff = t.coeff * e.coeff;
            t.phase = t.phase + e.phase;
            t.mu = t.mu * e.mu;
            for (std::size_t j = 0; j < i; ++j)
                if (mask & (1u << j)) t.coeff = t.coeff * spec.interaction[i][j];
        }
        if (n == 3 && mask == 7u && spec.triple) t.coeff = t.coeff * *spec.triple;
        ts.push_back(t);
    }
    return ExpSum<S>::from_terms(std::move(ts));
}

template <class S>
TauSpec<S> make_tau_spec(EquationId id, const S& h, std::vector<SolitonParam<S>> params, TauMode mode) {
    using O = ScalarOps<S>;
    const std::size_t n = params.size();
    if (n > 3) throw SolitonError("make_tau_spec: at most 3 solitons");
    TauSpec<S> spec{id, h, std::move(params), {}, std::nullopt};
    spec.interaction.assign(n, std::vector<S>(n, O::from_int(1)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            spec.interaction[i][j] = spec.interaction[j][i] =
                interaction_coeff(id, spec.params[i], spec.params[j], h, mode);
    if (n == 3) {
        // Solve for the E1E2E3 coefficient c: tau = tau_0 + c * X with X the
        // product term at unit coefficient.
        spec.triple = O::from_int(0);
        ExpSum<S> tau0 = build_tau(spec, mode);
        spec.triple = O::from_int(1);
        ExpSum<S> tau1 = build_tau(spec, mode);
        ExpSum<S> X = tau1 - tau0;
        if (X.size() != 1) throw SolitonError("make_tau_spec: degenerate triple term");
        const ExpTerm<S>& key = X.terms()[0];
        auto coeff_at = [&](const ExpSum<S>& r) {
            for (const auto& t : r.terms())
                if (key_compare(t.phase, t.mu, key.phase, key.mu) == 0) return t.coeff;
            return O::from_int(0);
        };
        auto sys = get_system(id, h);
        const auto& eqs = mode == TauMode::Continuum ? sys.continuum : sys.semidiscrete;
        std::optional<S> c;
        for (const auto& eq : eqs) {
            S r0 = coeff_at(hirota_apply(eq.op, tau0, tau0));
            S r1 = coeff_at(hirota_apply(eq.op, tau0, X) + hirota_apply(eq.op, X, tau0));
            double scale = std::max({1.0, O::magnitude(r0), O::magnitude(r1)});
            if (detail::near_zero(r1, scale)) continue;
            S v = -r0 / r1;
            if (!c) c = v;
            else if (!detail::near_equal(*c, v)) throw SolitonError("make_tau_spec: triple coefficient inconsistent in " + eq.label);
        }
        spec.triple = c.value_or(O::from_int(1));
    }
    return spec;
}

}  // namespace hirota
