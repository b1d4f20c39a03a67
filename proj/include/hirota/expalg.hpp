#pragma once
// Exponential sums sum_i c_i * mu_i^s * exp(a_x x + a_y y + a_t t) and Hirota
// bilinear operators acting on them. s counts half-steps: site m is s = 2m.

#include "hirota/scalar.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hirota {

enum class Var { x = 0, y = 1, t = 2 };

template <class S>
struct LinForm {
    S ax = ScalarOps<S>::from_int(0);
    S ay = ScalarOps<S>::from_int(0);
    S at = ScalarOps<S>::from_int(0);

    const S& operator[](Var v) const { return v == Var::x ? ax : (v == Var::y ? ay : at); }
    LinForm operator+(const LinForm& o) const { return {ax + o.ax, ay + o.ay, at + o.at}; }
    LinForm operator-(const LinForm& o) const { return {ax - o.ax, ay - o.ay, at - o.at}; }
    LinForm operator-() const { return {-ax, -ay, -at}; }
    bool is_zero() const {
        return ScalarOps<S>::is_zero(ax) && ScalarOps<S>::is_zero(ay) && ScalarOps<S>::is_zero(at);
    }
};

template <class S>
struct ExpTerm {
    S coeff;
    LinForm<S> phase;
    S mu = ScalarOps<S>::from_int(1);
};

// Total order on (a_x, a_y, a_t, mu).
template <class S>
int key_compare(const LinForm<S>& pa, const S& ma, const LinForm<S>& pb, const S& mb) {
    using O = ScalarOps<S>;
    if (int c = O::compare(pa.ax, pb.ax)) return c;
    if (int c = O::compare(pa.ay, pb.ay)) return c;
    if (int c = O::compare(pa.at, pb.at)) return c;
    return O::compare(ma, mb);
}

class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

class SingularPoint : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

template <class S>
class ExpSum {
public:
    ExpSum() = default;

    static ExpSum constant(const S& c) { return from_terms({ExpTerm<S>{c, {}, ScalarOps<S>::from_int(1)}}); }
    static ExpSum one() { return constant(ScalarOps<S>::from_int(1)); }

    // Canonicalizes: sorts by key, merges equal keys, drops zero coefficients.
    static ExpSum from_terms(std::vector<ExpTerm<S>> ts) {
        for (const auto& t : ts)
            if (ScalarOps<S>::is_zero(t.mu)) throw std::invalid_argument("mu must be nonzero");
        std::stable_sort(ts.begin(), ts.end(), [](const ExpTerm<S>& a, const ExpTerm<S>& b) {
            return key_compare(a.phase, a.mu, b.phase, b.mu) < 0;
        });
        ExpSum r;
        for (auto& t : ts) {
            if (!r.terms_.empty() && key_compare(r.terms_.back().phase, r.terms_.back().mu, t.phase, t.mu) == 0)
                r.terms_.back().coeff = r.terms_.back().coeff + t.coeff;
            else
                r.terms_.push_back(std::move(t));
        }
        std::erase_if(r.terms_, [](const ExpTerm<S>& t) { return ScalarOps<S>::is_zero(t.coeff); });
        return r;
    }

    const std::vector<ExpTerm<S>>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    ExpSum operator+(const ExpSum& o) const {
        auto ts = terms_;
        ts.insert(ts.end(), o.terms_.begin(), o.terms_.end());
        return from_terms(std::move(ts));
    }
    ExpSum operator-() const { return scale(ScalarOps<S>::from_int(-1)); }
    ExpSum operator-(const ExpSum& o) const { return *this + (-o); }
    ExpSum operator*(const ExpSum& o) const {
        std::vector<ExpTerm<S>> ts;
        ts.reserve(terms_.size() * o.terms_.size());
        for (const auto& a : terms_)
            for (const auto& b : o.terms_) ts.push_back({a.coeff * b.coeff, a.phase + b.phase, a.mu * b.mu});
        return from_terms(std::move(ts));
    }
    ExpSum scale(const S& c) const {
        std::vector<ExpTerm<S>> ts = terms_;
        for (auto& t : ts) t.coeff = t.coeff * c;
        return from_terms(std::move(ts));
    }

    // Ordinary partial derivative.
    ExpSum partial(Var v) const {
        std::vector<ExpTerm<S>> ts = terms_;
        for (auto& t : ts) t.coeff = t.coeff * t.phase[v];
        return from_terms(std::move(ts));
    }

    // Exact emptiness: the exact backend's notion of zero.
    bool is_zero() const { return terms_.empty(); }

    // Largest |coeff| relative to a reference scale.
    double max_abs_coeff() const {
        double m = 0;
        for (const auto& t : terms_) m = std::max(m, ScalarOps<S>::magnitude(t.coeff));
        return m;
    }

private:
    std::vector<ExpTerm<S>> terms_;
};

// One monomial c * D_x^mx D_y^my D_t^mt e^{(shift h/2) D_n}.
template <class C>
struct HirotaMonomial {
    int mx = 0, my = 0, mt = 0;
    int shift = 0;
    C coeff;
};

template <class C>
using HirotaOperator = std::vector<HirotaMonomial<C>>;

template <class C>
HirotaMonomial<C> mono(C c, int mx, int my = 0, int mt = 0, int shift = 0) {
    return {mx, my, mt, shift, std::move(c)};
}

// Value of the operator on the pair (e^{pf} muf^s, e^{pg} mug^s), i.e. the
// coefficient multiplying the product term.
template <class S>
S hirota_symbol(const HirotaOperator<S>& op, const LinForm<S>& pf, const S& muf, const LinForm<S>& pg,
                const S& mug) {
    LinForm<S> d = pf - pg;
    S tot = ScalarOps<S>::from_int(0);
    for (const auto& m : op) {
        S v = m.coeff * ipow(d.ax, m.mx) * ipow(d.ay, m.my) * ipow(d.at, m.mt);
        if (m.shift != 0) v = v * ipow(muf, m.shift) * ipow(mug, -m.shift);
        tot = tot + v;
    }
    return tot;
}

template <class S>
ExpSum<S> hirota_apply(const HirotaOperator<S>& op, const ExpSum<S>& f, const ExpSum<S>& g) {
    std::vector<ExpTerm<S>> ts;
    ts.reserve(f.size() * g.size());
    for (const auto& a : f.terms())
        for (const auto& b : g.terms()) {
            S v = hirota_symbol(op, a.phase, a.mu, b.phase, b.mu);
            if (ScalarOps<S>::is_zero(v)) continue;
            ts.push_back({v * a.coeff * b.coeff, a.phase + b.phase, a.mu * b.mu});
        }
    return ExpSum<S>::from_terms(std::move(ts));
}

template <class S>
ExpTerm<S> make_term(const S& coeff, const LinForm<S>& phase, const S& mu) {
    if (ScalarOps<S>::is_zero(mu)) throw std::invalid_argument("mu must be nonzero");
    return {coeff, phase, mu};
}

// Float evaluation at (x, y, t) and half-step s.
template <class S>
cplx eval_at(const ExpSum<S>& f, double x, double y, double t, int s) {
    cplx tot = 0;
    for (const auto& term : f.terms()) {
        cplx e = ScalarOps<S>::to_complex(term.phase.ax) * x + ScalarOps<S>::to_complex(term.phase.ay) * y +
                 ScalarOps<S>::to_complex(term.phase.at) * t;
        cplx m = ScalarOps<S>::to_complex(term.mu);
        cplx lm = std::log(m) * static_cast<double>(s);
        cplx v = ScalarOps<S>::to_complex(term.coeff) * std::exp(e + lm);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw OverflowError("exponential overflow evaluating tau at x=" + format_double(x) +
                                " t=" + format_double(t) + " s=" + std::to_string(s));
        tot += v;
    }
    return tot;
}

// Max |coeff| of an exact or float residual, relative to `scale`.
template <class S>
double residual_norm(const ExpSum<S>& r, double scale = 1.0) {
    return r.max_abs_coeff() / (scale > 0 ? scale : 1.0);
}

// Float residual check: max coefficient below tol relative to the largest
// contribution magnitude.
inline bool float_zero(double resid, double scale, double tol = 1e-10) { return resid <= tol * std::max(1.0, scale); }

template <class S>
ExpSum<cplx> to_float(const ExpSum<S>& f) {
    std::vector<ExpTerm<cplx>> ts;
    for (const auto& t : f.terms())
        ts.push_back({ScalarOps<S>::to_complex(t.coeff),
                      {ScalarOps<S>::to_complex(t.phase.ax), ScalarOps<S>::to_complex(t.phase.ay),
                       ScalarOps<S>::to_complex(t.phase.at)},
                      ScalarOps<S>::to_complex(t.mu)});
    return ExpSum<cplx>::from_terms(std::move(ts));
}

template <class S>
std::string to_string(const ExpSum<S>& f) {
    if (f.empty()) return "0";
    std::string out;
    for (const auto& t : f.terms()) {
        if (!out.empty()) out += " + ";
        out += "(" + ScalarOps<S>::str(t.coeff) + ")";
        if (!t.phase.is_zero())
            out += "*exp(" + ScalarOps<S>::str(t.phase.ax) + "x " + ScalarOps<S>::str(t.phase.ay) + "y " +
                   ScalarOps<S>::str(t.phase.at) + "t)";
        if (ScalarOps<S>::compare(t.mu, ScalarOps<S>::from_int(1)) != 0) out += "*(" + ScalarOps<S>::str(t.mu) + ")^s";
    }
    return out;
}

}  // namespace hirota
