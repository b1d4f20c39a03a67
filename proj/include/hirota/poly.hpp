#pragma once
// Sparse multivariate polynomials over a backend scalar, with integer-indexed
// variables. Used for BT parameter solving, where unknowns enter polynomially.

#include "hirota/scalar.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

namespace hirota {

template <class S>
class Poly {
public:
    using Monomial = std::vector<int>;  // sorted variable indices with repetition

    Poly() = default;
    Poly(const S& c) {  // NOLINT(google-explicit-constructor)
        if (!ScalarOps<S>::is_zero(c)) t_[{}] = c;
    }
    static Poly var(int i) {
        Poly p;
        p.t_[{i}] = ScalarOps<S>::from_int(1);
        return p;
    }

    const std::map<Monomial, S>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    int degree() const {
        int d = 0;
        for (const auto& [m, c] : t_) d = std::max(d, static_cast<int>(m.size()));
        return d;
    }
    std::set<int> vars() const {
        std::set<int> v;
        for (const auto& [m, c] : t_) v.insert(m.begin(), m.end());
        return v;
    }
    S coeff(const Monomial& m) const {
        auto it = t_.find(m);
        return it == t_.end() ? ScalarOps<S>::from_int(0) : it->second;
    }
    double max_abs() const {
        double r = 0;
        for (const auto& [m, c] : t_) r = std::max(r, ScalarOps<S>::magnitude(c));
        return r;
    }

    Poly operator+(const Poly& o) const {
        Poly r = *this;
        for (const auto& [m, c] : o.t_) r.add(m, c);
        return r;
    }
    Poly operator-() const {
        Poly r;
        for (const auto& [m, c] : t_) r.t_[m] = -c;
        return r;
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }
    Poly operator*(const Poly& o) const {
        Poly r;
        for (const auto& [m1, c1] : t_)
            for (const auto& [m2, c2] : o.t_) {
                Monomial m = m1;
                m.insert(m.end(), m2.begin(), m2.end());
                std::sort(m.begin(), m.end());
                r.add(m, c1 * c2);
            }
        return r;
    }

    Poly subs(const std::map<int, S>& val) const {
        Poly r;
        for (const auto& [m, c] : t_) {
            S k = c;
            Monomial rest;
            for (int v : m) {
                auto it = val.find(v);
                if (it != val.end())
                    k = k * it->second;
                else
                    rest.push_back(v);
            }
            r.add(rest, k);
        }
        return r;
    }

    // Drops coefficients with |c| <= tol (float backend only).
    Poly pruned(double tol) const {
        Poly r;
        for (const auto& [m, c] : t_)
            if (ScalarOps<S>::magnitude(c) > tol) r.t_[m] = c;
        return r;
    }

    Poly scaled(const S& c) const {
        Poly r;
        for (const auto& [m, v] : t_) r.add(m, v * c);
        return r;
    }

private:
    std::map<Monomial, S> t_;
    void add(const Monomial& m, const S& c) {
        auto it = t_.find(m);
        if (it == t_.end()) {
            if (!ScalarOps<S>::is_zero(c)) t_[m] = c;
            return;
        }
        it->second = it->second + c;
        if (ScalarOps<S>::is_zero(it->second)) t_.erase(it);
    }
};

}  // namespace hirota
