#pragma once
// Truncated Taylor series in (x, y, t) with complex coefficients, and the
// field jets built from them.

#include "hirota/expalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace hirota {

struct JetShape {
    int nx = 8, ny = 2, nt = 2;  // maximum orders per variable
};

// Coefficients c[i][j][k] of dx^i dy^j dt^k (Taylor, not derivatives), times
// exp(log_scale).
class Jet {
public:
    Jet() = default;
    explicit Jet(JetShape sh);

    const JetShape& shape() const { return sh_; }
    cplx& at(int i, int j, int k) { return c_[idx(i, j, k)]; }
    const cplx& at(int i, int j, int k) const { return c_[idx(i, j, k)]; }
    cplx log_scale = 0;

    Jet operator*(const Jet& o) const;
    Jet operator/(const Jet& o) const;
    Jet log() const;  // log_scale folds into the constant term

    // d^i/dx^i d^j/dy^j d^k/dt^k of the represented function, scale included.
    cplx deriv(int i, int j = 0, int k = 0) const;
    // Same, without exp(log_scale).
    cplx deriv_unscaled(int i, int j = 0, int k = 0) const;

private:
    JetShape sh_;
    std::vector<cplx> c_;
    int idx(int i, int j, int k) const { return (i * (sh_.ny + 1) + j) * (sh_.nt + 1) + k; }
};

// Taylor jet of an exponential sum at (x, y, t), half-step s. The largest term
// is factored into log_scale so evaluation never overflows.
template <class S>
Jet taylor_jet(const ExpSum<S>& f, double x, double y, double t, int s, JetShape sh = {});

Jet taylor_jet_float(const ExpSum<cplx>& f, double x, double y, double t, int s, JetShape sh);

template <class S>
Jet taylor_jet(const ExpSum<S>& f, double x, double y, double t, int s, JetShape sh) {
    return taylor_jet_float(to_float(f), x, y, t, s, sh);
}

// Derivatives of ln tau at one site: w, v = w_x, u, p, q, r, s, eta = d^7 w,
// with up to two y and t derivatives each.
class FieldJet {
public:
    FieldJet() = default;
    FieldJet(const Jet& tau_jet);

    // Field by name with optional y/t derivative orders.
    cplx field(const std::string& name, int dy = 0, int dt = 0) const;
    cplx dlog(int i, int j = 0, int k = 0) const { return log_.deriv_unscaled(i, j, k); }
    static int x_order(const std::string& name);

private:
    Jet log_;
};

// Derivatives of f/g up to max_order (<= 3) in the listed variables.
// Throws SingularPoint when g vanishes.
template <class S>
std::map<std::array<int, 3>, cplx> ratio_jet(const ExpSum<S>& f, const ExpSum<S>& g, std::array<double, 3> point,
                                             int s, int max_order, const std::vector<Var>& vars);

template <class S>
std::map<std::array<int, 3>, cplx> ratio_jet(const ExpSum<S>& f, const ExpSum<S>& g, std::array<double, 3> point,
                                             int s, int max_order, const std::vector<Var>& vars) {
    if (max_order < 0 || max_order > 3) throw std::invalid_argument("ratio_jet: max_order must be in 0..3");
    JetShape sh{0, 0, 0};
    for (Var v : vars) {
        if (v == Var::x) sh.nx = max_order;
        if (v == Var::y) sh.ny = max_order;
        if (v == Var::t) sh.nt = max_order;
    }
    Jet jf = taylor_jet(f, point[0], point[1], point[2], s, sh);
    Jet jg = taylor_jet(g, point[0], point[1], point[2], s, sh);
    // jg is normalized so its largest term has unit size.
    if (std::abs(jg.at(0, 0, 0)) < 1e-13) throw SingularPoint("ratio_jet: denominator vanishes");
    Jet q = jf / jg;
    std::map<std::array<int, 3>, cplx> out;
    for (int i = 0; i <= sh.nx; ++i)
        for (int j = 0; j <= sh.ny; ++j)
            for (int k = 0; k <= sh.nt; ++k)
                if (i + j + k <= max_order) out[{i, j, k}] = q.deriv(i, j, k);
    return out;
}

}  // namespace hirota
