#include "hirota/jet.hpp"

#include <cmath>

namespace hirota {

namespace {
double factorial(int n) {
    double r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}
}  // namespace

Jet::Jet(JetShape sh) : sh_(sh), c_(static_cast<std::size_t>((sh.nx + 1) * (sh.ny + 1) * (sh.nt + 1)), 0.0) {}

Jet Jet::operator*(const Jet& o) const {
    Jet r(sh_);
    r.log_scale = log_scale + o.log_scale;
    for (int i = 0; i <= sh_.nx; ++i)
        for (int j = 0; j <= sh_.ny; ++j)
            for (int k = 0; k <= sh_.nt; ++k) {
                cplx a = at(i, j, k);
                if (a == cplx(0)) continue;
                for (int i2 = 0; i + i2 <= sh_.nx; ++i2)
                    for (int j2 = 0; j + j2 <= sh_.ny; ++j2)
                        for (int k2 = 0; k + k2 <= sh_.nt; ++k2) r.at(i + i2, j + j2, k + k2) += a * o.at(i2, j2, k2);
            }
    return r;
}

Jet Jet::operator/(const Jet& g) const {
    Jet q(sh_);
    q.log_scale = log_scale - g.log_scale;
    cplx g0 = g.at(0, 0, 0);
    // Increasing total degree guarantees every needed q entry is ready.
    for (int deg = 0; deg <= sh_.nx + sh_.ny + sh_.nt; ++deg)
        for (int i = 0; i <= std::min(deg, sh_.nx); ++i)
            for (int j = 0; j <= std::min(deg - i, sh_.ny); ++j) {
                int k = deg - i - j;
                if (k > sh_.nt) continue;
                cplx s = at(i, j, k);
                for (int a = 0; a <= i; ++a)
                    for (int b = 0; b <= j; ++b)
                        for (int c = 0; c <= k; ++c) {
                            if (a == 0 && b == 0 && c == 0) continue;
                            s -= g.at(a, b, c) * q.at(i - a, j - b, k - c);
                        }
                q.at(i, j, k) = s / g0;
            }
    return q;
}

Jet Jet::log() const {
    // log(c0 (1 + e)) = log c0 + sum (-1)^{n+1} e^n / n
    cplx c0 = at(0, 0, 0);
    Jet e(sh_);
    for (int i = 0; i <= sh_.nx; ++i)
        for (int j = 0; j <= sh_.ny; ++j)
            for (int k = 0; k <= sh_.nt; ++k) e.at(i, j, k) = at(i, j, k) / c0;
    e.at(0, 0, 0) = 0;
    Jet out(sh_);
    Jet pw(sh_);
    pw.at(0, 0, 0) = 1;
    int nmax = sh_.nx + sh_.ny + sh_.nt;
    for (int n = 1; n <= nmax; ++n) {
        pw = pw * e;
        double sgn = (n % 2 == 1) ? 1.0 : -1.0;
        for (int i = 0; i <= sh_.nx; ++i)
            for (int j = 0; j <= sh_.ny; ++j)
                for (int k = 0; k <= sh_.nt; ++k) out.at(i, j, k) += sgn * pw.at(i, j, k) / static_cast<double>(n);
    }
    out.at(0, 0, 0) = std::log(c0) + log_scale;
    return out;
}

cplx Jet::deriv_unscaled(int i, int j, int k) const {
    if (i > sh_.nx || j > sh_.ny || k > sh_.nt || i < 0 || j < 0 || k < 0)
        throw std::out_of_range("jet order out of range");
    return at(i, j, k) * factorial(i) * factorial(j) * factorial(k);
}

cplx Jet::deriv(int i, int j, int k) const { return deriv_unscaled(i, j, k) * std::exp(log_scale); }

Jet taylor_jet_float(const ExpSum<cplx>& f, double x, double y, double t, int s, JetShape sh) {
    Jet r(sh);
    if (f.empty()) return r;
    std::vector<cplx> expo;
    double big = -INFINITY;
    for (const auto& term : f.terms()) {
        cplx e = std::log(term.coeff) + term.phase.ax * x + term.phase.ay * y + term.phase.at * t +
                 std::log(term.mu) * static_cast<double>(s);
        expo.push_back(e);
        big = std::max(big, e.real());
    }
    r.log_scale = big;
    std::size_t n = 0;
    for (const auto& term : f.terms()) {
        cplx base = std::exp(expo[n++] - big);
        std::vector<cplx> px(sh.nx + 1), py(sh.ny + 1), pt(sh.nt + 1);
        px[0] = py[0] = pt[0] = 1;
        for (int i = 1; i <= sh.nx; ++i) px[i] = px[i - 1] * term.phase.ax / static_cast<double>(i);
        for (int j = 1; j <= sh.ny; ++j) py[j] = py[j - 1] * term.phase.ay / static_cast<double>(j);
        for (int k = 1; k <= sh.nt; ++k) pt[k] = pt[k - 1] * term.phase.at / static_cast<double>(k);
        for (int i = 0; i <= sh.nx; ++i)
            for (int j = 0; j <= sh.ny; ++j)
                for (int k = 0; k <= sh.nt; ++k) r.at(i, j, k) += base * px[i] * py[j] * pt[k];
    }
    return r;
}

FieldJet::FieldJet(const Jet& tau_jet) : log_(tau_jet.log()) {}

int FieldJet::x_order(const std::string& name) {
    static const std::map<std::string, int> ord{{"w", 0}, {"v", 1}, {"u", 2}, {"p", 3},
                                                {"q", 4}, {"r", 5}, {"s", 6}, {"eta", 7}};
    auto it = ord.find(name);
    if (it == ord.end()) throw std::invalid_argument("unknown field " + name);
    return it->second;
}

cplx FieldJet::field(const std::string& name, int dy, int dt) const { return dlog(x_order(name), dy, dt); }

}  // namespace hirota
