#include "hirota/systems.hpp"

#include <stdexcept>

namespace hirota {

const std::vector<EquationId>& all_equations() {
    static const std::vector<EquationId> v{EquationId::KdV, EquationId::KP, EquationId::Boussinesq, EquationId::SK,
                                           EquationId::Ito};
    return v;
}

std::string equation_name(EquationId id) {
    switch (id) {
        case EquationId::KdV: return "kdv";
        case EquationId::KP: return "kp";
        case EquationId::Boussinesq: return "boussinesq";
        case EquationId::SK: return "sk";
        case EquationId::Ito: return "ito";
    }
    return "?";
}

EquationId parse_equation(const std::string& name) {
    for (EquationId id : all_equations())
        if (equation_name(id) == name) return id;
    if (name == "bsq" || name == "bs") return EquationId::Boussinesq;
    throw std::invalid_argument("unknown equation '" + name + "' (expected kdv, kp, boussinesq, sk, ito)");
}

const std::vector<std::string>& bt_slot_names(EquationId id) {
    static const std::vector<std::string> kdv{"beta", "gamma"};
    static const std::vector<std::string> bsq{"beta", "lambda", "eta"};
    static const std::vector<std::string> sk{"lambda"};
    static const std::vector<std::string> ito{"lambda", "omega", "mu"};
    switch (id) {
        case EquationId::KdV:
        case EquationId::KP: return kdv;
        case EquationId::Boussinesq: return bsq;
        case EquationId::SK: return sk;
        case EquationId::Ito: return ito;
    }
    return kdv;
}

namespace {

const char* kName[] = {"w", "v", "u", "p", "q", "r", "s", "eta"};

// d^i_x d^j_y d^k_t ln f at a site.
FieldExpr F(int site, int i, int j = 0, int k = 0) { return FieldExpr::field(kName[i], site, j, k); }

struct Sites {
    FieldExpr A(int i, int j = 0, int k = 0) const { return F(0, i, j, k); }
    FieldExpr B(int i, int j = 0, int k = 0) const { return F(1, i, j, k); }
    FieldExpr D(int i, int j = 0, int k = 0) const { return B(i, j, k) - A(i, j, k); }
    FieldExpr S(int i, int j = 0, int k = 0) const { return B(i, j, k) + A(i, j, k); }
};

NonlinearSystem kdv_nl() {
    Sites z;
    FieldExpr h = FieldExpr::param("h"), two_h = FieldExpr(2) / h;
    FieldExpr u = z.A(2), p = z.A(3), q = z.A(4), r = z.A(5);
    FieldExpr dv = z.D(1), du = z.D(2), dp = z.D(3), dq = z.D(4);
    NonlinearSystem s;
    s.evolution = {
        {"u_t = r/4 + 3up", z.A(2, 0, 1) - (r / FieldExpr(4) + 3 * u * p)},
        {"v_t = q/4 + 3u^2/2", z.A(1, 0, 1) - (q / FieldExpr(4) + 1.5 * u.pow(2))},
        {"p sum", z.S(3) - (two_h * du - 2 * du * dv)},
        {"q sum", z.S(4) - (two_h * dp - 2 * dp * dv - 2 * du.pow(2))},
        {"r sum", z.S(5) - (two_h * dq - 6 * dp * du - 2 * dq * dv)},
    };
    return s;
}

NonlinearSystem kp_nl() {
    Sites z;
    FieldExpr h = FieldExpr::param("h"), two_h = FieldExpr(2) / h, six_h = FieldExpr(6) / h;
    FieldExpr dv = z.D(1), du = z.D(2), dp = z.D(3), dq = z.D(4);
    NonlinearSystem s;
    s.evolution = {
        {"4u_t = r + 12up + 3v_yy", 4 * z.A(2, 0, 1) - z.A(5) - 12 * z.A(2) * z.A(3) - 3 * z.A(1, 2, 0)},
        {"p sum", z.S(3) - (two_h * du + z.D(1, 1) - 2 * dv * du)},
        {"q sum", z.S(4) - (two_h * dp + z.D(2, 1) - 2 * dv * dp - 2 * du.pow(2))},
        {"r sum", z.S(5) - (two_h * dq + z.D(3, 1) - 2 * dv * dq - 6 * du * dp)},
        {"u_y sum", 3 * z.S(2, 1) + 6 * z.S(2) * du + 6 * du * dv.pow(2) + 3 * z.D(1, 1) * dv - 4 * z.D(1, 0, 1) + dq +
                        3 * dv * z.S(3) - six_h * du * dv - six_h * z.D(1, 1)},
    };
    s.auxiliary = {
        {"u sum", z.S(2) - (two_h * dv + z.D(0, 1) - dv.pow(2))},
        {"v_y sum", 3 * (z.S(1, 1) + z.D(0, 1) * dv) - 4 * z.D(0, 0, 1) + dp + 3 * dv * z.S(2) + dv.pow(3) -
                        six_h * z.D(0, 1)},
    };
    return s;
}

NonlinearSystem bsq_nl() {
    Sites z;
    FieldExpr h = FieldExpr::param("h"), a = FieldExpr::param("a");
    FieldExpr two_a_h = 2 * a / h;
    FieldExpr u = z.A(2), p = z.A(3), q = z.A(4), r = z.A(5), sx = z.A(6);
    NonlinearSystem s;
    s.evolution = {
        {"u_tt = q + s + 12uq + 12p^2", z.A(2, 0, 2) - q - sx - 12 * u * q - 12 * p * p},
        {"v_tt = p + r + 12up", z.A(1, 0, 2) - p - r - 12 * u * p},
        {"p sum", a * z.S(3) - (two_a_h * z.D(2) + z.D(1, 0, 1) - 2 * a * z.D(2) * z.D(1))},
        {"q sum", a * z.S(4) - (two_a_h * z.D(3) + z.D(2, 0, 1) - 2 * a * z.D(3) * z.D(1) - 2 * a * z.D(2).pow(2))},
        {"r sum", a * z.S(5) - (two_a_h * z.D(4) + z.D(3, 0, 1) - 6 * a * z.D(3) * z.D(2) - 2 * a * z.D(4) * z.D(1))},
        {"s sum", a * z.S(6) - (two_a_h * z.D(5) + z.D(4, 0, 1) - 6 * a * z.D(3).pow(2) - 8 * a * z.D(4) * z.D(2) -
                                2 * a * z.D(5) * z.D(1))},
    };
    return s;
}

NonlinearSystem sk_nl() {
    Sites z;
    FieldExpr h = FieldExpr::param("h"), six_h = FieldExpr(6) / h, c12 = FieldExpr(12) / (h * h);
    FieldExpr U = z.A(2), P = z.A(3), Q = z.A(4), R = z.A(5), S6 = z.A(6), E = z.A(7);
    FieldExpr dv = z.D(1), du = z.D(2), dp = z.D(3), dq = z.D(4), dr = z.D(5), ds = z.D(6), de = z.D(7);
    FieldExpr su = z.S(2), sp = z.S(3), sq = z.S(4), sr = z.S(5), ss = z.S(6);
    NonlinearSystem s;
    s.evolution = {
        {"v_t + s + 30uq + 60u^3", z.A(1, 0, 1) + S6 + 30 * U * Q + 60 * U.pow(3)},
        {"u_t + eta + 30pq + 30ur + 180u^2p", z.A(2, 0, 1) + E + 30 * P * Q + 30 * U * R + 180 * U * U * P},
        {"p difference", dp + 3 * dv * su + dv.pow(3) - six_h * (su + dv.pow(2)) + c12 * dv},
        {"q difference",
         dq + 3 * du * su + 3 * dv * sp + 3 * dv.pow(2) * du - six_h * (sp + 2 * dv * du) + c12 * du},
        {"r difference", dr + 3 * dp * su + 3 * dv * sq + 6 * du * sp + 6 * dv * du.pow(2) + 3 * dv.pow(2) * dp -
                             six_h * (sq + 2 * dv * dp + 2 * du.pow(2)) + c12 * dp},
        {"s difference", ds + 3 * dq * su + 9 * dp * sp + 9 * du * sq + 3 * dv * sr + 6 * du.pow(3) +
                             18 * dv * du * dp + 3 * dv.pow(2) * dq - six_h * (sr + 2 * dv * dq + 6 * du * dp) +
                             c12 * dq},
        {"eta difference", de + 3 * dr * su + 12 * dq * sp + 18 * dp * sq + 12 * du * sr + 3 * dv * ss +
                               36 * du.pow(2) * dp + 18 * dv * dp.pow(2) + 24 * dv * du * dq + 3 * dv.pow(2) * dr -
                               six_h * (ss + 2 * dv * dr + 8 * du * dq + 6 * dp.pow(2)) + c12 * dr},
    };
    return s;
}

NonlinearSystem ito_nl() {
    Sites z;
    FieldExpr h = FieldExpr::param("h"), two_h = FieldExpr(2) / h;
    FieldExpr dv = z.D(1), dwt = z.D(0, 0, 1);
    NonlinearSystem s;
    s.evolution = {
        {"w_tt + p_t + 6u v_t", z.A(0, 0, 2) + z.A(3, 0, 1) + 6 * z.A(2) * z.A(1, 0, 1)},
        {"v_t sum", z.S(1, 0, 1) + dwt * dv - two_h * dwt},
        {"p_t sum", z.S(3, 0, 1) + dwt * z.D(3) + 2 * z.D(2) * z.D(1, 0, 1) + dv * z.D(2, 0, 1) - two_h * z.D(2, 0, 1)},
        {"u sum", 6 * (z.S(2) + dv.pow(2)) -
                      (FieldExpr(12) / h * dv + h * dwt + h * (z.D(3) + 3 * dv * z.S(2) + dv.pow(3)))},
    };
    return s;
}

using Row = std::vector<FieldExpr>;
using Mat = std::vector<Row>;

Mat scalar_identity(int n, const FieldExpr& c) {
    Mat m(n, Row(n, FieldExpr(0)));
    for (int i = 0; i < n; ++i) m[i][i] = c;
    return m;
}

LaxTemplate kdv_lax() {
    FieldExpr h = FieldExpr::param("h"), b = FieldExpr::param("beta"), g = FieldExpr::param("gamma");
    FieldExpr v0 = F(0, 1), v1 = F(1, 1), u0 = F(0, 2), u1 = F(1, 2), p = F(0, 3), q = F(0, 4);
    FieldExpr e = FieldExpr(1) / h + v0 - v1;
    LaxTemplate L;
    L.dim = 2;
    L.left = scalar_identity(2, b);
    L.right = {{e, 1}, {g - u0 - u1, e}};
    L.temporal = {{-p / FieldExpr(2), g + u0}, {-q / FieldExpr(2) + (g - 2 * u0) * (g + u0), p / FieldExpr(2)}};
    return L;
}

LaxTemplate kp_lax() {
    FieldExpr h = FieldExpr::param("h"), b = FieldExpr::param("beta"), g = FieldExpr::param("gamma");
    FieldExpr v0 = F(0, 1), v1 = F(1, 1), u0 = F(0, 2), u1 = F(1, 2), p = F(0, 3), q = F(0, 4);
    FieldExpr vy = F(0, 1, 1), uy = F(0, 2, 1), Dy = FieldExpr::dy(1), Dy2 = FieldExpr::dy(2);
    FieldExpr e = FieldExpr(1) / h + v0 - v1;
    LaxTemplate L;
    L.dim = 2;
    L.left = scalar_identity(2, b);
    L.right = {{e, 1}, {Dy - u0 - u1 - g, e}};
    L.temporal = {{1.5 * vy - p / FieldExpr(2), Dy - g + u0},
                  {-uy / FieldExpr(2) - q / FieldExpr(2) + (g - u0) * (g + 2 * u0) - (2 * g + u0) * Dy + Dy2,
                   1.5 * vy + p / FieldExpr(2)}};
    return L;
}

LaxTemplate bsq_lax() {
    FieldExpr h = FieldExpr::param("h"), b = FieldExpr::param("beta"), l = FieldExpr::param("lambda");
    FieldExpr a = FieldExpr::param("a"), et = FieldExpr::param("eta");
    FieldExpr v0 = F(0, 1), v1 = F(1, 1), u0 = F(0, 2), u1 = F(1, 2), p0 = F(0, 3), p1 = F(1, 3), q0 = F(0, 4);
    FieldExpr vt = F(0, 1, 0, 1), ut = F(0, 2, 0, 1);
    FieldExpr e = FieldExpr(1) / h + v0 - v1, half = FieldExpr(0.5), quarter = FieldExpr(0.25);
    LaxTemplate L;
    L.dim = 3;
    L.left = scalar_identity(3, b);
    L.right = {{e, 1, 0}, {u0 - u1, e, 1}, {-half * p0 - p1 + half * a * vt + quarter * et, -quarter - u0 - 2 * u1, e}};
    FieldExpr diag = l - a * u0 - quarter * a;
    L.temporal = {{l + 2 * a * u0, 0, a},
                  {half * a * p0 - 1.5 * vt + quarter * a * et, diag, 0},
                  {half * a * q0 - 1.5 * ut, -half * a * p0 - 1.5 * vt + quarter * a * et, diag}};
    return L;
}

LaxTemplate sk_lax() {
    FieldExpr h = FieldExpr::param("h"), l = FieldExpr::param("lambda");
    FieldExpr v0 = F(0, 1), v1 = F(1, 1), u0 = F(0, 2), u1 = F(1, 2);
    FieldExpr p = F(0, 3), q = F(0, 4), r = F(0, 5), s = F(0, 6);
    FieldExpr g = 2 + h * v0 - h * v1;  // recurring combination
    FieldExpr dv2 = (v0 - v1).pow(2);
    FieldExpr a = (-2 * h * l + 3 * u0 * g + 3 * u1 * g) / h + dv2 * (6 + h * v0 - h * v1) / h;
    FieldExpr bb = (-5 * h * u0 - h * u1 - 12 * v0 - 3 * h * v0.pow(2) + 12 * v1 + 6 * h * v0 * v1 - 3 * h * v1.pow(2)) / h;
    FieldExpr c = -(2 * h * l + 3 * u0 * g + 3 * u1 * g) / h - dv2 * (6 + h * v0 - h * v1) / h;
    FieldExpr d = -(h * u0 + 5 * h * u1 + 12 * v0 + 3 * h * v0.pow(2) - 12 * v1 - 6 * h * v0 * v1 + 3 * h * v1.pow(2)) / h;
    FieldExpr e = -g / h;
    LaxTemplate L;
    L.dim = 3;
    L.tag = LaxTag::TwoSided;
    L.left = {{e, 1, 0}, {u1 - u0, e, 1}, {a, bb, 2 * g / h}};
    L.right = {{-e, 1, 0}, {u0 - u1, -e, 1}, {c, d, -2 * g / h}};
    FieldExpr q32 = 3 * (3 * l.pow(2) + 12 * p.pow(2) + 2 * s + 36 * q * u0 + 72 * u0.pow(3));
    L.temporal = {{36 * l * u0, 6 * (q - 6 * u0.pow(2)), 9 * (l - 2 * p)},
                  {9 * l * (l + 2 * p), 6 * (r - 3 * (l - 2 * p) * u0), -12 * (q + 3 * u0.pow(2))},
                  {6 * l * (q - 6 * u0.pow(2)), q32, -6 * (r + 3 * (l + 2 * p) * u0)}};
    return L;
}

LaxTemplate ito_lax() {
    FieldExpr h = FieldExpr::param("h"), l = FieldExpr::param("lambda"), w = FieldExpr::param("omega");
    FieldExpr v0 = F(0, 1), v1 = F(1, 1), u0 = F(0, 2), u1 = F(1, 2), p0 = F(0, 3), p1 = F(1, 3);
    FieldExpr wt0 = F(0, 0, 0, 1), wt1 = F(1, 0, 0, 1), vt = F(0, 1, 0, 1), ut = F(0, 2, 0, 1), pt = F(0, 3, 0, 1);
    FieldExpr e = FieldExpr(-2) / h - v0 + v1;
    LaxTemplate L;
    L.dim = 4;
    L.tag = LaxTag::TwoSided;
    L.left = {{l * e, l, 0, 0},
              {l * (u1 - u0), l * e, l, 0},
              {l * (p1 - p0), 2 * l * (u1 - u0), l * e, l},
              {-l * w + l * wt0 - l * wt1, 6 * l * u1, 0, l}};
    L.right = {{e, -1, 0, 0}, {u1 - u0, e, -1, 0}, {p1 - p0, -2 * (u0 - u1), e, -1}, {-w - wt0 + wt1, 6 * u0, 0, 1}};
    L.temporal = {{0, -6 * u0, 0, -1}, {-2 * vt, -w, 0, 0}, {-2 * ut, -2 * vt, -w, 0}, {-2 * pt, -4 * ut, -2 * vt, -w}};
    return L;
}

std::vector<std::vector<DyPoly>> eval_mat(const Mat& m, const FieldEnv& env) {
    std::vector<std::vector<DyPoly>> out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (const auto& x : m[i]) out[i].push_back(x.eval(env));
    return out;
}

}  // namespace

NonlinearSystem nonlinear_equations(EquationId id) {
    switch (id) {
        case EquationId::KdV: return kdv_nl();
        case EquationId::KP: return kp_nl();
        case EquationId::Boussinesq: return bsq_nl();
        case EquationId::SK: return sk_nl();
        case EquationId::Ito: return ito_nl();
    }
    throw std::invalid_argument("unknown equation");
}

LaxTemplate lax_template(EquationId id) {
    switch (id) {
        case EquationId::KdV: return kdv_lax();
        case EquationId::KP: return kp_lax();
        case EquationId::Boussinesq: return bsq_lax();
        case EquationId::SK: return sk_lax();
        case EquationId::Ito: return ito_lax();
    }
    throw std::invalid_argument("unknown equation");
}

LaxMatrices lax_matrices(EquationId id, const std::map<std::string, cplx>& params, const FieldJet& site_n,
                         const FieldJet& site_n1) {
    LaxTemplate t = lax_template(id);
    FieldEnv env;
    env.site[0] = &site_n;
    env.site[1] = &site_n1;
    env.params = params;
    env.params.try_emplace("a", rho<cplx>());
    LaxMatrices m;
    m.tag = t.tag;
    m.left = eval_mat(t.left, env);
    m.right = eval_mat(t.right, env);
    m.temporal = eval_mat(t.temporal, env);
    return m;
}

}  // namespace hirota
