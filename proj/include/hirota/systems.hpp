#pragma once
// The five soliton systems: bilinear operators (continuum and semi-discrete),
// Backlund-transformation templates, nonlinear lattice equations and Lax pairs.

#include "hirota/expalg.hpp"
#include "hirota/fieldexpr.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace hirota {

enum class EquationId { KdV, KP, Boussinesq, SK, Ito };

const std::vector<EquationId>& all_equations();
std::string equation_name(EquationId id);
EquationId parse_equation(const std::string& name);  // throws std::invalid_argument

// Cross equations act on the pair (f_n, f_{n-h}), stored as a +1 half-step
// shift on the first argument of f_n . f_n.
enum class Arity { Self, Cross };

template <class S>
struct BilinearEquation {
    std::string label;
    HirotaOperator<S> op;
    Arity arity = Arity::Self;
};

template <class S>
struct EquationSystem {
    EquationId id;
    S h;
    std::vector<BilinearEquation<S>> continuum;
    std::vector<BilinearEquation<S>> semidiscrete;
    std::map<std::string, S> fixed_bt_constants;  // convergence-condition choices
};

// sqrt(-3) in the backend: exact radical or complex double.
template <class S>
S rho();
template <>
inline Quad rho<Quad>() { return Quad::radical(-3); }
template <>
inline cplx rho<cplx>() { return {0.0, std::sqrt(3.0)}; }

template <class S>
EquationSystem<S> get_system(EquationId id, const S& h);

template <class S>
struct BTParams {
    std::map<std::string, S> slots;
    const S& operator[](const std::string& k) const { return slots.at(k); }
};

const std::vector<std::string>& bt_slot_names(EquationId id);

// BT operators with coefficients in C (a scalar, or a polynomial in unknown
// slots); `lift` embeds backend scalars into C.
template <class C, class S>
std::vector<BilinearEquation<C>> bt_template(EquationId id, const std::map<std::string, C>& slot, const S& h,
                                             const std::function<C(const S&)>& lift);

template <class S>
std::vector<BilinearEquation<S>> bt_system(EquationId id, const BTParams<S>& params, const S& h) {
    return bt_template<S, S>(id, params.slots, h, [](const S& v) { return v; });
}

// Nonlinear lattice equations as expressions that vanish on solutions.
// Fields are derivatives of ln f at sites n and n+h; parameters "h" and "a".
struct NonlinearSystem {
    std::vector<NamedExpr> evolution;  // lattice equations proper
    std::vector<NamedExpr> auxiliary;  // identities checked on tau data only
};
NonlinearSystem nonlinear_equations(EquationId id);

enum class LaxTag { Standard, TwoSided };

// left * Phi_{n+1} = right * Phi_n, Phi_{n,t} = temporal * Phi_n, where Phi is
// (phi, phi_x, phi_xx, ...) with phi = f/g and fields taken from g.
struct LaxTemplate {
    int dim = 2;
    std::vector<std::vector<FieldExpr>> left, right, temporal;
    LaxTag tag = LaxTag::Standard;
};
LaxTemplate lax_template(EquationId id);

struct LaxMatrices {
    std::vector<std::vector<DyPoly>> left, right, temporal;
    LaxTag tag = LaxTag::Standard;
};
LaxMatrices lax_matrices(EquationId id, const std::map<std::string, cplx>& params, const FieldJet& site_n,
                         const FieldJet& site_n1);

// ---------------------------------------------------------------- templates

template <class S>
EquationSystem<S> get_system(EquationId id, const S& h) {
    using O = ScalarOps<S>;
    auto I = [](long v) { return O::from_int(v); };
    auto Fr = [](long n, long d) { return O::from_frac(n, d); };
    if (O::is_zero(h)) throw std::invalid_argument("h must be nonzero");
    S ih = O::inv(h);
    EquationSystem<S> sys{id, h, {}, {}, {}};
    auto self = [&](std::string l, HirotaOperator<S> op) {
        sys.continuum.push_back({l, op, Arity::Self});
        sys.semidiscrete.push_back({std::move(l), std::move(op), Arity::Self});
    };
    auto cross = [&](std::string l, HirotaOperator<S> op) {
        for (auto& m : op) m.shift = 1;
        sys.semidiscrete.push_back({std::move(l), std::move(op), Arity::Cross});
    };
    switch (id) {
        case EquationId::KdV:
            self("DxDt-Dx4/4", {mono(I(1), 1, 0, 1), mono(Fr(-1, 4), 4)});
            cross("Dx2-(2/h)Dx", {mono(I(1), 2), mono(I(-2) * ih, 1)});
            sys.fixed_bt_constants["lambda"] = I(2) * ih;
            break;
        case EquationId::KP:
            self("Dx4-4DxDt+3Dy2", {mono(I(1), 4), mono(I(-4), 1, 0, 1), mono(I(3), 0, 2)});
            cross("Dy-Dx2+(2/h)Dx", {mono(I(1), 0, 1), mono(I(-1), 2), mono(I(2) * ih, 1)});
            cross("3DyDx-4Dt+Dx3-(6/h)Dy",
                  {mono(I(3), 1, 1), mono(I(-4), 0, 0, 1), mono(I(1), 3), mono(I(-6) * ih, 0, 1)});
            sys.fixed_bt_constants["mu"] = I(-2) * ih;
            break;
        case EquationId::Boussinesq: {
            S a = rho<S>();
            self("Dt2-Dx2-Dx4", {mono(I(1), 0, 0, 2), mono(I(-1), 2), mono(I(-1), 4)});
            cross("Dt-aDx2+(2a/h)Dx", {mono(I(1), 0, 0, 1), mono(-a, 2), mono(I(2) * a * ih, 1)});
            sys.fixed_bt_constants["xi"] = I(2) * a * ih;
            sys.fixed_bt_constants["eta"] = I(0);
            break;
        }
        case EquationId::SK:
            self("DxDt+Dx6", {mono(I(1), 1, 0, 1), mono(I(1), 6)});
            cross("Dx3-(6/h)Dx2+(12/h^2)Dx", {mono(I(1), 3), mono(I(-6) * ih, 2), mono(I(12) * ih * ih, 1)});
            cross("2Dt-3Dx5+(30/h)Dx4-(60/h^2)Dx3",
                  {mono(I(2), 0, 0, 1), mono(I(-3), 5), mono(I(30) * ih, 4), mono(I(-60) * ih * ih, 3)});
            sys.fixed_bt_constants["kappa"] = I(-2) * ih;
            sys.fixed_bt_constants["lambda"] = I(0);
            sys.fixed_bt_constants["mu"] = I(0);
            break;
        case EquationId::Ito:
            self("Dt2+Dx3Dt", {mono(I(1), 0, 0, 2), mono(I(1), 3, 0, 1)});
            cross("DxDt-(2/h)Dt", {mono(I(1), 1, 0, 1), mono(I(-2) * ih, 0, 0, 1)});
            cross("hDt+hDx3+(12/h)Dx-6Dx2", {mono(h, 0, 0, 1), mono(h, 3), mono(I(12) * ih, 1), mono(I(-6), 2)});
            sys.fixed_bt_constants["gamma"] = I(2) * ih;
            sys.fixed_bt_constants["mu"] = I(0);
            sys.fixed_bt_constants["lambda"] = I(0);
            break;
    }
    return sys;
}

template <class C, class S>
std::vector<BilinearEquation<C>> bt_template(EquationId id, const std::map<std::string, C>& slot, const S& h,
                                             const std::function<C(const S&)>& lift) {
    using O = ScalarOps<S>;
    auto K = [&](long n, long d = 1) { return lift(O::from_frac(n, d)); };
    auto get = [&](const char* k) -> C {
        auto it = slot.find(k);
        if (it == slot.end()) throw std::invalid_argument(std::string("missing BT slot ") + k);
        return it->second;
    };
    C ih = lift(O::inv(h));
    std::vector<BilinearEquation<C>> out;
    auto add = [&](std::string label, HirotaOperator<C> op) { out.push_back({std::move(label), std::move(op), Arity::Self}); };
    auto first_shift = [&](const C& beta) {
        return HirotaOperator<C>{mono(K(1), 1, 0, 0, -1), mono(ih, 0, 0, 0, -1), mono(-beta, 0, 0, 0, 1)};
    };
    switch (id) {
        case EquationId::KdV: {
            C b = get("beta"), g = get("gamma");
            add("Dx e- + (1/h)e- - beta e+", first_shift(b));
            add("Dx2 - gamma", {mono(K(1), 2), mono(-g, 0)});
            add("Dt - Dx3/4 - (3gamma/4)Dx", {mono(K(1), 0, 0, 1), mono(K(-1, 4), 3), mono(K(-3, 4) * g, 1)});
            break;
        }
        case EquationId::KP: {
            C b = get("beta"), g = get("gamma");
            add("Dx e- + (1/h)e- - beta e+", first_shift(b));
            add("Dy - Dx2 - gamma", {mono(K(1), 0, 1), mono(K(-1), 2), mono(-g, 0)});
            add("3DyDx - 4Dt + Dx3 - 3gamma Dx",
                {mono(K(3), 1, 1), mono(K(-4), 0, 0, 1), mono(K(1), 3), mono(K(-3) * g, 1)});
            break;
        }
        case EquationId::Boussinesq: {
            C a = lift(rho<S>());
            C b = get("beta"), l = get("lambda"), e = get("eta");
            add("Dt - aDx2 - lambda", {mono(K(1), 0, 0, 1), mono(-a, 2), mono(-l, 0)});
            add("aDxDt - Dx3 - (lambda a + 1)Dx + eta",
                {mono(a, 1, 0, 1), mono(K(-1), 3), mono(-(l * a + K(1)), 1), mono(e, 0)});
            add("Dx e- + (1/h)e- - beta e+", first_shift(b));
            break;
        }
        case EquationId::SK: {
            C l = get("lambda");
            C two_h = K(2) * ih, six_h = K(6) * ih;
            add("Dx3 - lambda", {mono(K(1), 3), mono(-l, 0)});
            add("2Dt - 3Dx5 - 15lambda Dx2", {mono(K(2), 0, 0, 1), mono(K(-3), 5), mono(K(-15) * l, 2)});
            add("Dx e+ - Dx e- - (2/h)(e+ + e-)",
                {mono(K(1), 1, 0, 0, 1), mono(K(-1), 1, 0, 0, -1), mono(-two_h, 0, 0, 0, 1), mono(-two_h, 0, 0, 0, -1)});
            add("Dx3 e+ - Dx3 e- - (6/h)Dx2(e+ + e-) + 2lambda(e+ - e-)",
                {mono(K(1), 3, 0, 0, 1), mono(K(-1), 3, 0, 0, -1), mono(-six_h, 2, 0, 0, 1), mono(-six_h, 2, 0, 0, -1),
                 mono(K(2) * l, 0, 0, 0, 1), mono(K(-2) * l, 0, 0, 0, -1)});
            break;
        }
        case EquationId::Ito: {
            C l = get("lambda"), w = get("omega"), m = get("mu");
            C two_h = K(2) * ih;
            add("Dx e- + lambda Dx e+ - (2/h)lambda e+ + (2/h)e-",
                {mono(K(1), 1, 0, 0, -1), mono(l, 1, 0, 0, 1), mono(-(two_h * l), 0, 0, 0, 1), mono(two_h, 0, 0, 0, -1)});
            add("Dt e- - lambda Dt e+ - lambda omega e+ + omega e-",
                {mono(K(1), 0, 0, 1, -1), mono(-l, 0, 0, 1, 1), mono(-(l * w), 0, 0, 0, 1), mono(w, 0, 0, 0, -1)});
            add("Dt + Dx3", {mono(K(1), 0, 0, 1), mono(K(1), 3)});
            add("DxDt - mu Dx", {mono(K(1), 1, 0, 1), mono(-m, 1)});
            break;
        }
    }
    return out;
}

}  // namespace hirota
