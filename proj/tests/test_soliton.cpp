#include <doctest.h>

#include "hirota/convergence.hpp"
#include "hirota/fixtures.hpp"
#include "hirota/verify.hpp"

using namespace hirota;

namespace {

bool semidiscrete_zero(EquationId id, const Quad& h, const std::vector<SolitonParam<Quad>>& ps) {
    auto tau = build_tau(make_tau_spec(id, h, ps, TauMode::Semidiscrete), TauMode::Semidiscrete);
    for (const auto& e : get_system(id, h).semidiscrete)
        if (!hirota_apply(e.op, tau, tau).is_zero()) return false;
    return true;
}

}  // namespace

TEST_CASE("dispersion examples") {
    CHECK(dispersion(EquationId::KdV, Quad(2)) == Quad(2));
    CHECK(dispersion(EquationId::SK, Quad(1)) == Quad(-1));
    CHECK(dispersion(EquationId::KP, Quad(2), std::optional<Quad>(Quad(2))) == Quad(7, 2));
    CHECK(dispersion(EquationId::Ito, Quad(2)) == Quad(-8));
    CHECK(dispersion(EquationId::Boussinesq, Quad(3, 4)) == Quad(15, 16));
    CHECK_THROWS_AS(dispersion(EquationId::KdV, Quad(0)), SolitonError);
    CHECK_THROWS_AS(dispersion(EquationId::KdV, Quad(1), std::optional<Quad>(Quad(1))), SolitonError);
}

TEST_CASE("dispersion annihilates the continuum operator") {
    for (EquationId id : all_equations())
        for (const auto& p : exact_continuum_params(id)) {
            auto tau = build_tau(make_tau_spec(id, Quad(1), {p}, TauMode::Continuum), TauMode::Continuum);
            CHECK(hirota_apply(get_system(id, Quad(1)).continuum[0].op, tau, tau).is_zero());
        }
}

TEST_CASE("KdV step factor") {
    CHECK(step_factor(EquationId::KdV, Quad(1), Quad(0), dispersion(EquationId::KdV, Quad(1)), Quad(1)) == Quad(3));
    CHECK(step_factor(EquationId::KdV, Quad(0), Quad(0), Quad(0), Quad(1, 3)) == Quad(1));
    CHECK_THROWS_AS(step_factor(EquationId::KdV, Quad(2), Quad(0), Quad(2), Quad(1)), SolitonError);
}

TEST_CASE("KP step factor agrees with both cross operators") {
    // The cross operator Dy - Dx^2 + (2/h)Dx fixes W = (l + k^2 + 2k/h)/(l - k^2 + 2k/h).
    Quad k(1), l(0), h(1);
    Quad w = dispersion(EquationId::KP, k, std::optional<Quad>(l));
    CHECK(step_factor(EquationId::KP, k, l, w, h) == Quad(3));
}

TEST_CASE("KdV continuum interaction coefficient") {
    SolitonParam<Quad> a, b;
    a.k = Quad(1);
    a.omega = dispersion(EquationId::KdV, a.k);
    b.k = Quad(2);
    b.omega = dispersion(EquationId::KdV, b.k);
    CHECK(interaction_coeff(EquationId::KdV, a, b, Quad(1), TauMode::Continuum) == Quad(1, 9));
    CHECK_THROWS_AS(interaction_coeff(EquationId::KdV, a, a, Quad(1), TauMode::Continuum), SolitonError);
}

TEST_CASE("KdV semi-discrete interaction at mu = 2, 3") {
    Quad h(1);
    auto a = soliton_from_mu(EquationId::KdV, Quad(2), h), b = soliton_from_mu(EquationId::KdV, Quad(3), h);
    Quad A = interaction_coeff(EquationId::KdV, a, b, h, TauMode::Semidiscrete);
    CHECK(A.is_rational());
    CHECK(semidiscrete_zero(EquationId::KdV, h, {a, b}));
}

TEST_CASE("k_from_mu inverts the KdV step factor") {
    CHECK(k_from_mu(EquationId::KdV, Quad(2), Quad(1)) == Quad(6, 5));
    CHECK(k_from_mu(EquationId::KdV, *Quad(3).sqrt(), Quad(1)) == Quad(1));
    CHECK(soliton_from_mu(EquationId::KdV, Quad(1), Quad(1)).k.is_zero());
    CHECK_THROWS_AS(k_from_mu(EquationId::KP, Quad(2), Quad(1)), SolitonError);
}

TEST_CASE("build_tau shapes") {
    TauSpec<Quad> vac{EquationId::KdV, Quad(1), {}, {}, std::nullopt};
    auto t0 = build_tau(vac, TauMode::Continuum);
    REQUIRE(t0.size() == 1);
    CHECK(t0.terms()[0].coeff == Quad(1));
    SolitonParam<Quad> p;
    p.k = Quad(2);
    p.omega = dispersion(EquationId::KdV, p.k);
    auto t1 = build_tau(make_tau_spec(EquationId::KdV, Quad(1), {p}, TauMode::Continuum), TauMode::Continuum);
    REQUIRE(t1.size() == 2);
    CHECK(t1.terms()[1].phase.ax == Quad(2));
    CHECK(t1.terms()[1].phase.at == Quad(2));
    auto cps = exact_continuum_params(EquationId::KdV);
    auto t3 = build_tau(make_tau_spec(EquationId::KdV, Quad(1), cps, TauMode::Continuum), TauMode::Continuum);
    CHECK(t3.size() == 8);
    std::vector<SolitonParam<Quad>> four(4, p);
    CHECK_THROWS_AS(make_tau_spec(EquationId::KdV, Quad(1), four, TauMode::Continuum), SolitonError);
}

TEST_CASE("vacuum is a fixed point of every system in both modes") {
    for (EquationId id : all_equations()) {
        auto sys = get_system(id, Quad(1, 2));
        auto one = ExpSum<Quad>::one();
        for (const auto& e : sys.continuum) CHECK(hirota_apply(e.op, one, one).is_zero());
        for (const auto& e : sys.semidiscrete) CHECK(hirota_apply(e.op, one, one).is_zero());
    }
}

TEST_CASE("property: random rational mu gives exact semi-discrete 1- and 2-solitons") {
    Rng rng(77);
    int checked = 0;
    for (EquationId id : {EquationId::KdV, EquationId::KP, EquationId::Ito}) {
        for (int i = 0; i < 6; ++i) {
            Quad h(1, rng.integer(1, 4));
            Quad m1(rng.integer(2, 9), rng.integer(1, 3)), m2(rng.integer(2, 9), rng.integer(1, 3));
            if (m1 == m2 || m1 == Quad(1) || m2 == Quad(1)) continue;
            try {
                auto a = soliton_from_mu(id, m1, h, 0, std::optional<Quad>(Quad(1)));
                auto b = soliton_from_mu(id, m2, h, 0, std::optional<Quad>(Quad(1, 2)));
                if (id != EquationId::KP) {
                    a = soliton_from_mu(id, m1, h);
                    b = soliton_from_mu(id, m2, h);
                }
                CHECK(semidiscrete_zero(id, h, {a}));
                CHECK(semidiscrete_zero(id, h, {a, b}));
                ++checked;
            } catch (const SolitonError&) {
                // pole of the inverse map or coincident solitons
            }
        }
    }
    CHECK(checked >= 10);
}

TEST_CASE("standard fixtures give exact semi-discrete 2-solitons on all systems") {
    for (EquationId id : all_equations()) {
        auto fx = exact_semidiscrete_fixture(id);
        for (const auto& p : fx.params) CHECK(p.mu * p.mu == p.W);
        CHECK(semidiscrete_zero(id, fx.h, fx.params));
    }
}

TEST_CASE("Boussinesq exact scalars live in Q(sqrt -3)") {
    auto fx = exact_semidiscrete_fixture(EquationId::Boussinesq);
    auto tau = build_tau(make_tau_spec(EquationId::Boussinesq, fx.h, fx.params, TauMode::Semidiscrete),
                         TauMode::Semidiscrete);
    for (const auto& t : tau.terms()) {
        CHECK((t.coeff.field() == 0 || t.coeff.field() == -3));
        CHECK((t.mu.field() == 0 || t.mu.field() == -3));
    }
}

TEST_CASE("(1/h) log W approaches k with order 2 for KdV") {
    std::vector<std::pair<double, double>> levels;
    for (double h : {0.4, 0.2, 0.1}) {
        cplx W = step_factor<cplx>(EquationId::KdV, 1.0, 0.0, dispersion<cplx>(EquationId::KdV, 1.0), h);
        levels.emplace_back(h, std::abs(std::log(W.real()) / h - 1.0));
    }
    CHECK(std::abs(order_fit(levels).order - 2.0) <= 0.3);
}
