#include <doctest.h>

#include "hirota/fixtures.hpp"
#include "hirota/verify.hpp"

using namespace hirota;

namespace {

using E = ExpSum<Quad>;

E kdv_one_soliton(const Quad& h) {
    auto p = soliton_from_mu(EquationId::KdV, Quad(3, 2), h);
    return build_tau(make_tau_spec(EquationId::KdV, h, {p}, TauMode::Semidiscrete), TauMode::Semidiscrete);
}

}  // namespace

TEST_CASE("bilinear residual on vacuum and on a soliton") {
    CHECK(bilinear_residual(get_system(EquationId::KdV, Quad(1)).continuum, E::one()).pass);
    Quad h(1, 2);
    CHECK(bilinear_residual(get_system(EquationId::KdV, h).semidiscrete, kdv_one_soliton(h)).pass);
}

TEST_CASE("bilinear residual flags a wrong dispersion") {
    E bad = E::from_terms({make_term(Quad(1), LinForm<Quad>{}, Quad(1)),
                           make_term(Quad(1), LinForm<Quad>{Quad(6, 5), Quad(0), Quad(0)}, Quad(2))});
    Report r = bilinear_residual(get_system(EquationId::KdV, Quad(1)).semidiscrete, bad);
    CHECK_FALSE(r.pass);
}

TEST_CASE("nonlinear residual: vacuum is exactly zero") {
    auto tau = ExpSum<cplx>::one();
    SampleGrid g;
    g.points = {{0.1, 0, 0.2, 0}, {-0.3, 0, 0.5, 2}};
    for (EquationId id : all_equations()) {
        Report r = nonlinear_residual(id, tau, 0.5, g);
        CHECK(r.pass);
        for (const auto& e : r.entries) CHECK(e.max_abs == 0.0);
    }
}

TEST_CASE("nonlinear residual: KdV 1-soliton k = 0.8, h = 0.5") {
    auto ff = float_semidiscrete_fixture(EquationId::KdV);
    auto tau = build_tau(make_tau_spec<cplx>(EquationId::KdV, cplx(0.5), {ff.params[0]}, TauMode::Semidiscrete),
                         TauMode::Semidiscrete);
    SampleGrid g;
    for (int m = -10; m <= 10; ++m)
        for (double t : {-1.0, -0.5, 0.0, 0.5, 1.0}) g.points.push_back({0.0, 0.0, t, m});
    Report r = nonlinear_residual(EquationId::KdV, tau, 0.5, g);
    for (const auto& e : r.entries) CHECK(e.max_abs <= 1e-9);
}

TEST_CASE("nonlinear residual: SK 1-soliton") {
    auto ff = float_semidiscrete_fixture(EquationId::SK);
    auto tau = build_tau(make_tau_spec<cplx>(EquationId::SK, cplx(0.5), {ff.params[0]}, TauMode::Semidiscrete),
                         TauMode::Semidiscrete);
    Report r = nonlinear_residual(EquationId::SK, tau, 0.5, core_grid(tau));
    for (const auto& e : r.entries) CHECK(e.max_abs <= 1e-8);
}

TEST_CASE("nonlinear residual reports singular tau") {
    auto tau = ExpSum<cplx>::from_terms({{cplx(1), {}, cplx(1)}, {cplx(-1), {cplx(1), 0, 0}, cplx(1)}});
    SampleGrid g;
    g.points = {{0.0, 0, 0, 0}};
    CHECK_THROWS_AS(nonlinear_residual(EquationId::KdV, tau, 0.5, g), SingularPoint);
}

TEST_CASE("core grid is seeded and deterministic") {
    auto tau = to_float(kdv_one_soliton(Quad(1, 2)));
    auto a = core_grid(tau, 50, 1), b = core_grid(tau, 50, 1), c = core_grid(tau, 50, 2);
    REQUIRE(a.points.size() == 50);
    CHECK(a.points[7].x == b.points[7].x);
    CHECK(a.points[7].x != c.points[7].x);
}

TEST_CASE("BT solver: vacuum pair gives beta = 1/h") {
    auto s = solve_bt_params(EquationId::KdV, E::one(), E::one(), Quad(1, 2));
    REQUIRE(s.found);
    CHECK(s.params["beta"] == Quad(2));
    CHECK(s.params["gamma"] == Quad(0));
    CHECK(s.report.pass);
}

TEST_CASE("BT solver: Ito vacuum pair returns a canonical representative") {
    auto s = solve_bt_params(EquationId::Ito, E::one(), E::one(), Quad(1, 2));
    REQUIRE(s.found);
    CHECK(s.report.pass);
    Quad lam = s.params["lambda"], om = s.params["omega"];
    CHECK((om - lam * om).is_zero());
}

TEST_CASE("BT solver: KdV vacuum to 1-soliton") {
    Quad h(1, 2);
    auto s = solve_bt_params(EquationId::KdV, E::one(), kdv_one_soliton(h), h);
    REQUIRE(s.found);
    CHECK(s.report.pass);
    for (const auto& e : bt_system(EquationId::KdV, s.params, h)) CHECK(hirota_apply(e.op, s.f, s.g).is_zero());
}

TEST_CASE("property: a BT partner of a solution is a solution") {
    for (EquationId id : {EquationId::KdV, EquationId::KP, EquationId::Boussinesq, EquationId::Ito}) {
        auto fx = exact_semidiscrete_fixture(id);
        auto t1 = build_tau(make_tau_spec(id, fx.h, {fx.params[1]}, TauMode::Semidiscrete), TauMode::Semidiscrete);
        auto t2 = build_tau(make_tau_spec(id, fx.h, fx.params, TauMode::Semidiscrete), TauMode::Semidiscrete);
        auto s = solve_bt_params(id, t1, t2, fx.h);
        REQUIRE(s.found);
        CHECK(s.report.pass);
        CHECK(bilinear_residual(get_system(id, fx.h).semidiscrete, s.g).pass);
    }
}

TEST_CASE("BT solver reports an impossible pair") {
    Quad h(1, 2);
    auto p = soliton_from_mu(EquationId::KdV, Quad(3, 2), h);
    p.omega = Quad(5);  // not a solution
    auto g = build_tau(make_tau_spec(EquationId::KdV, h, {p}, TauMode::Semidiscrete), TauMode::Semidiscrete);
    auto s = solve_bt_params(EquationId::KdV, E::one(), g, h);
    CHECK_FALSE(s.report.pass);
}

TEST_CASE("Lax residual: KdV vacuum to 1-soliton at 50 points") {
    Quad h(1, 2);
    auto s = solve_bt_params(EquationId::KdV, E::one(), kdv_one_soliton(h), h);
    REQUIRE(s.found);
    auto f = to_float(s.f), g = to_float(s.g);
    Report r = lax_residual(EquationId::KdV, f, g, params_to_complex(s.params, h), 0.5, core_grid(g, 50));
    CHECK(r.pass);
    for (const auto& e : r.entries) CHECK(e.max_abs <= 1e-8);
}

TEST_CASE("Lax residual: SK two-sided form on a float BT pair") {
    auto ff = float_semidiscrete_fixture(EquationId::SK);
    auto f = build_tau(make_tau_spec<cplx>(EquationId::SK, cplx(0.5), {ff.params[1]}, TauMode::Semidiscrete),
                       TauMode::Semidiscrete);
    auto g = build_tau(make_tau_spec<cplx>(EquationId::SK, cplx(0.5), ff.params, TauMode::Semidiscrete),
                       TauMode::Semidiscrete);
    auto s = solve_bt_params(EquationId::SK, f, g, cplx(0.5));
    REQUIRE(s.found);
    Report r = lax_residual(EquationId::SK, s.f, s.g, params_to_complex(s.params, cplx(0.5)), 0.5, core_grid(s.g, 50));
    CHECK(r.pass);
}

TEST_CASE("Lax residual detects wrong parameters") {
    Quad h(1, 2);
    auto s = solve_bt_params(EquationId::KdV, E::one(), kdv_one_soliton(h), h);
    REQUIRE(s.found);
    auto pm = params_to_complex(s.params, h);
    pm["beta"] += 0.5;
    Report r = lax_residual(EquationId::KdV, to_float(s.f), to_float(s.g), pm, 0.5, core_grid(to_float(s.g), 20));
    CHECK_FALSE(r.pass);
}

TEST_CASE("identity A.1 with f = g and with explicit terms") {
    Rng rng(3);
    E f = random_sum(rng);
    CHECK(identity_check(1, f, f, Quad(1, 3)).pass);
    E a = E::from_terms({make_term(Quad(1), LinForm<Quad>{Quad(1), Quad(0), Quad(0)}, Quad(2))});
    E b = E::from_terms({make_term(Quad(1), LinForm<Quad>{Quad(3), Quad(0), Quad(0)}, Quad(5))});
    CHECK(identity_check(1, a, b, Quad(2, 7)).pass);
}

TEST_CASE("identity A.9 on random two-term sums") {
    Rng rng(8);
    for (int i = 0; i < 10; ++i) CHECK(identity_check(9, random_sum(rng, 2), random_sum(rng, 2), Quad(1, 2)).pass);
}

TEST_CASE("identity suite with a small seeded sample") {
    Report r = identity_suite(42, 10);
    CHECK(r.pass);
    CHECK(r.entries.size() == 12);
}

TEST_CASE("unknown identity number is rejected") {
    CHECK_THROWS(identity_sides(13, E::one(), E::one()));
}
