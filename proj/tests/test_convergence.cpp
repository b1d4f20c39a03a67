#include <doctest.h>

#include "hirota/convergence.hpp"
#include "hirota/verify.hpp"

#include <cmath>
#include <sstream>

using namespace hirota;

namespace {

std::vector<std::pair<double, double>> powers(std::vector<double> ps, double order, double c = 1.0) {
    std::vector<std::pair<double, double>> r;
    for (double p : ps) r.emplace_back(p, c * std::pow(p, order));
    return r;
}

const std::vector<double> kH{0.4, 0.2, 0.1, 0.05};

}  // namespace

TEST_CASE("error metric examples") {
    std::vector<double> a{1, 2, 3, 4}, b{0, 1, 2, 3};
    CHECK(error_metric(a, a) == 0.0);
    CHECK(error_metric(a, b, Norm::Max) == 1.0);
    CHECK(error_metric(a, b, Norm::L2, 0.25) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(error_metric(a, {1.0}), std::invalid_argument);
}

TEST_CASE("order fit on synthetic data") {
    auto f2 = order_fit(powers({0.4, 0.2, 0.1}, 2));
    CHECK(f2.order == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(f2.residual <= 1e-12);
    CHECK(order_fit(powers({4e-3, 2e-3, 1e-3}, 4)).order == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(order_fit({{0.2, 5e-3}, {0.1, 1.25e-3}, {0.05, 3.125e-4}}).order == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("order fit rejects bad input") {
    CHECK_THROWS_AS(order_fit({{0.2, 1.0}, {0.1, 0.5}}), std::invalid_argument);
    CHECK_THROWS_AS(order_fit({{0.2, 1.0}, {0.1, 0.0}, {0.05, 0.1}}), std::invalid_argument);
    CHECK_THROWS_AS(order_fit({{0.2, 1.0}, {0.1, -1.0}, {0.05, 0.1}}), std::invalid_argument);
}

TEST_CASE("property: order fit is scale invariant") {
    Rng rng(17);
    for (int i = 0; i < 50; ++i) {
        std::vector<std::pair<double, double>> lv;
        double p = 0.5;
        for (int j = 0; j < 5; ++j, p /= 2) lv.emplace_back(p, std::pow(p, 2.5) * (1 + 0.3 * rng.uniform()));
        double c = std::pow(10.0, rng.uniform(-6, 6));
        auto scaled = lv;
        for (auto& [q, e] : scaled) e *= c;
        auto a = order_fit(lv), b = order_fit(scaled);
        CHECK(a.order == doctest::Approx(b.order).epsilon(1e-9));
        CHECK(a.residual == doctest::Approx(b.residual).epsilon(1e-6));
    }
}

TEST_CASE("KdV semi-discrete soliton converges to the continuum with order 2") {
    auto s = h_refinement_study(EquationId::KdV, 1.0, kH, HProtocol::SemidiscreteExact);
    REQUIRE(s.fitted);
    CHECK(std::abs(s.order - 2.0) <= 0.3);
    CHECK(s.residual <= 0.1);
    CHECK(s.monotone);
}

TEST_CASE("SK h-study records a positive order") {
    auto s = h_refinement_study(EquationId::SK, 0.6, kH, HProtocol::SemidiscreteExact);
    REQUIRE(s.fitted);
    CHECK(s.order > 0);
}

TEST_CASE("vacuum and continuum self-comparison sit below the floor") {
    HStudyOptions o;
    o.vacuum = true;
    auto v = h_refinement_study(EquationId::KdV, 1.0, kH, HProtocol::SemidiscreteExact, o);
    CHECK(v.below_floor);
    CHECK_FALSE(v.fitted);
    for (EquationId id : all_equations()) {
        HStudyOptions c;
        c.continuum_self = true;
        CHECK(h_refinement_study(id, 0.8, kH, HProtocol::SemidiscreteExact, c).below_floor);
    }
}

TEST_CASE("lattice-run protocol is limited to evolving systems") {
    CHECK_THROWS_AS(h_refinement_study(EquationId::KP, 1.0, kH, HProtocol::LatticeRun), std::invalid_argument);
}

TEST_CASE("non-monotone sequences are flagged") {
    RefinementStudy s;
    s.parameter = "h";
    s.levels = {{0.4, 1e-2}, {0.2, 2e-2}, {0.1, 1e-3}};
    finish_study(s);
    CHECK_FALSE(s.monotone);
    CHECK(s.fitted);
    CHECK(s.diagnosis.find("non-monotone") != std::string::npos);
}

TEST_CASE("levels must decrease strictly") {
    RefinementStudy s;
    s.levels = {{0.1, 1e-2}, {0.2, 2e-3}, {0.05, 1e-3}};
    CHECK_THROWS_AS(finish_study(s), std::invalid_argument);
}

TEST_CASE("dt study on vacuum is below the floor") {
    DtStudyOptions o;
    o.vacuum = true;
    o.M = 16;
    o.t_end = 0.01;
    auto s = dt_refinement_study(EquationId::KdV, 0.8, 0.5, {4e-3, 2e-3, 1e-3}, o);
    CHECK(s.below_floor);
}

TEST_CASE("dt study at the reference resolution aborts on instability") {
    auto s = dt_refinement_study(EquationId::KdV, 0.8, 0.5, {4e-3, 2e-3, 1e-3});
    CHECK(s.aborted);
    CHECK_FALSE(s.diagnosis.empty());
}

TEST_CASE("study CSV") {
    RefinementStudy s;
    s.levels = {{0.5, 0.25}, {0.25, 0.0625}};
    std::ostringstream o;
    s.write_csv(o);
    CHECK(o.str() == "param,error\n0.5,0.25\n0.25,0.0625\n");
}
