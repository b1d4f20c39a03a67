#include <doctest.h>

#include "hirota/scalar.hpp"
#include "hirota/verify.hpp"

using namespace hirota;

TEST_CASE("rational arithmetic is exact") {
    Quad a(1, 3), b(1, 6);
    CHECK(a + b == Quad(1, 2));
    CHECK(a * b == Quad(1, 18));
    CHECK(a / b == Quad(2));
    CHECK((a - a).is_zero());
}

TEST_CASE("radical arithmetic in Q(sqrt -3)") {
    Quad r = Quad::radical(-3);
    CHECK(r * r == Quad(-3));
    Quad z = (Quad(-1) + r) / Quad(2);  // primitive cube root of unity
    CHECK(z * z * z == Quad(1));
    CHECK(!(z * z).is_rational());
    CHECK(z.inv() * z == Quad(1));
}

TEST_CASE("mixing radicals of different fields is rejected") {
    CHECK_THROWS_AS(Quad::radical(-3) + Quad::radical(13), FieldMismatch);
}

TEST_CASE("sqrt adjoins the squarefree part of a rational") {
    auto s = Quad(468).sqrt();
    REQUIRE(s);
    CHECK(*s * *s == Quad(468));
    CHECK(s->field() == 13);
    auto t = Quad(-256, 3).sqrt();
    REQUIRE(t);
    CHECK(*t * *t == Quad(-256, 3));
    CHECK(t->field() == -3);
    auto u = Quad(9, 4).sqrt();
    REQUIRE(u);
    CHECK(*u == Quad(3, 2));
}

TEST_CASE("sqrt inside a fixed field") {
    Quad r = Quad::radical(-3);
    Quad x = (Quad(1) + r) * (Quad(1) + r);
    auto s = x.sqrt();
    REQUIRE(s);
    CHECK(*s * *s == x);
}

TEST_CASE("canonical order is total and antisymmetric") {
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        Quad a(rng.integer(-5, 5), rng.integer(1, 4)), b(rng.integer(-5, 5), rng.integer(1, 4));
        CHECK(Quad::compare(a, b) == -Quad::compare(b, a));
        CHECK((Quad::compare(a, b) == 0) == (a == b));
    }
}

TEST_CASE("seeded generator is reproducible") {
    Rng a(123), b(123), c(124);
    double x = a.uniform();
    CHECK(x == b.uniform());
    CHECK(x != c.uniform());
    for (int i = 0; i < 1000; ++i) {
        double u = a.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("format_double round-trips") {
    for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23}) CHECK(std::stod(format_double(v)) == v);
}
