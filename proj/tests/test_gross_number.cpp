#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "grosstm/errors.hpp"
#include "grosstm/gross_number.hpp"
#include "grosstm/gross_parse.hpp"

using namespace grosstm;

namespace {

const GrossNumber G = GrossNumber::grossone();

GrossNumber gp(const char* text) {
    return parse_gross(text);
}

}  // namespace

TEST_CASE("addition merges like terms") {
    CHECK(add(G, G) == gp("2*G"));
    CHECK(add(gp("2*G^2 + 1"), GrossNumber(1)) == gp("2*G^2 + 2"));
    CHECK(add(gp("G/2"), gp("G/2")) == G);
}

TEST_CASE("subtraction cancels exactly") {
    CHECK(sub(G, G).is_zero());
    CHECK(sub(gp("G^-1"), gp("G^-1")).is_zero());
    CHECK(sub(add(G, GrossNumber(1)), GrossNumber(1)) == G);
    // sub(a, a) = 0 over assorted shapes
    for (const char* text : {"G^G", "2^G - G", "3 + 2*G^-1", "0"}) {
        CHECK(sub(gp(text), gp(text)).is_zero());
    }
}

TEST_CASE("multiplication distributes and multiplies bases") {
    CHECK(mul(GrossNumber(0), G).is_zero());
    CHECK(mul(G, gp("G^-2")) == gp("G^-1"));
    GrossNumber six = mul(gp("2^G"), gp("3^G"));
    CHECK(six == gp("6^G"));
    // Cross-check the base-multiply rule through the ordering: 5^G < 6^G < 7^G.
    CHECK(gp("5^G") < six);
    CHECK(six < gp("7^G"));
}

TEST_CASE("division is exact") {
    CHECK(div(G, G) == GrossNumber(1));
    CHECK(div(gp("G^-2"), gp("G^-2")) == GrossNumber(1));
    CHECK(div(mul(GrossNumber(2), G), GrossNumber(3)) == gp("2/3*G"));

    CHECK_THROWS_AS(div(G, GrossNumber(0)), DivisionByZero);
    // base would drop below 1
    CHECK_THROWS_AS(div(gp("2^G"), gp("3^G")), UnsupportedResult);
    // negative infinite exponent part
    CHECK_THROWS_AS(div(gp("G^2"), gp("G^G")), UnsupportedResult);
}

TEST_CASE("long division terminates only at zero remainders") {
    CHECK(div(gp("G^2 + 3*G + 2"), gp("G + 1")) == gp("G + 2"));
    CHECK(div(gp("G^2 - 1"), gp("G - 1")) == gp("G + 1"));
    CHECK_THROWS_AS(div(gp("G^2 + 1"), gp("G + 1")), UnsupportedResult);
    CHECK_THROWS_AS(div(GrossNumber(1), gp("1 + G^-1")), UnsupportedResult);
}

TEST_CASE("pow covers the supported shapes") {
    CHECK(pow(G, GrossNumber(0)) == GrossNumber(1));
    CHECK(pow(GrossNumber(0), G).is_zero());
    CHECK(pow(G, G) == gp("G^G"));
    CHECK(pow(GrossNumber(1), G) == GrossNumber(1));
    CHECK(pow(gp("G^-1"), GrossNumber(0)) == GrossNumber(1));

    // finite integer exponents: plain repeated multiplication
    CHECK(pow(gp("G + 1"), GrossNumber(2)) == gp("G^2 + 2*G + 1"));
    CHECK(pow(gp("G^2"), GrossNumber(2)) == gp("G^4"));
    CHECK(pow(GrossNumber(2), GrossNumber(10)) == GrossNumber(1024));

    // rational base with exponent n*G + f
    CHECK(pow(GrossNumber(2), add(G, GrossNumber(1))) == gp("2*2^G"));
    CHECK(pow(GrossNumber(4), GrossNumber(Rational(1, 2))) == GrossNumber(2));
    CHECK(pow(GrossNumber(4), GrossNumber(Rational(-1, 2))) == GrossNumber(Rational(1, 2)));
    CHECK(pow(GrossNumber(Rational(9, 4)), gp("G + 1/2")) == gp("3/2*9/4^G"));
    CHECK(pow(GrossNumber(2), gp("2*G")) == gp("4^G"));

    // G with fractional grades
    CHECK(pow(G, gp("G/2")) == gp("G^(1/2*G)"));
    CHECK(pow(G, GrossNumber(Rational(1, 2))) == gp("G^1/2"));
    CHECK(pow(G, GrossNumber(-2)) == gp("G^-2"));
}

TEST_CASE("pow rejects everything else") {
    CHECK_THROWS_AS(pow(GrossNumber(0), GrossNumber(0)), UnsupportedExponent);
    CHECK_THROWS_AS(pow(GrossNumber(2), GrossNumber(Rational(1, 2))), UnsupportedExponent);
    CHECK_THROWS_AS(pow(GrossNumber(Rational(1, 2)), G), UnsupportedExponent);
    CHECK_THROWS_AS(pow(GrossNumber(2), gp("G/2")), UnsupportedExponent);
    CHECK_THROWS_AS(pow(GrossNumber(2), gp("G^2")), UnsupportedExponent);
    CHECK_THROWS_AS(pow(gp("2*G"), G), UnsupportedExponent);
    CHECK_THROWS_AS(pow(GrossNumber(0), GrossNumber(-1)), UnsupportedExponent);
    CHECK_THROWS_AS(pow(GrossNumber(-2), G), UnsupportedExponent);
}

TEST_CASE("comparison is decided by the leading term") {
    CHECK(compare(gp("G/2"), gp("G - 1")) == Ordering::less);
    CHECK(compare(gp("10^G"), gp("G^G - 1")) == Ordering::less);
    CHECK(compare(gp("G^-1"), GrossNumber(0)) == Ordering::greater);
    CHECK(compare(gp("G + 1"), gp("G + 1")) == Ordering::equal);
}

TEST_CASE("the identity suite of the infinite unit holds exactly") {
    const GrossNumber zero(0);
    const GrossNumber one(1);
    const GrossNumber g_inv = gp("G^-1");
    const GrossNumber g_inv2 = gp("G^-2");

    CHECK(mul(zero, G) == zero);
    CHECK(mul(G, zero) == zero);
    CHECK(sub(G, G) == zero);
    CHECK(div(G, G) == one);
    CHECK(pow(G, zero) == one);
    CHECK(pow(one, G) == one);
    CHECK(pow(zero, G) == zero);

    CHECK(mul(zero, g_inv) == zero);
    CHECK(mul(g_inv, zero) == zero);
    CHECK(compare(g_inv, zero) == Ordering::greater);
    CHECK(compare(g_inv2, zero) == Ordering::greater);
    CHECK(sub(g_inv, g_inv) == zero);

    CHECK(div(g_inv, g_inv) == one);
    CHECK(div(g_inv2, g_inv2) == one);
    CHECK(pow(g_inv, zero) == one);
    CHECK(mul(G, g_inv) == one);
    CHECK(mul(G, g_inv2) == g_inv);
}

TEST_CASE("the sixteen-numeral chain is strictly increasing") {
    const char* chain[] = {
        "G/2",        "G - 1",      "G",          "G + 1",
        "2*G + 1",    "2*G^2 - 1",  "2*G^2",      "2*G^2 + 1",
        "2*G^2 + 2",  "2^G - 1",    "2^G",        "2^G + 1",
        "10^G",       "G^G - 1",    "G^G",        "G^G + 1",
    };
    for (std::size_t i = 0; i + 1 < std::size(chain); ++i) {
        CAPTURE(chain[i]);
        CAPTURE(chain[i + 1]);
        CHECK(compare(gp(chain[i]), gp(chain[i + 1])) == Ordering::less);
    }
}

TEST_CASE("classify splits by magnitude class") {
    CHECK(classify(gp("G^-2")).kind == NumberClass::infinitesimal);

    Decomposition fin = classify(gp("3 + 2*G^-1"));
    CHECK(fin.kind == NumberClass::finite);
    CHECK(fin.finite_part == GrossNumber(3));
    CHECK(fin.infinitesimal_part == gp("2*G^-1"));

    CHECK(classify(gp("2*G + 1")).kind == NumberClass::infinite);
    CHECK(classify(GrossNumber(0)).kind == NumberClass::zero);

    // parts recompose exactly
    GrossNumber mixed = gp("2^G + 5 - 3*G^-2 + G^G");
    Decomposition d = classify(mixed);
    CHECK(add(add(d.infinite_part, d.finite_part), d.infinitesimal_part) == mixed);
}

TEST_CASE("monotone growth: a + eps > a for positive finite eps") {
    for (const char* text : {"0", "G", "G^G", "2^G - G", "3 + 2*G^-1", "G/2 - 2"}) {
        GrossNumber a = gp(text);
        CHECK(compare(add(a, GrossNumber(1)), a) == Ordering::greater);
        CHECK(compare(add(a, GrossNumber(Rational(1, 7))), a) == Ordering::greater);
    }
}
