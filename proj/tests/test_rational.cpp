#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leibniz/rational.hpp"

using namespace leibniz;

TEST_CASE("construction reduces and normalizes signs") {
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(rat(1, -2) == rat(-1, 2));
    CHECK(to_string(rat(1, -2)) == "-1/2");
    CHECK(to_string(rat(-6, -3)) == "2");
    CHECK(to_string(rat(0, 7)) == "0");
}

TEST_CASE("parse accepts p and p/q") {
    CHECK(parse_rational("5") == rat(5));
    CHECK(parse_rational("-5") == rat(-5));
    CHECK(parse_rational("+5") == rat(5));
    CHECK(parse_rational("3/6") == rat(1, 2));
    CHECK(parse_rational("4/-6") == rat(-2, 3));
    CHECK(parse_rational("-12345678901234567890/3") ==
          Rational("-4115226300411522630"));
}

TEST_CASE("parse rejects malformed input") {
    CHECK(!parse_rational(""));
    CHECK(!parse_rational("1/0"));
    CHECK(!parse_rational("1.5"));
    CHECK(!parse_rational("a/b"));
    CHECK(!parse_rational("1/"));
    CHECK(!parse_rational("/2"));
    CHECK(!parse_rational("1 / 2"));
    CHECK(!parse_rational("--3"));
}

TEST_CASE("round trip through the canonical rendering") {
    RationalSampler sampler(7);
    for (int i = 0; i < 200; ++i) {
        Rational q = sampler.next();
        auto back = parse_rational(to_string(q));
        REQUIRE(back.has_value());
        CHECK(*back == q);
    }
}

TEST_CASE("sampler stays in range and is deterministic") {
    RationalSampler a(42);
    RationalSampler b(42);
    for (int i = 0; i < 500; ++i) {
        Rational q = a.next();
        CHECK(q == b.next());
        CHECK(q >= rat(-9));
        CHECK(q <= rat(9));
    }
    CHECK(a.next_nonzero() != 0);
}
