#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leibniz/catalog.hpp"
#include "leibniz/fileformat.hpp"

using namespace leibniz;

namespace {

std::string patch(std::string text, const std::string& from, const std::string& to) {
    auto pos = text.find(from);
    REQUIRE(pos != std::string::npos);
    return text.replace(pos, from.size(), to);
}

}  // namespace

TEST_CASE("round-trip is the identity on every catalog table") {
    for (const auto& name : catalog_names()) {
        std::map<std::string, Rational> params;
        if (uses_n(name)) params["n"] = 4;
        AlgebraTable a = get(name, params).table;
        CAPTURE(name);

        const std::string text = serialize_algebra(a);
        AlgebraTable b = parse_algebra(text);
        CHECK(b == a);
        CHECK(serialize_algebra(b) == text);  // bitwise stability
    }
}

TEST_CASE("parser canonicalizes lenient coefficient spellings") {
    const std::string text = R"({
      "name": "toy",
      "dim": 2,
      "basis": ["a", "b"],
      "products": [
        {"left": "a", "right": "a", "value": {"b": "2/4"}},
        {"left": "b", "right": "a", "value": {"a": "1/-3", "b": "+5"}}
      ]
    })";
    AlgebraTable t = parse_algebra(text);
    CHECK(t.product(0, 0)[1] == Rational(1, 2));
    CHECK(t.product(1, 0)[0] == Rational(-1, 3));
    CHECK(t.product(1, 0)[1] == 5);

    // Canonical form survives one more round-trip bitwise.
    const std::string canon = serialize_algebra(t);
    CHECK(serialize_algebra(parse_algebra(canon)) == canon);
}

TEST_CASE("syntax errors carry line and column") {
    const std::string bad = "{\n  \"name\": \"x\",\n  \"dim\": oops\n}";
    try {
        parse_algebra(bad);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
        CHECK(e.column > 1);
    }
}

TEST_CASE("structural errors are rejected with clear messages") {
    AlgebraTable h = get("H").table;
    const std::string good = serialize_algebra(h);

    SUBCASE("unknown label") {
        CHECK_THROWS_WITH_AS(parse_algebra(patch(good, "\"left\": \"e1\"", "\"left\": \"zz\"")),
                             doctest::Contains("unknown basis label"), ParseError);
    }
    SUBCASE("non-rational coefficient") {
        CHECK_THROWS_WITH_AS(parse_algebra(patch(good, "\"e3\": \"1\"", "\"e3\": \"1/0\"")),
                             doctest::Contains("non-rational coefficient"), ParseError);
    }
    SUBCASE("duplicate product pair") {
        const std::string dup = R"({"name":"t","dim":1,"basis":["a"],"products":[
          {"left":"a","right":"a","value":{"a":"1"}},
          {"left":"a","right":"a","value":{"a":"2"}}]})";
        CHECK_THROWS_WITH_AS(parse_algebra(dup), doctest::Contains("duplicate product"),
                             ParseError);
    }
    SUBCASE("dim mismatch") {
        CHECK_THROWS_WITH_AS(parse_algebra(patch(good, "\"dim\": 5", "\"dim\": 4")),
                             doctest::Contains("lists"), ParseError);
    }
    SUBCASE("duplicate basis label") {
        const std::string dup = R"({"name":"t","dim":2,"basis":["a","a"]})";
        CHECK_THROWS_WITH_AS(parse_algebra(dup), doctest::Contains("duplicate basis label"),
                             ParseError);
    }
    SUBCASE("missing required field") {
        const std::string missing = R"({"dim":1,"basis":["a"]})";
        CHECK_THROWS_WITH_AS(parse_algebra(missing), doctest::Contains("missing field"),
                             ParseError);
    }
}

TEST_CASE("omitted products parse as zero") {
    AlgebraTable t = parse_algebra(R"({"name":"z","dim":2,"basis":["a","b"]})");
    CHECK(t.dim() == 2);
    CHECK(is_zero_vec(t.product(0, 1)));
    CHECK(leibniz_check(t).empty());  // the zero algebra
}

TEST_CASE("cocycle files round-trip against a catalog recipe") {
    ExtensionRecipe rec = extension_recipe("H_hat_3");
    AlgebraTable g = get(rec.base).table;
    AlgebraTable h = make_algebra("fiber", {"e4"});

    const std::string text = serialize_cocycle(rec.omega, g, h);
    BilinearMap back = parse_cocycle(text, g, h);
    CHECK(back == rec.omega);
    CHECK(serialize_cocycle(back, g, h) == text);

    CHECK_THROWS_AS(parse_cocycle("{\"entries\": [{\"left\": \"nope\", \"right\": \"e1\", "
                                  "\"value\": {\"e4\": \"1\"}}]}",
                                  g, h),
                    ParseError);
}
