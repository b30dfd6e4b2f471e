#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leibniz/catalog.hpp"

using namespace leibniz;

namespace {

std::map<std::string, Rational> np(int n) { return {{"n", Rational(n)}}; }

BilinearMap entry_map(const AlgebraTable& g, const std::string& left, const std::string& right,
                      const Rational& value) {
    BilinearMap w(g.dim(), 1);
    w.at(g.index_of(left), g.index_of(right), 0) = value;
    return w;
}

}  // namespace

TEST_CASE("scalar bimodule laws hold for admissible scalars and fail otherwise") {
    AlgebraTable r = get("R", np(3)).table;
    CHECK(rep_check(chain_module(r, Rational(0), Rational(-4))).empty());
    CHECK(rep_check(chain_module(r, Rational(1), Rational(-1))).empty());
    CHECK_THROWS_AS(chain_module(r, Rational(1), Rational(1)), std::invalid_argument);

    // Constructing the inadmissible pair by hand: the law checker reports it.
    RepresentationPair bad = scalar_rep(r, {{r.dim() - 1, {Rational(1), Rational(1)}}});
    auto violations = rep_check(bad);
    REQUIRE_FALSE(violations.empty());
    CHECK(violations.front().identity.find("l_x") != std::string::npos);

    AlgebraTable h = get("H").table;
    CHECK(rep_check(split_module(h, Rational(-1), Rational(1), Rational(0), Rational(0))).empty());
    CHECK_THROWS_AS(split_module(h, Rational(1), Rational(1), Rational(0), Rational(0)),
                    std::invalid_argument);
}

TEST_CASE("frozen cocycle-space dimensions") {
    struct Row {
        const char* algebra;
        int n;  // 0 = no parameter
        std::vector<Rational> scalars;
        int z2, b2;
    };
    const std::vector<Row> rows = {
        {"R", 4, {Rational(0), Rational(-5)}, 6, 5},
        {"R", 3, {Rational(0), Rational(-4)}, 5, 4},
        {"H", 0, {Rational(0), Rational(1), Rational(0), Rational(0)}, 6, 5},
        {"H", 0, {Rational(-1), Rational(1), Rational(0), Rational(0)}, 5, 3},
        {"H", 0, {Rational(-3), Rational(3), Rational(-4), Rational(4)}, 4, 4},
        {"L1", 0, {Rational(0), Rational(0), Rational(0), Rational(1)}, 6, 4},
        {"L2", 0, {Rational(0), Rational(3), Rational(0), Rational(0)}, 6, 5},
        {"L3", 0, {Rational(0), Rational(0), Rational(-1), Rational(1)}, 5, 3},
    };
    for (const Row& row : rows) {
        CAPTURE(row.algebra);
        CAPTURE(row.n);
        AlgebraTable a = row.n ? get(row.algebra, np(row.n)).table : get(row.algebra).table;
        RepresentationPair p = scalar_module(a, row.scalars);
        Cohomology h = compute_H2(p);
        CHECK(h.z2.dim() == row.z2);
        CHECK(h.b2.dim() == row.b2);
        CHECK(h.dim == row.z2 - row.b2);
        CHECK(static_cast<int>(h.representatives.size()) == h.dim);
    }
}

TEST_CASE("trivial action on an abelian algebra: every bilinear map is a cocycle") {
    AlgebraTable g = make_algebra("ab", {"a", "b"});
    RepresentationPair p = trivial_rep(g, 1);
    CHECK(rep_check(p).empty());
    CHECK(compute_Z2(p).dim() == 4);
    CHECK(compute_B2(p).dim() == 0);
    CHECK(compute_H2(p).dim == 4);
}

TEST_CASE("cocycle identity: positive and negative witnesses") {
    AlgebraTable r = get("R", np(4)).table;
    RepresentationPair p = chain_module(r, Rational(0), Rational(-5));
    CHECK(cocycle_check(p, entry_map(r, "e4", "e1", Rational(1))).empty());

    auto violations = cocycle_check(p, entry_map(r, "e1", "e2", Rational(1)));
    REQUIRE_FALSE(violations.empty());
    CHECK_FALSE(is_zero_vec(violations.front().defect));
}

TEST_CASE("coboundaries are cocycles and differentials match the matrix route") {
    AlgebraTable h = get("H").table;
    RepresentationPair p =
        split_module(h, Rational(-1), Rational(1), Rational(0), Rational(0));
    const Mat id = Mat::identity(h.dim());
    Mat cb = coboundary_matrix(p, id);
    RationalSampler sampler(7);
    for (int t = 0; t < 5; ++t) {
        Mat f(1, h.dim());
        Vec flat = zero_vec(h.dim());
        for (int q = 0; q < h.dim(); ++q) {
            f.at(0, q) = sampler.next();
            flat[q] = f.at(0, q);
        }
        BilinearMap df = coboundary(p, f, id);
        CHECK(cocycle_check(p, df).empty());
        CHECK(df.coords == cb.apply(flat));
        CHECK(compute_B2(p).space.contains(df.coords));
    }
    CHECK(compute_Z2(p).space.contains(compute_B2(p).space));
}

TEST_CASE("canonical space bases round-trip through basis_map") {
    AlgebraTable r = get("R", np(3)).table;
    RepresentationPair p = chain_module(r, Rational(0), Rational(-4));
    CocycleSpace z2 = compute_Z2(p);
    for (int i = 0; i < z2.dim(); ++i) {
        BilinearMap w = z2.basis_map(i);
        CHECK(w.coords == z2.space.basis.row(i));
        CHECK(cocycle_check(p, w).empty());
    }
}

TEST_CASE("quotient representatives are independent cocycles outside the coboundaries") {
    AlgebraTable h = get("H").table;
    RepresentationPair p =
        split_module(h, Rational(-1), Rational(1), Rational(0), Rational(0));
    Cohomology coh = compute_H2(p);
    REQUIRE(coh.dim == 2);
    Subspace acc = coh.b2.space;
    for (const BilinearMap& rep : coh.representatives) {
        CHECK(coh.z2.space.contains(rep.coords));
        CHECK_FALSE(coh.b2.space.contains(rep.coords));
        Subspace next = acc.sum(Subspace::span(static_cast<int>(rep.coords.size()), {rep.coords}));
        CHECK(next.dim() == acc.dim() + 1);
        acc = next;
    }
    CHECK(acc == coh.z2.space);
}
