#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leibniz/catalog.hpp"

using namespace leibniz;

namespace {

std::map<std::string, Rational> np(int n) { return {{"n", Rational(n)}}; }

}  // namespace

TEST_CASE("chain nilpotent family: series, center, annihilators") {
    for (int n = 2; n <= 5; ++n) {
        CAPTURE(n);
        AlgebraTable a = get("NF", np(n)).table;
        REQUIRE(a.dim() == n);
        CHECK(leibniz_check(a).empty());
        CHECK(is_nilpotent(a));
        CHECK(is_solvable(a));

        std::vector<int> expected_lcs;
        for (int k = n; k >= 0; --k) expected_lcs.push_back(k);
        CHECK(lower_central_series_dims(a) == expected_lcs);

        CHECK(center(a).dim() == 1);
        CHECK(center(a).contains(Subspace::span(n, {[&] {
                                     Vec v = zero_vec(n);
                                     v[n - 1] = 1;
                                     return v;
                                 }()})));
        CHECK(left_annihilator(a).dim() == 1);
        CHECK(right_annihilator(a).dim() == n - 1);
    }
}

TEST_CASE("solvable families are solvable but not nilpotent") {
    std::vector<AlgebraTable> tables = {get("R", np(4)).table, get("H").table,
                                        get("L1").table, get("L2").table, get("L3").table,
                                        get("R_hat", np(3)).table, get("H_hat_3").table};
    for (const AlgebraTable& a : tables) {
        CAPTURE(a.name);
        CHECK(is_solvable(a));
        CHECK_FALSE(is_nilpotent(a));
        std::vector<int> ds = derived_series_dims(a);
        CHECK(ds.back() == 0);
        std::vector<int> lcs = lower_central_series_dims(a);
        CHECK(lcs.back() > 0);  // stabilizes above zero
    }
}

TEST_CASE("ideals and ideal closure in the chain algebra") {
    AlgebraTable a = get("NF", np(4)).table;

    // The span of the generator is not an ideal; its closure is everything.
    Vec e1 = zero_vec(4);
    e1[0] = 1;
    Subspace gen = Subspace::span(4, {e1});
    CHECK_FALSE(is_ideal(a, gen));
    CHECK(ideal_closure(a, gen).dim() == 4);

    // The tail spans are ideals.
    for (int k = 1; k < 4; ++k) {
        std::vector<Vec> tail;
        for (int i = k; i < 4; ++i) {
            Vec v = zero_vec(4);
            v[i] = 1;
            tail.push_back(v);
        }
        CHECK(is_ideal(a, Subspace::span(4, tail)));
    }
}

TEST_CASE("nilradical verification: positive and negative probes") {
    CatalogEntry r = get("R", np(4));
    REQUIRE(r.nilradical.has_value());
    CHECK(verify_nilradical(r.table, *r.nilradical).status == NilradicalStatus::ok);

    // A non-ideal probe is rejected.
    std::vector<Vec> short_span;
    for (int i = 0; i < 3; ++i) {
        Vec v = zero_vec(5);
        v[i] = 1;
        short_span.push_back(v);
    }
    CHECK(verify_nilradical(r.table, Subspace::span(5, short_span)).status ==
          NilradicalStatus::not_ideal);

    // Inside a nilpotent algebra every proper ideal is enlargeable.
    AlgebraTable nf = get("NF", np(4)).table;
    Vec e4 = zero_vec(4);
    e4[3] = 1;
    CHECK(verify_nilradical(nf, Subspace::span(4, {e4})).status == NilradicalStatus::enlargeable);

    // The full solvable algebra is not nilpotent, so it is rejected outright.
    CHECK(verify_nilradical(r.table, Subspace::full(5)).status == NilradicalStatus::not_nilpotent);
}

TEST_CASE("the solvable chain algebra's nilradical is the nilpotent chain") {
    for (int n = 2; n <= 5; ++n) {
        CAPTURE(n);
        CatalogEntry r = get("R", np(n));
        AlgebraTable sub = subalgebra_table(r.table, *r.nilradical, "probe");
        AlgebraTable nf = get("NF", np(n)).table;
        CHECK(sub.dim() == nf.dim());
        CHECK(sub.products == nf.products);
    }
}

TEST_CASE("basis relabeling preserves the structure and its invariants") {
    AlgebraTable a = get("H_hat_5", {{"delta", Rational(2)}}).table;
    std::vector<int> perm = {5, 3, 0, 2, 4, 1};  // an arbitrary permutation
    AlgebraTable b = permute_basis(a, perm);
    CHECK(leibniz_check(b).empty());
    CHECK(fingerprint(b) == fingerprint(a));
    CHECK(b.basis[perm[0]] == a.basis[0]);

    // Round trip through the inverse permutation.
    std::vector<int> inv(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
    AlgebraTable c = permute_basis(b, inv);
    CHECK(c == a);
}

TEST_CASE("bracket extends the table bilinearly") {
    AlgebraTable a = get("NF", np(3)).table;
    Vec u = zero_vec(3), v = zero_vec(3);
    u[0] = rat(2);
    u[1] = rat(1, 3);
    v[0] = rat(-1);
    // [2 e1 + 1/3 e2, -e1] = -2 e2 - 1/3 e3.
    Vec w = a.bracket(u, v);
    CHECK(w[0] == 0);
    CHECK(w[1] == rat(-2));
    CHECK(w[2] == rat(-1, 3));
}
