#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "leibniz/catalog.hpp"
#include "leibniz/extension.hpp"
#include "leibniz/orbit.hpp"

using namespace leibniz;

namespace {

std::vector<std::map<std::string, Rational>> param_samples(const std::string& name) {
    if (uses_n(name)) {
        std::vector<std::map<std::string, Rational>> out;
        for (int n = 2; n <= 5; ++n) out.push_back({{"n", Rational(n)}});
        return out;
    }
    if (uses_delta(name)) {
        std::vector<std::map<std::string, Rational>> out;
        for (long d : {1L, 3L, -2L}) out.push_back({{"delta", Rational(d)}});
        return out;
    }
    return {{}};
}

Subspace flat_span(const std::vector<BilinearMap>& vs) {
    REQUIRE(!vs.empty());
    std::vector<Vec> flats;
    for (const auto& v : vs) flats.push_back(v.coords);
    const int ambient = vs.front().gdim * vs.front().gdim * vs.front().hdim;
    return Subspace::span(ambient, flats);
}

AlgebraTable point_table(const std::string& label) { return make_algebra("pt", {label}); }

}  // namespace

TEST_CASE("every catalog table satisfies the structure identity") {
    for (const auto& name : catalog_names()) {
        for (const auto& params : param_samples(name)) {
            CAPTURE(name);
            CatalogEntry e = get(name, params);
            CHECK(e.table.dim() >= 2);
            CHECK(leibniz_check(e.table).empty());

            Fingerprint fp = fingerprint(e.table);
            CHECK(fp.solvable);
            CHECK(fp.nilpotent == (name == "NF"));

            REQUIRE(e.nilradical.has_value());
            auto nil = verify_nilradical(e.table, *e.nilradical);
            CHECK(nil.status == NilradicalStatus::ok);

            REQUIRE(static_cast<int>(e.relabeling.size()) == e.table.dim());
            auto sorted = e.relabeling;
            std::sort(sorted.begin(), sorted.end());
            for (int i = 0; i < e.table.dim(); ++i) CHECK(sorted[i] == i);
        }
    }
}

TEST_CASE("catalog rejects bad names and parameters") {
    CHECK_THROWS_AS(get("bogus"), std::invalid_argument);
    CHECK_THROWS_AS(get("R"), std::invalid_argument);                          // n missing
    CHECK_THROWS_AS(get("R", {{"n", Rational(1)}}), std::invalid_argument);    // n too small
    CHECK_THROWS_AS(get("R", {{"n", Rational(5, 2)}}), std::invalid_argument); // n not integral
    CHECK_THROWS_AS(get("NF", {{"n", Rational(3)}, {"delta", Rational(1)}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(get("H", {{"n", Rational(3)}}), std::invalid_argument);
    CHECK_THROWS_AS(get("H_hat_1", {{"delta", Rational(2)}}), std::invalid_argument);

    CatalogEntry defaulted = get("H_hat_5");
    CHECK(defaulted.parameters.at("delta") == 1);
    CHECK(get("H_hat_5", {{"delta", Rational(1)}}).table == defaulted.table);
}

TEST_CASE("rejected table readings break the structure identity") {
    auto variants = table_reading_variants();
    REQUIRE(variants.size() == 3);
    for (const auto& v : variants) {
        CAPTURE(v.tag);
        CHECK(!v.satisfies_identity);
        CHECK(!leibniz_check(v.table).empty());
    }
}

TEST_CASE("scalar modules validate the bimodule law") {
    AlgebraTable r = get("R", {{"n", Rational(3)}}).table;
    AlgebraTable h = get("H").table;

    CHECK_NOTHROW(chain_module(r, 0, -4));
    CHECK_NOTHROW(chain_module(r, 1, -1));
    CHECK_NOTHROW(split_module(h, 0, 1, 0, 0));
    CHECK_NOTHROW(split_module(h, -1, 1, -2, 2));

    // gamma1 * (gamma1 + gamma2) must vanish
    CHECK_THROWS_AS(chain_module(r, 1, 1), std::invalid_argument);
    // alpha1 * (alpha1 + alpha2) must vanish
    CHECK_THROWS_AS(split_module(h, 1, 1, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(scalar_module(h, {Rational(1)}), std::invalid_argument);
}

TEST_CASE("extension recipes rebuild the stored tables") {
    for (const auto& name : catalog_names()) {
        if (name.find("hat") == std::string::npos) continue;
        for (const auto& params : param_samples(name)) {
            CAPTURE(name);
            ExtensionRecipe rec = extension_recipe(name, params);
            CatalogEntry stored = get(name, params);

            AlgebraTable base = get(rec.base, rec.base_params).table;
            RepresentationPair rep = scalar_module(base, rec.rep_scalars);
            CHECK(rep_check(rep).empty());
            CHECK(cocycle_check(rep, rec.omega).empty());

            const std::string h_label =
                stored.table.basis[rec.base == "R" ? base.dim() - 1 : 3];
            ExtensionSpec spec{base, point_table(h_label), rep, rec.omega};
            CHECK(validity_check(spec).valid);

            AlgebraTable built = permute_basis(build_extension(spec), stored.relabeling);
            built.name = stored.table.name;
            CHECK(built == stored.table);
        }
    }
}

TEST_CASE("recorded cocycle-space bases span the computed spaces") {
    for (const auto& c : cocycle_span_cases()) {
        CAPTURE(c.tag);
        AlgebraTable g = get(c.algebra, c.algebra_params).table;
        RepresentationPair p = scalar_module(g, c.rep_scalars);
        CocycleSpace z2 = compute_Z2(p);

        REQUIRE(!c.variants.empty());
        CHECK(c.variants.front().expected_to_span);
        for (const auto& variant : c.variants) {
            CAPTURE(variant.reading);
            Subspace spanned = flat_span(variant.vectors);
            if (variant.expected_to_span) {
                for (const auto& w : variant.vectors) {
                    CHECK(cocycle_check(p, w).empty());
                    CHECK(z2.space.contains(w.coords));
                }
                CHECK(spanned.dim() == static_cast<int>(variant.vectors.size()));
                CHECK(spanned == z2.space);
            } else {
                CHECK(spanned != z2.space);
            }
        }
    }
}

TEST_CASE("computed cohomology dimensions against the recorded table") {
    // Two rows of the recorded chain-family table disagree with exact
    // computation; their computed values are frozen here and the discrepancy
    // is surfaced by the verification harness.
    for (const auto& row : expectations()) {
        CAPTURE(row.tag);
        AlgebraTable g = get(row.algebra, row.algebra_params).table;
        RepresentationPair p = scalar_module(g, row.rep_scalars);
        const int z2 = compute_Z2(p).dim();
        const int b2 = compute_B2(p).dim();

        const bool red_zero = row.algebra == "R" && row.rep_scalars[0] == 0 &&
                              row.rep_scalars[1] == 0;
        const bool red_unit = row.algebra == "R" && row.rep_scalars[0] == 1 &&
                              row.rep_scalars[1] == -1;
        if (red_zero || red_unit) {
            const int n = g.dim() - 1;
            CHECK(z2 == row.dim_Z2);
            CHECK(b2 == (red_zero ? n : n - 1));  // recorded: one more in each case
            CHECK(b2 != row.dim_B2);
            CHECK(z2 - b2 == 1);
        } else {
            CHECK(z2 == row.dim_Z2);
            CHECK(b2 == row.dim_B2);
            CHECK(z2 - b2 == row.dim_H2);
        }
    }
}

TEST_CASE("recorded coboundary generator images match the differential") {
    for (const auto& row : expectations()) {
        CAPTURE(row.tag);
        AlgebraTable g = get(row.algebra, row.algebra_params).table;
        RepresentationPair p = scalar_module(g, row.rep_scalars);
        auto images = recorded_coboundary_images(row.algebra, g, row.rep_scalars);
        REQUIRE(static_cast<int>(images.size()) == g.dim());

        const Mat id = Mat::identity(g.dim());
        for (int k = 0; k < g.dim(); ++k) {
            Mat f(1, g.dim());
            f.at(0, k) = 1;
            BilinearMap df = coboundary(p, f, id);
            CAPTURE(k);
            CHECK(df == images[k]);
        }

        CHECK(flat_span(images) == compute_B2(p).space);
    }
}

TEST_CASE("classification data is consistent with the computed cohomology") {
    for (const auto& c : classification_cases()) {
        CAPTURE(c.tag);
        AlgebraTable g = get(c.algebra).table;
        RepresentationPair p = scalar_module(g, c.rep_scalars);
        CocycleSpace z2 = compute_Z2(p);
        CocycleSpace b2 = compute_B2(p);

        REQUIRE(!c.class_basis.empty());
        CHECK(static_cast<int>(c.class_basis.size()) == z2.dim() - b2.dim());
        REQUIRE(c.targets.size() == c.class_basis.size());

        Subspace mod = b2.space;
        for (const auto& u : c.class_basis) {
            CHECK(cocycle_check(p, u).empty());
            CHECK(z2.space.contains(u.coords));
            CHECK(!mod.contains(u.coords));  // independent modulo coboundaries
            mod = mod.sum(Subspace::span(static_cast<int>(u.coords.size()), {u.coords}));
        }

        const auto names = catalog_names();
        for (const auto& t : c.targets)
            CHECK(std::find(names.begin(), names.end(), t) != names.end());
        CHECK_NOTHROW(aut_family(c.aut_key, 2));

        if (c.swap) {
            CHECK_NOTHROW(aut_family(c.swap->family, 2));
            RepresentationPair q = scalar_module(g, c.swap->image_rep_scalars);
            CocycleSpace zq = compute_Z2(q);
            Subspace bq = compute_B2(q).space;
            REQUIRE(c.swap->image_class_basis.size() == c.class_basis.size());
            for (const auto& u : c.swap->image_class_basis) {
                CHECK(cocycle_check(q, u).empty());
                CHECK(zq.space.contains(u.coords));
                CHECK(!bq.contains(u.coords));
            }
        }
    }
}

TEST_CASE("automorphism families verify on sample parameter points") {
    struct Sample {
        std::string key;
        int n;
        std::vector<Rational> params;
    };
    const std::vector<Sample> good = {
        {"H.phi1", 0, {2, 1, 3, -1, 5}},  {"H.phi1", 0, {1, 0, 1, 0, 0}},
        {"H.phi2", 0, {2, 1, 3, -1, 5}},  {"H.phi2", 0, {1, 0, 1, 0, 0}},
        {"L1", 0, {2, -3}},               {"L1", 0, {Rational(1, 2), 1}},
        {"L2", 0, {2, 3, -1}},            {"L2", 0, {1, 1, Rational(1, 2)}},
        {"L3", 0, {2, 3, -1, 4}},         {"L3", 0, {1, 1, 0, -2}},
        {"R", 2, {2, 3}},                 {"R", 3, {-1, Rational(1, 2)}},
        {"R", 4, {Rational(1, 3), -2}},   {"R.alt", 3, {5, 0}},
    };
    for (const auto& s : good) {
        CAPTURE(s.key);
        AutFamily fam = aut_family(s.key, s.n);
        REQUIRE(static_cast<int>(s.params.size()) == fam.param_count);
        auto m = fam.instantiate(s.params);
        REQUIRE(m.has_value());
        CHECK(verify_automorphism(fam.algebra, *m).ok);
    }

    // Outside the domain: leading parameters must not vanish.
    CHECK(!aut_family("H.phi1").instantiate({0, 0, 1, 0, 0}).has_value());
    CHECK(!aut_family("L1").instantiate({1, 0}).has_value());
    CHECK(!aut_family("R", 3).instantiate({0, 1}).has_value());

    // The variant reading of the chain-family translation column fails the
    // bracket check as soon as the translation parameter is nonzero.
    for (int n = 2; n <= 4; ++n) {
        AutFamily alt = aut_family("R.alt", n);
        auto m = alt.instantiate({1, 1});
        REQUIRE(m.has_value());
        CHECK(!verify_automorphism(alt.algebra, *m).ok);
    }

    // A perturbed member of a family is no longer an automorphism.
    AutFamily l1 = aut_family("L1");
    Mat m = *l1.instantiate({2, -3});
    m.at(0, 1) += 1;
    CHECK(!verify_automorphism(l1.algebra, m).ok);
}
