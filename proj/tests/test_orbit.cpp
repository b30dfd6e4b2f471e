#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leibniz/catalog.hpp"

using namespace leibniz;

namespace {

std::map<std::string, Rational> np(int n) { return {{"n", Rational(n)}}; }

// Canonical point of an automorphism family: 1 for free parameters, the
// pinned candidate for fixed ones.
std::vector<Rational> canonical_params(const AutFamily& fam) {
    std::vector<Rational> p;
    for (int k = 0; k < fam.param_count; ++k)
        p.push_back(fam.search_values[k].empty() ? Rational(1) : fam.search_values[k].front());
    return p;
}

const ClassCase& case_by_tag(const std::vector<ClassCase>& cases, const std::string& tag) {
    for (const ClassCase& cc : cases)
        if (cc.tag == tag) return cc;
    throw std::runtime_error("missing case " + tag);
}

}  // namespace

TEST_CASE("automorphism verification accepts family members and rejects others") {
    AlgebraTable r = get("R", np(3)).table;
    AutFamily fam = aut_family("R", 3);
    REQUIRE(fam.param_count == 2);

    auto phi = fam.instantiate({Rational(2), Rational(0)});
    REQUIRE(phi.has_value());
    CHECK(verify_automorphism(r, *phi).ok);

    auto phi2 = fam.instantiate({rat(-1, 2), Rational(3)});
    REQUIRE(phi2.has_value());
    CHECK(verify_automorphism(r, *phi2).ok);

    // Breaking one entry breaks the bracket compatibility.
    Mat broken = *phi;
    broken.at(0, 1) += 1;
    MapCheck bad = verify_automorphism(r, broken);
    CHECK_FALSE(bad.ok);
    CHECK(bad.invertible);
    CHECK_FALSE(bad.violations.empty());

    // A singular matrix is rejected before any bracket comparison.
    Mat zero(r.dim(), r.dim());
    MapCheck sing = verify_automorphism(r, zero);
    CHECK_FALSE(sing.ok);
    CHECK_FALSE(sing.invertible);
}

TEST_CASE("basis permutations are isomorphisms onto the relabeled table") {
    AlgebraTable a = get("H_hat_3").table;
    std::vector<int> perm = {5, 3, 0, 2, 4, 1};
    AlgebraTable b = permute_basis(a, perm);
    Mat p(a.dim(), a.dim());
    for (int j = 0; j < a.dim(); ++j) p.at(perm[j], j) = 1;
    CHECK(verify_isomorphism(a, b, p).ok);
    CHECK(verify_isomorphism(b, a, *inverse(p)).ok);
    // The wrong permutation direction is generally not an isomorphism a -> b.
    MapCheck wrong = verify_isomorphism(a, b, p.transposed());
    CHECK_FALSE(wrong.ok);
}

TEST_CASE("diagonal family scales the chain cocycle exactly") {
    CatalogEntry base = get("R", np(3));
    ExtensionRecipe rec = extension_recipe("R_hat", np(3));
    RepresentationPair rep = scalar_module(base.table, rec.rep_scalars);
    AutFamily fam = aut_family("R", 3);

    struct Row {
        Rational a, lambda, expected;  // omega picks up lambda * a^(n+1)
    };
    const std::vector<Row> rows = {
        {Rational(2), rat(1, 2), Rational(8)},
        {Rational(-1), Rational(1), Rational(1)},
        {Rational(3), Rational(-1), Rational(-81)},
    };
    for (const Row& row : rows) {
        CAPTURE(to_string(row.a));
        auto phi = fam.instantiate({row.a, Rational(0)});
        REQUIRE(phi.has_value());
        OrbitElement moved = act({rec.omega, rep}, *phi, row.lambda);
        CHECK(moved.rep == rep);
        CHECK(moved.omega == rec.omega.scaled(row.expected));
    }
}

TEST_CASE("orbit action is a group action") {
    AlgebraTable h = get("H").table;
    RepresentationPair rep = split_module(h, Rational(0), Rational(1), Rational(0), Rational(0));
    RationalSampler sampler(17);
    BilinearMap omega(h.dim(), 1);
    for (int i = 0; i < h.dim(); ++i)
        for (int j = 0; j < h.dim(); ++j) omega.at(i, j, 0) = sampler.next();
    OrbitElement el{omega, rep};

    // identity element acts trivially
    OrbitElement fixed = act(el, Mat::identity(h.dim()), Rational(1));
    CHECK(fixed.omega == el.omega);
    CHECK(fixed.rep == el.rep);

    AutFamily fam = aut_family("H.phi1");
    auto sample_phi = [&]() {
        while (true) {
            std::vector<Rational> params;
            for (int k = 0; k < fam.param_count; ++k) params.push_back(sampler.next_nonzero());
            if (auto m = fam.instantiate(params)) return *m;
        }
    };
    for (int trial = 0; trial < 5; ++trial) {
        Mat phi1 = sample_phi();
        Mat phi2 = sample_phi();
        Rational l1 = sampler.next_nonzero();
        Rational l2 = sampler.next_nonzero();
        OrbitElement twice = act(act(el, phi1, l1), phi2, l2);
        OrbitElement once = act(el, phi1 * phi2, l1 * l2);
        CHECK(twice.omega == once.omega);
        CHECK(twice.rep == once.rep);
    }

    // scalar overload agrees with the 1x1-matrix overload
    Mat psi(1, 1);
    psi.at(0, 0) = rat(-2, 3);
    Mat phi = sample_phi();
    OrbitElement via_scalar = act(el, phi, rat(-2, 3));
    OrbitElement via_matrix = act(el, phi, psi);
    CHECK(via_scalar.omega == via_matrix.omega);
    CHECK(via_scalar.rep == via_matrix.rep);
}

TEST_CASE("normalization recovers a scaled noisy class and certifies it") {
    CatalogEntry base = get("R", np(3));
    ExtensionRecipe rec = extension_recipe("R_hat", np(3));
    RepresentationPair rep = scalar_module(base.table, rec.rep_scalars);
    AutFamily fam = aut_family("R", 3);

    RationalSampler sampler(5);
    Mat noise(1, base.table.dim());
    for (int q = 0; q < base.table.dim(); ++q) noise.at(0, q) = sampler.next();
    OrbitElement el{
        rec.omega.scaled(Rational(3)).plus(
            coboundary(rep, noise, Mat::identity(base.table.dim()))),
        rep};

    std::vector<Rational> idp = canonical_params(fam);
    NormalizeTarget target{rep, rec.omega};
    NormalizeResult res =
        normalize_in_orbit(el, fam, {target}, {{idp, rat(1, 3)}, {idp, rat(-1, 3)}});
    REQUIRE(res.matched);
    CHECK(res.target_index == 0);
    CHECK(res.witness.lambda == rat(1, 3));
    CHECK(res.needed_coboundary);

    AlgebraTable from = build_extension({base.table, make_algebra("h", {"u"}), rep, el.omega});
    AlgebraTable to = build_extension({base.table, make_algebra("h", {"u"}), rep, rec.omega});
    Mat iso = isomorphism_from_witness(res.phi, res.witness.lambda, res.f);
    CHECK(verify_isomorphism(from, to, iso).ok);
}

TEST_CASE("normalization picks the correct target in a two-class quotient") {
    const std::vector<ClassCase> cases = classification_cases();
    const ClassCase& cc = case_by_tag(cases, "class.H.case07");
    REQUIRE(cc.class_basis.size() == 2);
    REQUIRE(cc.targets.size() == 2);

    AlgebraTable alg = get(cc.algebra).table;
    RepresentationPair rep = scalar_module(alg, cc.rep_scalars);
    AutFamily fam = aut_family(cc.aut_key);
    std::vector<Rational> idp = canonical_params(fam);

    // Targets aligned with the class basis: a pure leading class lands on the
    // first; a class with a second component lands on the second.
    ExtensionRecipe rec0 = extension_recipe(cc.targets[0]);
    std::map<std::string, Rational> d0;
    if (uses_delta(cc.targets[1])) d0 = {{"delta", Rational(0)}};
    ExtensionRecipe rec1 = extension_recipe(cc.targets[1], d0);
    REQUIRE(rec0.rep_scalars == cc.rep_scalars);
    REQUIRE(rec1.rep_scalars == cc.rep_scalars);
    std::vector<NormalizeTarget> targets = {{rep, rec0.omega}, {rep, rec1.omega}};
    std::vector<NormalizeWitness> preferred = {{idp, Rational(1)}, {idp, Rational(-1)}};

    NormalizeResult lead = normalize_in_orbit({cc.class_basis[0], rep}, fam, targets, preferred);
    REQUIRE(lead.matched);
    CHECK(lead.target_index == 0);

    NormalizeResult second = normalize_in_orbit({cc.class_basis[1], rep}, fam, targets, preferred);
    REQUIRE(second.matched);
    CHECK(second.target_index == 1);

    AlgebraTable from = build_extension({alg, make_algebra("h", {"u"}), rep, cc.class_basis[1]});
    AlgebraTable to = build_extension({alg, make_algebra("h", {"u"}), rep, rec1.omega});
    Mat iso = isomorphism_from_witness(second.phi, second.witness.lambda, second.f);
    CHECK(verify_isomorphism(from, to, iso).ok);
}

TEST_CASE("fingerprint certificates separate tables and stay honest") {
    NonIsoCertificate by_dim = nonisomorphism_certificate(get("NF", np(3)).table, get("R", np(3)).table);
    CHECK(by_dim.distinct);
    CHECK(by_dim.field == "dim");

    NonIsoCertificate by_series =
        nonisomorphism_certificate(get("NF", np(5)).table, get("R_hat", np(3)).table);
    CHECK(by_series.distinct);
    CHECK(by_series.field == "lower_central_series");

    NonIsoCertificate same = nonisomorphism_certificate(get("H").table, get("H").table);
    CHECK_FALSE(same.distinct);
}

TEST_CASE("parameterized family members share their invariant summary") {
    // The two parameter values give equal summaries, so the certificate cannot
    // distinguish them; equality of summaries is not an isomorphism claim.
    AlgebraTable d0 = get("H_hat_5", {{"delta", Rational(0)}}).table;
    AlgebraTable d1 = get("H_hat_5", {{"delta", Rational(1)}}).table;

    Fingerprint f0 = fingerprint(d0);
    CHECK(f0.dim == 6);
    CHECK(f0.lcs_dims == std::vector<int>{6, 4, 4});
    CHECK(f0.derived_dims == std::vector<int>{6, 4, 1, 0});
    CHECK(f0.center_dim == 0);
    CHECK(f0.derivation_dim == 7);
    CHECK(f0.solvable);
    CHECK_FALSE(f0.nilpotent);

    CHECK(fingerprint(d1) == f0);
    CHECK_FALSE(nonisomorphism_certificate(d0, d1).distinct);
}
