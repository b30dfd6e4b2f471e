#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leibniz/catalog.hpp"

using namespace leibniz;

namespace {

std::map<std::string, Rational> np(int n) { return {{"n", Rational(n)}}; }

Mat random_mat(RationalSampler& sampler, int rows, int cols) {
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = sampler.next();
    return m;
}

}  // namespace

TEST_CASE("coboundaries are cocycles and the quotient accounts for everything") {
    for (const ExpectationRow& row : expectations()) {
        CAPTURE(row.tag);
        CatalogEntry entry = get(row.algebra, row.algebra_params);
        RepresentationPair rep = scalar_module(entry.table, row.rep_scalars);

        CocycleSpace z2 = compute_Z2(rep);
        CocycleSpace b2 = compute_B2(rep);
        CHECK(z2.space.contains(b2.space));

        Cohomology h2 = compute_H2(rep);
        CHECK(h2.dim == z2.dim() - b2.dim());
        CHECK(static_cast<int>(h2.representatives.size()) == h2.dim);

        Subspace acc = b2.space;
        for (const BilinearMap& u : h2.representatives) {
            CHECK(cocycle_check(rep, u).empty());
            CHECK(z2.space.contains(u.coords));
            CHECK_FALSE(b2.space.contains(u.coords));
            Subspace next = acc.sum(Subspace::span(acc.ambient, {u.coords}));
            CHECK(next.dim() == acc.dim() + 1);  // independent modulo coboundaries
            acc = next;
        }
        CHECK(acc == z2.space);  // coboundaries + representatives span the cocycles

        // every basis cocycle of Z2 satisfies the identity checker too
        for (int r = 0; r < z2.dim(); ++r)
            CHECK(cocycle_check(rep, z2.basis_map(r)).empty());
    }
}

TEST_CASE("coboundary space is stable under automorphism twists") {
    CatalogEntry entry = get("R", np(3));
    RepresentationPair rep = chain_module(entry.table, Rational(0), Rational(-4));
    AutFamily fam = aut_family("R", 3);
    Subspace plain = compute_B2(rep).space;

    RationalSampler sampler(11);
    int tried = 0;
    while (tried < 8) {
        std::vector<Rational> params;
        for (int k = 0; k < fam.param_count; ++k) params.push_back(sampler.next_nonzero());
        auto phi = fam.instantiate(params);
        if (!phi) continue;
        ++tried;
        CHECK(compute_B2(rep, *phi).space == plain);
    }
}

TEST_CASE("recorded coboundary tables equal the computed differentials") {
    CatalogEntry entry = get("R", np(3));
    RepresentationPair rep = chain_module(entry.table, Rational(0), Rational(-4));
    std::vector<BilinearMap> images = recorded_coboundary_images(
        "R", entry.table, {Rational(0), Rational(-4)});
    REQUIRE(static_cast<int>(images.size()) == entry.table.dim());

    Mat id = Mat::identity(entry.table.dim());
    std::vector<Vec> rows;
    for (int k = 0; k < entry.table.dim(); ++k) {
        Mat f(1, entry.table.dim());  // elementary map: k-th basis vector -> generator
        f.at(0, k) = 1;
        CHECK(coboundary(rep, f, id) == images[k]);
        rows.push_back(images[k].coords);
    }
    Subspace image_span = Subspace::span(entry.table.dim() * entry.table.dim(), rows);
    CHECK(image_span == compute_B2(rep).space);
}

TEST_CASE("over an abelian algebra with zero action every bilinear map is a cocycle") {
    AlgebraTable a = make_algebra("abelian", {"a1", "a2", "a3"});
    REQUIRE(leibniz_check(a).empty());
    RepresentationPair rep = trivial_rep(a, 1);
    CHECK(compute_Z2(rep).dim() == 9);
    CHECK(compute_B2(rep).dim() == 0);
    CHECK(compute_H2(rep).dim == 9);
}

TEST_CASE("invariant summary is blind to basis relabeling") {
    RationalSampler sampler(23);
    for (const std::string& name : {"R_hat", "H_hat_4", "L3_hat_2"}) {
        std::map<std::string, Rational> params;
        if (uses_n(name)) params = np(4);
        AlgebraTable a = get(name, params).table;
        Fingerprint base = fingerprint(a);
        for (int t = 0; t < 5; ++t) {
            std::vector<int> perm(a.dim());
            for (int i = 0; i < a.dim(); ++i) perm[i] = i;
            for (int i = a.dim() - 1; i > 0; --i)
                std::swap(perm[i], perm[sampler.next_int(0, i)]);
            CHECK(fingerprint(permute_basis(a, perm)) == base);
        }
    }
}

TEST_CASE("parallel elimination matches the serial reference") {
    RationalSampler sampler(31);
    for (int trial = 0; trial < 3; ++trial) {
        Mat m = random_mat(sampler, 30, 40);
        RrefResult par = rref(m);
        RrefResult ser = rref_serial(m);
        CHECK(par.mat == ser.mat);
        CHECK(par.pivots == ser.pivots);
        CHECK(par.rank == ser.rank);
        CHECK(par.rank <= 30);
        // idempotence of the reduced form
        CHECK(rref(par.mat).mat == par.mat);
    }
}

TEST_CASE("subspace arithmetic satisfies the dimension formula") {
    RationalSampler sampler(41);
    const int ambient = 8;
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Vec> arows, brows;
        int da = static_cast<int>(sampler.next_int(1, 5));
        int db = static_cast<int>(sampler.next_int(1, 5));
        for (int i = 0; i < da; ++i) arows.push_back(random_mat(sampler, 1, ambient).row(0));
        for (int i = 0; i < db; ++i) brows.push_back(random_mat(sampler, 1, ambient).row(0));
        Subspace A = Subspace::span(ambient, arows);
        Subspace B = Subspace::span(ambient, brows);
        Subspace sum = A.sum(B);
        Subspace meet = A.intersect(B);
        CHECK(sum.dim() == A.dim() + B.dim() - meet.dim());
        CHECK(sum.contains(A));
        CHECK(sum.contains(B));
        CHECK(A.contains(meet));
        CHECK(B.contains(meet));
        for (const Vec& v : arows) {
            CHECK(A.contains(v));
            CHECK(is_zero_vec(A.reduce(v)));
        }
    }
}
