#include "leibniz/subspace.hpp"

#include <cassert>

namespace leibniz {

Subspace Subspace::zero(int ambient) {
    Subspace s;
    s.ambient = ambient;
    s.basis = Mat(0, ambient);
    return s;
}

Subspace Subspace::full(int ambient) {
    Subspace s;
    s.ambient = ambient;
    s.basis = Mat::identity(ambient);
    return s;
}

Subspace Subspace::span(int ambient, const std::vector<Vec>& vectors) {
    if (vectors.empty()) return zero(ambient);
    return span(Mat::from_rows(vectors));
}

Subspace Subspace::span(const Mat& vectors_as_rows) {
    Subspace s;
    s.ambient = vectors_as_rows.cols();
    s.basis = row_space(vectors_as_rows);
    return s;
}

bool Subspace::contains(const Vec& v) const {
    return is_zero_vec(reduce(v));
}

bool Subspace::contains(const Subspace& other) const {
    for (int i = 0; i < other.basis.rows(); ++i) {
        if (!contains(other.basis.row(i))) return false;
    }
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    assert(ambient == other.ambient);
    return span(vstack(basis, other.basis));
}

Subspace Subspace::intersect(const Subspace& other) const {
    assert(ambient == other.ambient);
    // x in both spans: x = a . basis = b . other.basis. Solve for (a, b) in the
    // kernel of [basis^T | -other.basis^T] and map the a-part back.
    const int da = dim();
    const int db = other.dim();
    if (da == 0 || db == 0) return zero(ambient);
    Mat sys(ambient, da + db);
    for (int i = 0; i < ambient; ++i) {
        for (int j = 0; j < da; ++j) sys.at(i, j) = basis.at(j, i);
        for (int j = 0; j < db; ++j) sys.at(i, da + j) = -other.basis.at(j, i);
    }
    Mat ker = nullspace(sys);
    std::vector<Vec> vecs;
    for (int k = 0; k < ker.rows(); ++k) {
        Vec v = zero_vec(ambient);
        for (int j = 0; j < da; ++j) {
            if (ker.at(k, j) == 0) continue;
            for (int c = 0; c < ambient; ++c) v[c] += ker.at(k, j) * basis.at(j, c);
        }
        vecs.push_back(std::move(v));
    }
    return span(ambient, vecs);
}

Vec Subspace::reduce(Vec v) const {
    assert(static_cast<int>(v.size()) == ambient);
    for (int i = 0; i < basis.rows(); ++i) {
        // The i-th basis row has its pivot at the first nonzero column; since
        // the basis is reduced echelon, reducing at the pivot clears v there.
        int p = 0;
        while (p < ambient && basis.at(i, p) == 0) ++p;
        if (p == ambient) continue;
        const Rational factor = v[p];
        if (factor == 0) continue;
        for (int j = p; j < ambient; ++j) {
            if (basis.at(i, j) != 0) v[j] -= factor * basis.at(i, j);
        }
    }
    return v;
}

Vec Subspace::coordinates(const Vec& member) const {
    // Pivot columns carry the coordinates directly: each basis row is the only
    // one with a nonzero entry (namely 1) at its own pivot.
    Vec coords(basis.rows());
    Vec v = member;
    for (int i = 0; i < basis.rows(); ++i) {
        int p = 0;
        while (p < ambient && basis.at(i, p) == 0) ++p;
        assert(p < ambient);
        coords[i] = v[p];
    }
    assert(contains(member));
    return coords;
}

}  // namespace leibniz
