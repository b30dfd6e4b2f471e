#pragma once

#include "leibniz/matrix.hpp"

namespace leibniz {

/// Linear subspace of Q^ambient, stored as the canonical reduced-echelon basis
/// of its span. Two Subspace values are equal iff they are the same subspace.
struct Subspace {
    int ambient = 0;
    Mat basis;  // rank x ambient, reduced echelon, no zero rows

    static Subspace zero(int ambient);
    static Subspace full(int ambient);
    static Subspace span(int ambient, const std::vector<Vec>& vectors);
    static Subspace span(const Mat& vectors_as_rows);

    int dim() const { return basis.rows(); }
    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;

    /// Residual of v after echelon reduction against the basis; zero iff v lies
    /// in the subspace.
    Vec reduce(Vec v) const;

    /// Coordinates of a member vector in the canonical basis.
    Vec coordinates(const Vec& member) const;

    bool operator==(const Subspace& rhs) const = default;
};

}  // namespace leibniz
