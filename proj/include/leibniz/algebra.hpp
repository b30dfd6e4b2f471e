#pragma once

#include <string>
#include <vector>

#include "leibniz/subspace.hpp"

namespace leibniz {

/// Finite-dimensional algebra given by structure constants over Q.
/// products[i][j] holds the coordinates of [b_i, b_j] in the basis.
struct AlgebraTable {
    std::string name;
    std::vector<std::string> basis;
    std::vector<std::vector<Vec>> products;

    int dim() const { return static_cast<int>(basis.size()); }

    /// Bilinear extension of the product table.
    Vec bracket(const Vec& u, const Vec& v) const;

    const Vec& product(int i, int j) const { return products[i][j]; }
    void set_product(int i, int j, const Vec& value) { products[i][j] = value; }
    /// Adds c * b_k to the product [b_i, b_j].
    void add_product(int i, int j, int k, const Rational& c) { products[i][j][k] += c; }

    int index_of(const std::string& label) const;  // -1 when absent

    bool operator==(const AlgebraTable& rhs) const = default;
};

/// Zero algebra on the given basis labels.
AlgebraTable make_algebra(const std::string& name, const std::vector<std::string>& labels);

struct TripleViolation {
    int i = 0, j = 0, k = 0;
    Vec defect;  // [[i,j],k] - [i,[j,k]] - [[i,k],j]
};

/// All basis triples violating the (right) Leibniz identity
/// [[x,y],z] = [x,[y,z]] + [[x,z],y]. Empty iff the table is a Leibniz algebra.
std::vector<TripleViolation> leibniz_check(const AlgebraTable& a);

/// Span of [A, B].
Subspace product_space(const AlgebraTable& a, const Subspace& A, const Subspace& B);

/// Dimensions g^1 >= g^2 >= ... of g^{k+1} = [g^k, g], listed until the series
/// reaches zero or repeats a value (stabilizes).
std::vector<int> lower_central_series_dims(const AlgebraTable& a);

/// Dimensions of g^{[k+1]} = [g^{[k]}, g^{[k]}], same stopping rule.
std::vector<int> derived_series_dims(const AlgebraTable& a);

bool is_nilpotent(const AlgebraTable& a);
bool is_solvable(const AlgebraTable& a);

/// {x : [x, g] = 0 and [g, x] = 0}.
Subspace center(const AlgebraTable& a);
/// {x : [x, g] = 0}.
Subspace left_annihilator(const AlgebraTable& a);
/// {x : [g, x] = 0}.
Subspace right_annihilator(const AlgebraTable& a);

bool is_ideal(const AlgebraTable& a, const Subspace& s);

/// Smallest ideal containing s.
Subspace ideal_closure(const AlgebraTable& a, const Subspace& s);

/// Structure constants of a subalgebra in the coordinates of its canonical
/// basis. Requires [s, s] to lie in s.
AlgebraTable subalgebra_table(const AlgebraTable& a, const Subspace& s, const std::string& name);

/// Dimension of the derivation algebra {D : D[x,y] = [Dx,y] + [x,Dy]}.
int derivation_dim(const AlgebraTable& a);

enum class NilradicalStatus { ok, not_ideal, not_nilpotent, enlargeable };

struct NilradicalReport {
    NilradicalStatus status = NilradicalStatus::ok;
    std::string detail;
    Vec witness;  // enlarging vector when status == enlargeable
};

/// Checks that s is a nilpotent ideal and probes maximality: for every
/// complement direction, `trials` random offsets into s are tested for whether
/// adjoining them keeps the ideal closure nilpotent.
NilradicalReport verify_nilradical(const AlgebraTable& a, const Subspace& s, int trials = 16,
                                   unsigned long seed = 1);

/// Isomorphism-invariant summary used for negative certificates.
struct Fingerprint {
    int dim = 0;
    std::vector<int> lcs_dims;
    std::vector<int> derived_dims;
    int center_dim = 0;
    int left_ann_dim = 0;
    int right_ann_dim = 0;
    int derivation_dim = 0;
    bool nilpotent = false;
    bool solvable = false;

    bool operator==(const Fingerprint& rhs) const = default;
};

Fingerprint fingerprint(const AlgebraTable& a);
std::string to_string(const Fingerprint& f);

/// Relabels basis vectors: new index of old basis vector i is perm[i].
AlgebraTable permute_basis(const AlgebraTable& a, const std::vector<int>& perm);

}  // namespace leibniz
