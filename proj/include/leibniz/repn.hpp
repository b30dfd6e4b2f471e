#pragma once

#include <map>

#include "leibniz/algebra.hpp"

namespace leibniz {

/// Pair of linear actions l, r : g -> End(h) making h a bimodule over g.
/// left[i] and right[i] are the actions of basis vector b_i.
struct RepresentationPair {
    AlgebraTable g;
    int hdim = 0;
    std::vector<Mat> left;
    std::vector<Mat> right;

    Mat left_of(const Vec& x) const;
    Mat right_of(const Vec& x) const;

    bool operator==(const RepresentationPair& rhs) const = default;
};

/// Rep with l = r = 0.
RepresentationPair trivial_rep(const AlgebraTable& g, int hdim);

/// Rep where designated basis vectors act by scalars on a 1-dimensional h.
/// scalars maps a g-basis index to its (left, right) pair; all others act by 0.
RepresentationPair scalar_rep(const AlgebraTable& g,
                              const std::map<int, std::pair<Rational, Rational>>& scalars);

struct RepViolation {
    std::string identity;  // human-readable statement of the failed law
    int i = 0, j = 0;
};

/// Checks the bimodule laws on all basis pairs:
///   r_{[x,y]} = r_y r_x - r_x r_y,
///   l_{[x,y]} = r_y l_x - l_x r_y,
///   l_x l_y   = -l_x r_y.
std::vector<RepViolation> rep_check(const RepresentationPair& p);

/// Bilinear map g x g -> h, coordinates indexed by (i, j, t).
struct BilinearMap {
    int gdim = 0;
    int hdim = 0;
    Vec coords;  // size gdim * gdim * hdim

    BilinearMap() = default;
    BilinearMap(int gdim_, int hdim_)
        : gdim(gdim_), hdim(hdim_), coords(zero_vec(gdim_ * gdim_ * hdim_)) {}

    static BilinearMap from_flat(int gdim, int hdim, Vec flat);

    int index(int i, int j, int t) const { return (i * gdim + j) * hdim + t; }
    Rational& at(int i, int j, int t) { return coords[index(i, j, t)]; }
    const Rational& at(int i, int j, int t) const { return coords[index(i, j, t)]; }

    /// Value on basis pair (i, j) as an h-vector.
    Vec value(int i, int j) const;
    /// Bilinear extension.
    Vec eval(const Vec& x, const Vec& y) const;

    BilinearMap scaled(const Rational& c) const;
    BilinearMap plus(const BilinearMap& other) const;
    BilinearMap minus(const BilinearMap& other) const;
    bool is_zero() const { return is_zero_vec(coords); }

    bool operator==(const BilinearMap& rhs) const = default;
};

struct CocycleViolation {
    int i = 0, j = 0, k = 0;
    Vec defect;
};

/// Checks the 2-cocycle identity
///   w([x,y],z) - w(x,[y,z]) - w([x,z],y) - l_x w(y,z) - r_y w(x,z) + r_z w(x,y) = 0
/// on all basis triples.
std::vector<CocycleViolation> cocycle_check(const RepresentationPair& p, const BilinearMap& w);

enum class CocycleKind { cocycles, coboundaries };

struct CocycleSpace {
    CocycleKind kind = CocycleKind::cocycles;
    int gdim = 0;
    int hdim = 0;
    Subspace space;  // ambient gdim * gdim * hdim

    int dim() const { return space.dim(); }
    BilinearMap basis_map(int row) const;
};

/// Solution space of the 2-cocycle identity.
CocycleSpace compute_Z2(const RepresentationPair& p);

/// Image of f |-> df with df(x,y) = f([x,y]) - l_{phi(x)} f(y) - r_{phi(y)} f(x),
/// f ranging over Hom(g, h). phi defaults to the identity.
CocycleSpace compute_B2(const RepresentationPair& p);
CocycleSpace compute_B2(const RepresentationPair& p, const Mat& phi);

/// Matrix of f |-> df as a linear map Q^(hdim*gdim) -> Q^(gdim*gdim*hdim),
/// where f(b_q) = sum_t F[t][q] h_t is flattened as f_flat[t*gdim+q].
Mat coboundary_matrix(const RepresentationPair& p, const Mat& phi);

/// The coboundary of a specific f (hdim x gdim matrix), with twist phi.
BilinearMap coboundary(const RepresentationPair& p, const Mat& f, const Mat& phi);

struct Cohomology {
    CocycleSpace z2;
    CocycleSpace b2;
    int dim = 0;                           // dim Z2 - dim B2
    std::vector<BilinearMap> representatives;  // canonical, one per H2 dimension
};

/// Z2, B2 (phi = id) and canonical representatives of the quotient: the
/// nonzero residues of the Z2 basis after reduction mod B2, re-canonicalized.
Cohomology compute_H2(const RepresentationPair& p);

}  // namespace leibniz
