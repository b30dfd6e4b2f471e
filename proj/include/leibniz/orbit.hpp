#pragma once

#include <functional>
#include <optional>

#include "leibniz/extension.hpp"

namespace leibniz {

struct Automorphism {
    AlgebraTable algebra;
    Mat matrix;  // column j = image of basis vector j
};

struct MapCheck {
    bool ok = false;
    bool invertible = false;
    std::vector<std::pair<int, int>> violations;  // basis pairs breaking the bracket

    explicit operator bool() const { return ok; }
};

/// True iff m is invertible and m[b_i, b_j]_a = [m b_i, m b_j]_b for all pairs.
MapCheck verify_isomorphism(const AlgebraTable& a, const AlgebraTable& b, const Mat& m);

/// verify_isomorphism of an algebra with itself.
MapCheck verify_automorphism(const AlgebraTable& a, const Mat& m);

/// A cocycle together with the action pair it is a cocycle for.
struct OrbitElement {
    BilinearMap omega;
    RepresentationPair rep;
};

/// The change-of-data action: omega'(x,y) = psi(omega(phi x, phi y)),
/// l'_x = psi l_{phi x} psi^{-1}, r'_x = psi r_{phi x} psi^{-1}.
OrbitElement act(const OrbitElement& el, const Mat& phi, const Mat& psi);
/// One-dimensional h: psi is the scalar lambda.
OrbitElement act(const OrbitElement& el, const Mat& phi, const Rational& lambda);

/// Parameterized automorphism family of a fixed algebra.
struct AutFamily {
    std::string name;
    AlgebraTable algebra;
    int param_count = 0;
    /// Returns the matrix at the given parameter point, or nullopt when the
    /// point is outside the family's domain (vanishing denominators etc.).
    std::function<std::optional<Mat>(const std::vector<Rational>&)> instantiate;
    /// Candidate values searched for each parameter during normalization; an
    /// empty list means "derive candidates from the element being normalized".
    std::vector<std::vector<Rational>> search_values;
};

struct NormalizeTarget {
    RepresentationPair rep;
    BilinearMap omega;
};

struct NormalizeWitness {
    std::vector<Rational> params;
    Rational lambda;
};

struct NormalizeResult {
    bool matched = false;
    int target_index = -1;
    NormalizeWitness witness;
    Mat phi;
    Mat f;  // hdim x gdim map with d f closing the gap modulo nothing
    bool needed_coboundary = false;
    OrbitElement transformed;

    explicit operator bool() const { return matched; }
};

/// Searches the family (preferred witnesses first, then a bounded rational
/// grid) for (phi, lambda) carrying el onto one of the targets: the
/// transformed action pair must equal the target's exactly and the
/// transformed cocycle must equal the target cocycle modulo coboundaries of
/// the target pair. On success the residual coboundary's potential f is
/// solved for explicitly. A miss is inconclusive, never a disproof.
NormalizeResult normalize_in_orbit(const OrbitElement& el, const AutFamily& family,
                                   const std::vector<NormalizeTarget>& targets,
                                   const std::vector<NormalizeWitness>& preferred = {});

/// The explicit block isomorphism built(el-spec) -> built(target-spec) induced
/// by a normalization witness: x + a |-> phi^{-1} x + f(phi^{-1} x) + lambda a.
Mat isomorphism_from_witness(const Mat& phi, const Rational& lambda, const Mat& f);

struct NonIsoCertificate {
    bool distinct = false;
    std::string field;  // first fingerprint field that differs
    Fingerprint left, right;
};

/// Fingerprint comparison: a differing field certifies non-isomorphism;
/// agreement certifies nothing.
NonIsoCertificate nonisomorphism_certificate(const AlgebraTable& a, const AlgebraTable& b);

}  // namespace leibniz
