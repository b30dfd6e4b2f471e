#include "leibniz/orbit.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace leibniz {

MapCheck verify_isomorphism(const AlgebraTable& a, const AlgebraTable& b, const Mat& m) {
    MapCheck c;
    if (a.dim() != b.dim() || m.rows() != a.dim() || m.cols() != a.dim()) return c;
    c.invertible = inverse(m).has_value();
    for (int i = 0; i < a.dim(); ++i) {
        for (int j = 0; j < a.dim(); ++j) {
            Vec lhs = m.apply(a.product(i, j));
            Vec rhs = b.bracket(m.col(i), m.col(j));
            if (lhs != rhs) c.violations.emplace_back(i, j);
        }
    }
    c.ok = c.invertible && c.violations.empty();
    return c;
}

MapCheck verify_automorphism(const AlgebraTable& a, const Mat& m) {
    return verify_isomorphism(a, a, m);
}

OrbitElement act(const OrbitElement& el, const Mat& phi, const Mat& psi) {
    const int n = el.rep.g.dim();
    const int m = el.rep.hdim;
    auto psi_inv = inverse(psi);
    assert(psi_inv.has_value());

    OrbitElement out;
    out.rep.g = el.rep.g;
    out.rep.hdim = m;
    out.rep.left.reserve(n);
    out.rep.right.reserve(n);
    out.omega = BilinearMap(n, m);
    for (int i = 0; i < n; ++i) {
        Vec pi = phi.col(i);
        out.rep.left.push_back(psi * el.rep.left_of(pi) * *psi_inv);
        out.rep.right.push_back(psi * el.rep.right_of(pi) * *psi_inv);
        for (int j = 0; j < n; ++j) {
            Vec w = psi.apply(el.omega.eval(pi, phi.col(j)));
            for (int t = 0; t < m; ++t) out.omega.at(i, j, t) = w[t];
        }
    }
    return out;
}

OrbitElement act(const OrbitElement& el, const Mat& phi, const Rational& lambda) {
    Mat psi(el.rep.hdim, el.rep.hdim);
    for (int t = 0; t < el.rep.hdim; ++t) psi.at(t, t) = lambda;
    return act(el, phi, psi);
}

namespace {

// Candidate parameter values derived from the element: a default grid plus
// the element's nonzero coefficients and their inverses.
std::vector<Rational> derived_candidates(const OrbitElement& el) {
    std::set<Rational> vals{rat(1), rat(-1), rat(2), rat(-2), rat(1, 2), rat(-1, 2),
                            rat(3), rat(-3), rat(1, 3), rat(-1, 3)};
    for (const Rational& c : el.omega.coords) {
        if (c == 0) continue;
        vals.insert(c);
        vals.insert(-c);
        vals.insert(1 / c);
        vals.insert(-1 / c);
    }
    return {vals.begin(), vals.end()};
}

}  // namespace

NormalizeResult normalize_in_orbit(const OrbitElement& el, const AutFamily& family,
                                   const std::vector<NormalizeTarget>& targets,
                                   const std::vector<NormalizeWitness>& preferred) {
    NormalizeResult res;
    const int n = el.rep.g.dim();
    const int m = el.rep.hdim;
    assert(m == 1 && "normalization search is implemented for one-dimensional h");

    std::vector<CocycleSpace> target_b2;
    target_b2.reserve(targets.size());
    for (const auto& t : targets) target_b2.push_back(compute_B2(t.rep));

    auto try_witness = [&](const std::vector<Rational>& params, const Rational& lambda) -> bool {
        if (lambda == 0) return false;
        auto phi = family.instantiate(params);
        if (!phi) return false;
        if (!inverse(*phi)) return false;
        OrbitElement moved = act(el, *phi, lambda);
        for (std::size_t ti = 0; ti < targets.size(); ++ti) {
            if (moved.rep != targets[ti].rep) continue;
            BilinearMap delta = targets[ti].omega.minus(moved.omega);
            if (!is_zero_vec(target_b2[ti].space.reduce(delta.coords))) continue;
            res.matched = true;
            res.target_index = static_cast<int>(ti);
            res.witness = {params, lambda};
            res.phi = *phi;
            res.transformed = moved;
            res.needed_coboundary = !delta.is_zero();
            if (res.needed_coboundary) {
                auto fv = solve(coboundary_matrix(targets[ti].rep, Mat::identity(n)), delta.coords);
                assert(fv.has_value());
                Mat f(m, n);
                for (int t = 0; t < m; ++t)
                    for (int q = 0; q < n; ++q) f.at(t, q) = (*fv)[t * n + q];
                res.f = f;
            } else {
                res.f = Mat(m, n);
            }
            return true;
        }
        return false;
    };

    for (const auto& w : preferred) {
        if (static_cast<int>(w.params.size()) == family.param_count && try_witness(w.params, w.lambda))
            return res;
    }

    std::vector<Rational> dynamic = derived_candidates(el);
    std::vector<const std::vector<Rational>*> pools;
    std::vector<std::vector<Rational>> storage(family.param_count);
    for (int i = 0; i < family.param_count; ++i) {
        if (i < static_cast<int>(family.search_values.size()) && !family.search_values[i].empty())
            storage[i] = family.search_values[i];
        else
            storage[i] = dynamic;
        pools.push_back(&storage[i]);
    }

    std::vector<Rational> point(family.param_count);
    std::function<bool(int)> descend = [&](int depth) -> bool {
        if (depth == family.param_count) {
            for (const Rational& lambda : dynamic)
                if (try_witness(point, lambda)) return true;
            return false;
        }
        for (const Rational& v : *pools[depth]) {
            point[depth] = v;
            if (descend(depth + 1)) return true;
        }
        return false;
    };
    descend(0);
    return res;
}

Mat isomorphism_from_witness(const Mat& phi, const Rational& lambda, const Mat& f) {
    const int n = phi.rows();
    const int m = f.rows();
    auto phi_inv = inverse(phi);
    assert(phi_inv.has_value());
    Mat fpi = f * *phi_inv;
    Mat iso(n + m, n + m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) iso.at(i, j) = phi_inv->at(i, j);
    for (int t = 0; t < m; ++t)
        for (int j = 0; j < n; ++j) iso.at(n + t, j) = fpi.at(t, j);
    for (int t = 0; t < m; ++t) iso.at(n + t, n + t) = lambda;
    return iso;
}

NonIsoCertificate nonisomorphism_certificate(const AlgebraTable& a, const AlgebraTable& b) {
    NonIsoCertificate c;
    c.left = fingerprint(a);
    c.right = fingerprint(b);
    auto differ = [&c](bool d, const std::string& name) {
        if (d && !c.distinct) {
            c.distinct = true;
            c.field = name;
        }
    };
    differ(c.left.dim != c.right.dim, "dim");
    differ(c.left.lcs_dims != c.right.lcs_dims, "lower_central_series");
    differ(c.left.derived_dims != c.right.derived_dims, "derived_series");
    differ(c.left.center_dim != c.right.center_dim, "center_dim");
    differ(c.left.left_ann_dim != c.right.left_ann_dim, "left_annihilator_dim");
    differ(c.left.right_ann_dim != c.right.right_ann_dim, "right_annihilator_dim");
    differ(c.left.derivation_dim != c.right.derivation_dim, "derivation_dim");
    differ(c.left.nilpotent != c.right.nilpotent, "nilpotent");
    differ(c.left.solvable != c.right.solvable, "solvable");
    return c;
}

}  // namespace leibniz
