#include "leibniz/algebra.hpp"

#include <cassert>
#include <sstream>

namespace leibniz {

namespace {

Vec unit(int n, int k) {
    Vec v = zero_vec(n);
    v[k] = 1;
    return v;
}

}  // namespace

Vec AlgebraTable::bracket(const Vec& u, const Vec& v) const {
    const int n = dim();
    assert(static_cast<int>(u.size()) == n && static_cast<int>(v.size()) == n);
    Vec out = zero_vec(n);
    for (int i = 0; i < n; ++i) {
        if (u[i] == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (v[j] == 0) continue;
            const Rational c = u[i] * v[j];
            const Vec& p = products[i][j];
            for (int k = 0; k < n; ++k) {
                if (p[k] != 0) out[k] += c * p[k];
            }
        }
    }
    return out;
}

int AlgebraTable::index_of(const std::string& label) const {
    for (int i = 0; i < dim(); ++i)
        if (basis[i] == label) return i;
    return -1;
}

AlgebraTable make_algebra(const std::string& name, const std::vector<std::string>& labels) {
    AlgebraTable a;
    a.name = name;
    a.basis = labels;
    const int n = a.dim();
    a.products.assign(n, std::vector<Vec>(n, zero_vec(n)));
    return a;
}

std::vector<TripleViolation> leibniz_check(const AlgebraTable& a) {
    std::vector<TripleViolation> out;
    const int n = a.dim();
    for (int i = 0; i < n; ++i) {
        const Vec ei = unit(n, i);
        for (int j = 0; j < n; ++j) {
            const Vec ej = unit(n, j);
            for (int k = 0; k < n; ++k) {
                const Vec ek = unit(n, k);
                Vec defect = a.bracket(a.product(i, j), ek);
                defect = sub(defect, a.bracket(ei, a.product(j, k)));
                defect = sub(defect, a.bracket(a.product(i, k), ej));
                if (!is_zero_vec(defect)) {
                    out.push_back({i, j, k, std::move(defect)});
                }
            }
        }
    }
    return out;
}

Subspace product_space(const AlgebraTable& a, const Subspace& A, const Subspace& B) {
    std::vector<Vec> gens;
    for (int i = 0; i < A.basis.rows(); ++i) {
        for (int j = 0; j < B.basis.rows(); ++j) {
            Vec p = a.bracket(A.basis.row(i), B.basis.row(j));
            if (!is_zero_vec(p)) gens.push_back(std::move(p));
        }
    }
    return Subspace::span(a.dim(), gens);
}

namespace {

std::vector<int> series_dims(const AlgebraTable& a, bool derived) {
    const Subspace whole = Subspace::full(a.dim());
    std::vector<int> dims{a.dim()};
    Subspace current = whole;
    for (;;) {
        Subspace next = derived ? product_space(a, current, current) : product_space(a, current, whole);
        dims.push_back(next.dim());
        if (next.dim() == 0) break;
        if (next.dim() == current.dim()) break;  // stabilized above zero
        current = std::move(next);
    }
    return dims;
}

}  // namespace

std::vector<int> lower_central_series_dims(const AlgebraTable& a) {
    return series_dims(a, false);
}

std::vector<int> derived_series_dims(const AlgebraTable& a) {
    return series_dims(a, true);
}

bool is_nilpotent(const AlgebraTable& a) {
    return lower_central_series_dims(a).back() == 0;
}

bool is_solvable(const AlgebraTable& a) {
    return derived_series_dims(a).back() == 0;
}

namespace {

// Rows of the constraint system expressing [x, b_j] = 0 for all j
// (use_left) and/or [b_j, x] = 0 for all j (use_right).
Subspace annihilator(const AlgebraTable& a, bool use_left, bool use_right) {
    const int n = a.dim();
    std::vector<Vec> rows;
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            if (use_left) {
                Vec row(n);
                for (int i = 0; i < n; ++i) row[i] = a.product(i, j)[k];
                rows.push_back(std::move(row));
            }
            if (use_right) {
                Vec row(n);
                for (int i = 0; i < n; ++i) row[i] = a.product(j, i)[k];
                rows.push_back(std::move(row));
            }
        }
    }
    Mat sys = Mat::from_rows(rows);
    Subspace s;
    s.ambient = n;
    s.basis = nullspace(sys);
    return s;
}

}  // namespace

Subspace center(const AlgebraTable& a) {
    return annihilator(a, true, true);
}

Subspace left_annihilator(const AlgebraTable& a) {
    return annihilator(a, true, false);
}

Subspace right_annihilator(const AlgebraTable& a) {
    return annihilator(a, false, true);
}

bool is_ideal(const AlgebraTable& a, const Subspace& s) {
    const Subspace whole = Subspace::full(a.dim());
    return s.contains(product_space(a, s, whole)) && s.contains(product_space(a, whole, s));
}

Subspace ideal_closure(const AlgebraTable& a, const Subspace& s) {
    const Subspace whole = Subspace::full(a.dim());
    Subspace current = s;
    for (;;) {
        Subspace next = current.sum(product_space(a, current, whole)).sum(product_space(a, whole, current));
        if (next.dim() == current.dim()) return current;
        current = std::move(next);
    }
}

AlgebraTable subalgebra_table(const AlgebraTable& a, const Subspace& s, const std::string& name) {
    const int d = s.dim();
    std::vector<std::string> labels;
    for (int i = 0; i < d; ++i) labels.push_back("s" + std::to_string(i + 1));
    AlgebraTable sub = make_algebra(name, labels);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            Vec p = a.bracket(s.basis.row(i), s.basis.row(j));
            sub.set_product(i, j, s.coordinates(p));
        }
    }
    return sub;
}

int derivation_dim(const AlgebraTable& a) {
    // Unknown D with columns D(b_q) = sum_p D[p][q] b_p; one equation per
    // basis pair (i,j) and output coordinate k:
    //   sum_t c_ij^t D[k][t] - sum_p D[p][i] c_pj^k - sum_p D[p][j] c_ip^k = 0.
    const int n = a.dim();
    Mat sys(n * n * n, n * n);
    auto var = [n](int p, int q) { return p * n + q; };
    int row = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k, ++row) {
                for (int t = 0; t < n; ++t) {
                    const Rational& c = a.product(i, j)[t];
                    if (c != 0) sys.at(row, var(k, t)) += c;
                }
                for (int p = 0; p < n; ++p) {
                    const Rational& c1 = a.product(p, j)[k];
                    if (c1 != 0) sys.at(row, var(p, i)) -= c1;
                    const Rational& c2 = a.product(i, p)[k];
                    if (c2 != 0) sys.at(row, var(p, j)) -= c2;
                }
            }
        }
    }
    return nullspace(sys).rows();
}

NilradicalReport verify_nilradical(const AlgebraTable& a, const Subspace& s, int trials,
                                   unsigned long seed) {
    NilradicalReport report;
    const int n = a.dim();
    if (!is_ideal(a, s)) {
        report.status = NilradicalStatus::not_ideal;
        report.detail = "claimed subspace is not an ideal";
        return report;
    }
    if (!is_nilpotent(subalgebra_table(a, s, "claimed"))) {
        report.status = NilradicalStatus::not_nilpotent;
        report.detail = "claimed ideal is not nilpotent";
        return report;
    }
    // Maximality probe: adjoin a perturbed complement direction and test
    // whether its ideal closure together with s stays nilpotent.
    RationalSampler sampler(seed);
    for (int d = 0; d < n; ++d) {
        if (s.contains([&] {
                Vec v = zero_vec(n);
                v[d] = 1;
                return v;
            }())) {
            continue;
        }
        for (int t = 0; t < trials; ++t) {
            Vec candidate = zero_vec(n);
            candidate[d] = 1;
            for (int i = 0; i < s.basis.rows(); ++i) {
                const Rational c = sampler.next();
                if (c == 0) continue;
                for (int j = 0; j < n; ++j) candidate[j] += c * s.basis.at(i, j);
            }
            Subspace enlarged = ideal_closure(a, s.sum(Subspace::span(n, {candidate})));
            if (is_nilpotent(subalgebra_table(a, enlarged, "enlarged"))) {
                report.status = NilradicalStatus::enlargeable;
                report.detail = "nilpotent ideal extends the claimed one";
                report.witness = candidate;
                return report;
            }
        }
    }
    return report;
}

Fingerprint fingerprint(const AlgebraTable& a) {
    Fingerprint f;
    f.dim = a.dim();
    f.lcs_dims = lower_central_series_dims(a);
    f.derived_dims = derived_series_dims(a);
    f.center_dim = center(a).dim();
    f.left_ann_dim = left_annihilator(a).dim();
    f.right_ann_dim = right_annihilator(a).dim();
    f.derivation_dim = leibniz::derivation_dim(a);
    f.nilpotent = f.lcs_dims.back() == 0;
    f.solvable = f.derived_dims.back() == 0;
    return f;
}

std::string to_string(const Fingerprint& f) {
    std::ostringstream os;
    auto list = [&os](const std::vector<int>& v) {
        os << "[";
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
        os << "]";
    };
    os << "dim=" << f.dim << " lcs=";
    list(f.lcs_dims);
    os << " derived=";
    list(f.derived_dims);
    os << " center=" << f.center_dim << " left_ann=" << f.left_ann_dim
       << " right_ann=" << f.right_ann_dim << " der=" << f.derivation_dim
       << " nilpotent=" << (f.nilpotent ? "yes" : "no") << " solvable=" << (f.solvable ? "yes" : "no");
    return os.str();
}

AlgebraTable permute_basis(const AlgebraTable& a, const std::vector<int>& perm) {
    const int n = a.dim();
    assert(static_cast<int>(perm.size()) == n);
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[perm[i]] = a.basis[i];
    AlgebraTable out = make_algebra(a.name, labels);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                out.products[perm[i]][perm[j]][perm[k]] = a.product(i, j)[k];
            }
        }
    }
    return out;
}

}  // namespace leibniz
