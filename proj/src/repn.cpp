#include "leibniz/repn.hpp"

#include <cassert>

namespace leibniz {

Mat RepresentationPair::left_of(const Vec& x) const {
    Mat out(hdim, hdim);
    for (int i = 0; i < g.dim(); ++i) {
        if (x[i] != 0) out = out + left[i].scaled(x[i]);
    }
    return out;
}

Mat RepresentationPair::right_of(const Vec& x) const {
    Mat out(hdim, hdim);
    for (int i = 0; i < g.dim(); ++i) {
        if (x[i] != 0) out = out + right[i].scaled(x[i]);
    }
    return out;
}

RepresentationPair trivial_rep(const AlgebraTable& g, int hdim) {
    RepresentationPair p;
    p.g = g;
    p.hdim = hdim;
    p.left.assign(g.dim(), Mat(hdim, hdim));
    p.right.assign(g.dim(), Mat(hdim, hdim));
    return p;
}

RepresentationPair scalar_rep(const AlgebraTable& g,
                              const std::map<int, std::pair<Rational, Rational>>& scalars) {
    RepresentationPair p = trivial_rep(g, 1);
    for (const auto& [idx, lr] : scalars) {
        p.left[idx].at(0, 0) = lr.first;
        p.right[idx].at(0, 0) = lr.second;
    }
    return p;
}

std::vector<RepViolation> rep_check(const RepresentationPair& p) {
    std::vector<RepViolation> out;
    const int n = p.g.dim();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Vec& bij = p.g.product(i, j);
            const Mat r_bracket = p.right_of(bij);
            const Mat l_bracket = p.left_of(bij);
            if (!(r_bracket == p.right[j] * p.right[i] - p.right[i] * p.right[j])) {
                out.push_back({"right action law r[x,y] = r_y r_x - r_x r_y", i, j});
            }
            if (!(l_bracket == p.right[j] * p.left[i] - p.left[i] * p.right[j])) {
                out.push_back({"left action law l[x,y] = r_y l_x - l_x r_y", i, j});
            }
            if (!(p.left[i] * p.left[j] + p.left[i] * p.right[j]).is_zero()) {
                out.push_back({"left action law l_x l_y = -l_x r_y", i, j});
            }
        }
    }
    return out;
}

BilinearMap BilinearMap::from_flat(int gdim, int hdim, Vec flat) {
    BilinearMap w(gdim, hdim);
    assert(flat.size() == w.coords.size());
    w.coords = std::move(flat);
    return w;
}

Vec BilinearMap::value(int i, int j) const {
    Vec out(hdim);
    for (int t = 0; t < hdim; ++t) out[t] = at(i, j, t);
    return out;
}

Vec BilinearMap::eval(const Vec& x, const Vec& y) const {
    assert(static_cast<int>(x.size()) == gdim && static_cast<int>(y.size()) == gdim);
    Vec out = zero_vec(hdim);
    for (int i = 0; i < gdim; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < gdim; ++j) {
            if (y[j] == 0) continue;
            const Rational c = x[i] * y[j];
            for (int t = 0; t < hdim; ++t) {
                const Rational& v = at(i, j, t);
                if (v != 0) out[t] += c * v;
            }
        }
    }
    return out;
}

BilinearMap BilinearMap::scaled(const Rational& c) const {
    BilinearMap out(gdim, hdim);
    out.coords = scale(c, coords);
    return out;
}

BilinearMap BilinearMap::plus(const BilinearMap& other) const {
    assert(gdim == other.gdim && hdim == other.hdim);
    BilinearMap out(gdim, hdim);
    out.coords = add(coords, other.coords);
    return out;
}

BilinearMap BilinearMap::minus(const BilinearMap& other) const {
    assert(gdim == other.gdim && hdim == other.hdim);
    BilinearMap out(gdim, hdim);
    out.coords = sub(coords, other.coords);
    return out;
}

std::vector<CocycleViolation> cocycle_check(const RepresentationPair& p, const BilinearMap& w) {
    std::vector<CocycleViolation> out;
    const int n = p.g.dim();
    assert(w.gdim == n && w.hdim == p.hdim);
    for (int i = 0; i < n; ++i) {
        Vec ei = zero_vec(n);
        ei[i] = 1;
        for (int j = 0; j < n; ++j) {
            Vec ej = zero_vec(n);
            ej[j] = 1;
            for (int k = 0; k < n; ++k) {
                Vec ek = zero_vec(n);
                ek[k] = 1;
                Vec defect = w.eval(p.g.product(i, j), ek);
                defect = sub(defect, w.eval(ei, p.g.product(j, k)));
                defect = sub(defect, w.eval(p.g.product(i, k), ej));
                defect = sub(defect, p.left[i].apply(w.value(j, k)));
                defect = sub(defect, p.right[j].apply(w.value(i, k)));
                defect = add(defect, p.right[k].apply(w.value(i, j)));
                if (!is_zero_vec(defect)) out.push_back({i, j, k, std::move(defect)});
            }
        }
    }
    return out;
}

BilinearMap CocycleSpace::basis_map(int row) const {
    return BilinearMap::from_flat(gdim, hdim, space.basis.row(row));
}

CocycleSpace compute_Z2(const RepresentationPair& p) {
    const int n = p.g.dim();
    const int m = p.hdim;
    auto w_index = [n, m](int i, int j, int t) { return (i * n + j) * m + t; };

    // One linear constraint per basis triple (i,j,k) and output coordinate t.
    Mat sys(n * n * n * m, n * n * m);
    int row = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                for (int t = 0; t < m; ++t, ++row) {
                    for (int s = 0; s < n; ++s) {
                        const Rational& cij = p.g.product(i, j)[s];
                        if (cij != 0) sys.at(row, w_index(s, k, t)) += cij;
                        const Rational& cjk = p.g.product(j, k)[s];
                        if (cjk != 0) sys.at(row, w_index(i, s, t)) -= cjk;
                        const Rational& cik = p.g.product(i, k)[s];
                        if (cik != 0) sys.at(row, w_index(s, j, t)) -= cik;
                    }
                    for (int u = 0; u < m; ++u) {
                        const Rational& li = p.left[i].at(t, u);
                        if (li != 0) sys.at(row, w_index(j, k, u)) -= li;
                        const Rational& rj = p.right[j].at(t, u);
                        if (rj != 0) sys.at(row, w_index(i, k, u)) -= rj;
                        const Rational& rk = p.right[k].at(t, u);
                        if (rk != 0) sys.at(row, w_index(i, j, u)) += rk;
                    }
                }
            }
        }
    }
    CocycleSpace z;
    z.kind = CocycleKind::cocycles;
    z.gdim = n;
    z.hdim = m;
    z.space.ambient = n * n * m;
    z.space.basis = nullspace(sys);
    return z;
}

Mat coboundary_matrix(const RepresentationPair& p, const Mat& phi) {
    const int n = p.g.dim();
    const int m = p.hdim;
    auto w_index = [n, m](int i, int j, int t) { return (i * n + j) * m + t; };
    auto f_index = [n](int t, int q) { return t * n + q; };

    std::vector<Mat> l_phi(n, Mat(m, m));
    std::vector<Mat> r_phi(n, Mat(m, m));
    for (int i = 0; i < n; ++i) {
        l_phi[i] = p.left_of(phi.col(i));
        r_phi[i] = p.right_of(phi.col(i));
    }

    Mat d(n * n * m, n * m);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int s = 0; s < m; ++s) {
                const int row = w_index(i, j, s);
                for (int q = 0; q < n; ++q) {
                    const Rational& c = p.g.product(i, j)[q];
                    if (c != 0) d.at(row, f_index(s, q)) += c;
                }
                for (int u = 0; u < m; ++u) {
                    const Rational& lv = l_phi[i].at(s, u);
                    if (lv != 0) d.at(row, f_index(u, j)) -= lv;
                    const Rational& rv = r_phi[j].at(s, u);
                    if (rv != 0) d.at(row, f_index(u, i)) -= rv;
                }
            }
        }
    }
    return d;
}

CocycleSpace compute_B2(const RepresentationPair& p) {
    return compute_B2(p, Mat::identity(p.g.dim()));
}

CocycleSpace compute_B2(const RepresentationPair& p, const Mat& phi) {
    CocycleSpace b;
    b.kind = CocycleKind::coboundaries;
    b.gdim = p.g.dim();
    b.hdim = p.hdim;
    b.space.ambient = b.gdim * b.gdim * b.hdim;
    b.space.basis = column_space(coboundary_matrix(p, phi));
    return b;
}

BilinearMap coboundary(const RepresentationPair& p, const Mat& f, const Mat& phi) {
    const int n = p.g.dim();
    const int m = p.hdim;
    assert(f.rows() == m && f.cols() == n);
    BilinearMap w(n, m);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Vec v = f.apply(p.g.product(i, j));
            v = sub(v, p.left_of(phi.col(i)).apply(f.col(j)));
            v = sub(v, p.right_of(phi.col(j)).apply(f.col(i)));
            for (int t = 0; t < m; ++t) w.at(i, j, t) = v[t];
        }
    }
    return w;
}

Cohomology compute_H2(const RepresentationPair& p) {
    Cohomology h;
    h.z2 = compute_Z2(p);
    h.b2 = compute_B2(p);
    h.dim = h.z2.dim() - h.b2.dim();

    std::vector<Vec> residues;
    for (int i = 0; i < h.z2.dim(); ++i) {
        Vec r = h.b2.space.reduce(h.z2.space.basis.row(i));
        if (!is_zero_vec(r)) residues.push_back(std::move(r));
    }
    Subspace reduced = Subspace::span(h.z2.space.ambient, residues);
    assert(reduced.dim() == h.dim);
    for (int i = 0; i < reduced.dim(); ++i) {
        h.representatives.push_back(BilinearMap::from_flat(h.z2.gdim, h.z2.hdim, reduced.basis.row(i)));
    }
    return h;
}

}  // namespace leibniz
