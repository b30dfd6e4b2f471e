#include "leibniz/matrix.hpp"

#include <cassert>
#include <utility>

namespace leibniz {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return Mat();
    Mat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i) {
        assert(static_cast<int>(rows[i].size()) == m.cols());
        m.set_row(i, rows[i]);
    }
    return m;
}

Vec Mat::row(int i) const {
    Vec v(m_cols);
    for (int j = 0; j < m_cols; ++j) v[j] = at(i, j);
    return v;
}

Vec Mat::col(int j) const {
    Vec v(m_rows);
    for (int i = 0; i < m_rows; ++i) v[i] = at(i, j);
    return v;
}

void Mat::set_row(int i, const Vec& v) {
    for (int j = 0; j < m_cols; ++j) at(i, j) = v[j];
}

Mat Mat::operator*(const Mat& rhs) const {
    assert(m_cols == rhs.m_rows);
    Mat out(m_rows, rhs.m_cols);
    for (int i = 0; i < m_rows; ++i) {
        for (int k = 0; k < m_cols; ++k) {
            const Rational& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < rhs.m_cols; ++j) {
                const Rational& b = rhs.at(k, j);
                if (b != 0) out.at(i, j) += a * b;
            }
        }
    }
    return out;
}

Mat Mat::operator+(const Mat& rhs) const {
    assert(m_rows == rhs.m_rows && m_cols == rhs.m_cols);
    Mat out(m_rows, m_cols);
    for (int i = 0; i < m_rows; ++i)
        for (int j = 0; j < m_cols; ++j) out.at(i, j) = at(i, j) + rhs.at(i, j);
    return out;
}

Mat Mat::operator-(const Mat& rhs) const {
    assert(m_rows == rhs.m_rows && m_cols == rhs.m_cols);
    Mat out(m_rows, m_cols);
    for (int i = 0; i < m_rows; ++i)
        for (int j = 0; j < m_cols; ++j) out.at(i, j) = at(i, j) - rhs.at(i, j);
    return out;
}

Mat Mat::scaled(const Rational& c) const {
    Mat out(m_rows, m_cols);
    for (int i = 0; i < m_rows; ++i)
        for (int j = 0; j < m_cols; ++j) out.at(i, j) = c * at(i, j);
    return out;
}

Mat Mat::transposed() const {
    Mat out(m_cols, m_rows);
    for (int i = 0; i < m_rows; ++i)
        for (int j = 0; j < m_cols; ++j) out.at(j, i) = at(i, j);
    return out;
}

Vec Mat::apply(const Vec& v) const {
    assert(static_cast<int>(v.size()) == m_cols);
    Vec out(m_rows);
    for (int i = 0; i < m_rows; ++i) {
        Rational acc;
        for (int j = 0; j < m_cols; ++j) {
            if (at(i, j) != 0 && v[j] != 0) acc += at(i, j) * v[j];
        }
        out[i] = acc;
    }
    return out;
}

bool Mat::is_zero() const {
    for (int i = 0; i < m_rows; ++i)
        for (int j = 0; j < m_cols; ++j)
            if (at(i, j) != 0) return false;
    return true;
}

namespace {

// Eliminates column `col` from every row except `pivot_row`, assuming the
// pivot entry is already 1. Each row update is independent.
void eliminate_column(Mat& m, int pivot_row, int col, bool parallel) {
    const int nrows = m.rows();
    const int ncols = m.cols();
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int i = 0; i < nrows; ++i) {
        if (i == pivot_row) continue;
        const Rational factor = m.at(i, col);
        if (factor == 0) continue;
        for (int j = col; j < ncols; ++j) {
            if (m.at(pivot_row, j) != 0) m.at(i, j) -= factor * m.at(pivot_row, j);
        }
        m.at(i, col) = 0;
    }
}

RrefResult rref_impl(Mat m, bool parallel) {
    RrefResult out;
    const int nrows = m.rows();
    const int ncols = m.cols();
    int next_row = 0;
    for (int col = 0; col < ncols && next_row < nrows; ++col) {
        int pivot = -1;
        for (int i = next_row; i < nrows; ++i) {
            if (m.at(i, col) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != next_row) {
            for (int j = 0; j < ncols; ++j) std::swap(m.at(pivot, j), m.at(next_row, j));
        }
        const Rational inv = 1 / m.at(next_row, col);
        if (inv != 1) {
            for (int j = col; j < ncols; ++j) {
                if (m.at(next_row, j) != 0) m.at(next_row, j) *= inv;
            }
        }
        eliminate_column(m, next_row, col, parallel);
        out.pivots.push_back(col);
        ++next_row;
    }
    out.rank = next_row;
    out.mat = std::move(m);
    return out;
}

}  // namespace

RrefResult rref(const Mat& m) {
    // The pragma only pays off once there are enough rows to share out.
    return rref_impl(m, m.rows() >= 32);
}

RrefResult rref_serial(const Mat& m) {
    return rref_impl(m, false);
}

int rank(const Mat& m) {
    return rref(m).rank;
}

Mat row_space(const Mat& m) {
    RrefResult r = rref(m);
    Mat out(r.rank, m.cols());
    for (int i = 0; i < r.rank; ++i)
        for (int j = 0; j < m.cols(); ++j) out.at(i, j) = r.mat.at(i, j);
    return out;
}

Mat column_space(const Mat& m) {
    return row_space(m.transposed());
}

Mat nullspace(const Mat& m) {
    RrefResult r = rref(m);
    const int ncols = m.cols();
    std::vector<bool> is_pivot(ncols, false);
    for (int p : r.pivots) is_pivot[p] = true;

    std::vector<Vec> basis;
    for (int free_col = 0; free_col < ncols; ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec v(ncols);
        v[free_col] = 1;
        for (int i = 0; i < r.rank; ++i) {
            const int p = r.pivots[i];
            v[p] = -r.mat.at(i, free_col);
        }
        basis.push_back(std::move(v));
    }
    if (basis.empty()) return Mat(0, ncols);
    // Re-reduce so the basis is canonical regardless of free-column order.
    return row_space(Mat::from_rows(basis));
}

std::optional<Mat> inverse(const Mat& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const int n = m.rows();
    Mat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    RrefResult r = rref(aug);
    for (int i = 0; i < n; ++i) {
        if (i >= static_cast<int>(r.pivots.size()) || r.pivots[i] != i) return std::nullopt;
    }
    Mat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = r.mat.at(i, n + j);
    return inv;
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
    assert(static_cast<int>(b.size()) == m.rows());
    Mat aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    RrefResult r = rref(aug);
    Vec x(m.cols());
    for (int i = 0; i < r.rank; ++i) {
        if (r.pivots[i] == m.cols()) return std::nullopt;  // row (0 ... 0 | 1)
        x[r.pivots[i]] = r.mat.at(i, m.cols());
    }
    return x;
}

Mat vstack(const Mat& top, const Mat& bottom) {
    if (top.rows() == 0) return bottom;
    if (bottom.rows() == 0) return top;
    assert(top.cols() == bottom.cols());
    Mat out(top.rows() + bottom.rows(), top.cols());
    for (int i = 0; i < top.rows(); ++i)
        for (int j = 0; j < top.cols(); ++j) out.at(i, j) = top.at(i, j);
    for (int i = 0; i < bottom.rows(); ++i)
        for (int j = 0; j < top.cols(); ++j) out.at(top.rows() + i, j) = bottom.at(i, j);
    return out;
}

Vec zero_vec(int n) {
    return Vec(static_cast<std::size_t>(n));
}

bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

Vec add(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Vec sub(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Vec scale(const Rational& c, const Vec& v) {
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
    return out;
}

}  // namespace leibniz
