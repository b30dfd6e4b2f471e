#pragma once

#include <optional>
#include <vector>

#include "leibniz/rational.hpp"

namespace leibniz {

using Vec = std::vector<Rational>;

/// Dense matrix over the exact rationals, row-major.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : m_rows(rows), m_cols(cols), m_data(static_cast<std::size_t>(rows) * cols) {}

    static Mat identity(int n);
    static Mat from_rows(const std::vector<Vec>& rows);

    int rows() const { return m_rows; }
    int cols() const { return m_cols; }

    Rational& at(int i, int j) { return m_data[static_cast<std::size_t>(i) * m_cols + j]; }
    const Rational& at(int i, int j) const { return m_data[static_cast<std::size_t>(i) * m_cols + j]; }

    Vec row(int i) const;
    Vec col(int j) const;
    void set_row(int i, const Vec& v);

    Mat operator*(const Mat& rhs) const;
    Mat operator+(const Mat& rhs) const;
    Mat operator-(const Mat& rhs) const;
    Mat scaled(const Rational& c) const;
    Mat transposed() const;

    /// Matrix-vector product.
    Vec apply(const Vec& v) const;

    bool is_zero() const;
    bool operator==(const Mat& rhs) const = default;

private:
    int m_rows = 0;
    int m_cols = 0;
    std::vector<Rational> m_data;
};

struct RrefResult {
    Mat mat;
    std::vector<int> pivots;  // pivot column of each nonzero row, in order
    int rank = 0;
};

/// Reduced row echelon form. Row elimination runs under OpenMP; the result is
/// identical to rref_serial (exact arithmetic, independent row updates).
RrefResult rref(const Mat& m);

/// Serial reference implementation, kept as an oracle for the parallel kernel.
RrefResult rref_serial(const Mat& m);

int rank(const Mat& m);

/// Canonical basis of the row space: the nonzero rows of the RREF.
Mat row_space(const Mat& m);

/// Canonical basis of the column space.
Mat column_space(const Mat& m);

/// Canonical basis (as rows) of {x : M x = 0}.
Mat nullspace(const Mat& m);

std::optional<Mat> inverse(const Mat& m);

/// Solves M x = b exactly; nullopt when inconsistent.
std::optional<Vec> solve(const Mat& m, const Vec& b);

/// Stacks matrices with equal column counts on top of each other.
Mat vstack(const Mat& top, const Mat& bottom);

Vec zero_vec(int n);
bool is_zero_vec(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rational& c, const Vec& v);

}  // namespace leibniz
