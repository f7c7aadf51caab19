#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "zinbiel/rational.hpp"

namespace zinbiel {

using Vec = std::vector<Rational>;

Vec zero_vec(std::size_t n);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec neg(const Vec& a);
Vec scale(const Rational& c, const Vec& a);
void add_in(Vec& a, const Vec& b);
void sub_in(Vec& a, const Vec& b);
Vec unit_vec(std::size_t n, std::size_t i);

/* Dense row-major matrix over Q. */
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n);
    /* Columns given as vectors; all must have length rows. */
    static Matrix from_columns(std::size_t rows, const std::vector<Vec>& cols);
    static Matrix from_rows(const std::vector<Vec>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    Vec apply(const Vec& x) const;     // length cols -> length rows
    Vec row(std::size_t r) const;
    Vec column(std::size_t c) const;

    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix transpose() const;
    bool operator==(const Matrix& rhs) const = default;
    bool is_zero() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    Vec a_;
};

struct RrefResult {
    Matrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

/* Gauss-Jordan with the deterministic pivot rule: columns scanned left to
 * right, pivot = first row at or below the current one with a nonzero entry. */
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/* Canonical kernel basis, one vector per free column in ascending order;
 * each has 1 in its own free coordinate and 0 in the others'. */
std::vector<Vec> kernel_basis(const Matrix& m);

/* Particular solution of m x = b with zeros in all free coordinates;
 * nullopt when inconsistent. */
std::optional<Vec> solve(const Matrix& m, const Vec& b);

/* Standard basis vectors e_j for the non-pivot columns of the span's row
 * echelon form; together with the span they generate the ambient space. */
std::vector<Vec> complement_basis(const std::vector<Vec>& span, std::size_t ambient_dim);

/* Throws domain_error when singular. */
Matrix inverse(const Matrix& m);

} // namespace zinbiel
