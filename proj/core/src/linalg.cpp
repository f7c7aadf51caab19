#include "zinbiel/linalg.hpp"

#include <utility>

#include "zinbiel/errors.hpp"

namespace zinbiel {

Vec zero_vec(std::size_t n) { return Vec(n); }

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!is_zero(x)) return false;
    return true;
}

Vec add(const Vec& a, const Vec& b) {
    Vec r = a;
    add_in(r, b);
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    Vec r = a;
    sub_in(r, b);
    return r;
}

Vec neg(const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

Vec scale(const Rational& c, const Vec& a) {
    Vec r(a.size());
    if (is_zero(c)) return r;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!is_zero(a[i])) r[i] = c * a[i];
    return r;
}

void add_in(Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw domain_error("vector length mismatch");
    for (std::size_t i = 0; i < b.size(); ++i)
        if (!is_zero(b[i])) a[i] += b[i];
}

void sub_in(Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw domain_error("vector length mismatch");
    for (std::size_t i = 0; i < b.size(); ++i)
        if (!is_zero(b[i])) a[i] -= b[i];
}

Vec unit_vec(std::size_t n, std::size_t i) {
    Vec r(n);
    r[i] = 1;
    return r;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vec>& cols) {
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw domain_error("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
    }
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols()) throw domain_error("row length mismatch");
        for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

Vec Matrix::apply(const Vec& x) const {
    if (x.size() != cols_) throw domain_error("matrix apply: length mismatch");
    Vec y(rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (zinbiel::is_zero(x[c])) continue;
        for (std::size_t r = 0; r < rows_; ++r) {
            const Rational& m = at(r, c);
            if (!zinbiel::is_zero(m)) y[r] += m * x[c];
        }
    }
    return y;
}

Vec Matrix::row(std::size_t r) const {
    Vec v(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
}

Vec Matrix::column(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw domain_error("matrix product: shape mismatch");
    Matrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (zinbiel::is_zero(a)) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const Rational& b = rhs.at(k, j);
                if (!zinbiel::is_zero(b)) out.at(i, j) += a * b;
            }
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw domain_error("matrix sum: shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (!zinbiel::is_zero(rhs.a_[i])) out.a_[i] += rhs.a_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw domain_error("matrix difference: shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (!zinbiel::is_zero(rhs.a_[i])) out.a_[i] -= rhs.a_[i];
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
    return out;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!zinbiel::is_zero(x)) return false;
    return true;
}

RrefResult rref(const Matrix& m) {
    RrefResult res;
    res.reduced = m;
    Matrix& a = res.reduced;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols && lead < rows; ++col) {
        std::size_t piv = lead;
        while (piv < rows && is_zero(a.at(piv, col))) ++piv;
        if (piv == rows) continue;
        if (piv != lead)
            for (std::size_t c = col; c < cols; ++c) std::swap(a.at(piv, c), a.at(lead, c));
        const Rational inv = 1 / a.at(lead, col);
        for (std::size_t c = col; c < cols; ++c)
            if (!is_zero(a.at(lead, c))) a.at(lead, c) *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == lead) continue;
            const Rational f = a.at(r, col);
            if (is_zero(f)) continue;
            for (std::size_t c = col; c < cols; ++c) {
                const Rational& src = a.at(lead, c);
                if (!is_zero(src)) a.at(r, c) -= f * src;
            }
        }
        res.pivot_cols.push_back(col);
        ++lead;
    }
    res.rank = res.pivot_cols.size();
    return res;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::vector<Vec> kernel_basis(const Matrix& m) {
    const RrefResult rr = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : rr.pivot_cols) is_pivot[p] = true;

    std::vector<Vec> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vec v(cols);
        v[f] = 1;
        for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i)
            v[rr.pivot_cols[i]] = -rr.reduced.at(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (b.size() != m.rows()) throw domain_error("solve: length mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = b[r];
    }
    const RrefResult rr = rref(aug);
    if (!rr.pivot_cols.empty() && rr.pivot_cols.back() == m.cols()) return std::nullopt;
    Vec x(m.cols());
    for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i)
        x[rr.pivot_cols[i]] = rr.reduced.at(i, m.cols());
    return x;
}

std::vector<Vec> complement_basis(const std::vector<Vec>& span, std::size_t ambient_dim) {
    for (const Vec& v : span)
        if (v.size() != ambient_dim) throw domain_error("complement_basis: length mismatch");
    std::vector<bool> is_pivot(ambient_dim, false);
    if (!span.empty()) {
        const RrefResult rr = rref(Matrix::from_rows(span));
        for (std::size_t p : rr.pivot_cols) is_pivot[p] = true;
    }
    std::vector<Vec> out;
    for (std::size_t j = 0; j < ambient_dim; ++j)
        if (!is_pivot[j]) out.push_back(unit_vec(ambient_dim, j));
    return out;
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw domain_error("inverse: not square");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = 1;
    }
    const RrefResult rr = rref(aug);
    if (rr.rank < n || rr.pivot_cols[n - 1] != n - 1) throw domain_error("inverse: singular matrix");
    Matrix out(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out.at(r, c) = rr.reduced.at(r, n + c);
    return out;
}

} // namespace zinbiel
