#include "zinbiel/tensor.hpp"

#include "zinbiel/errors.hpp"

namespace zinbiel {

Tensor::Tensor(std::vector<std::size_t> shape) : shape_(std::move(shape)) {
    strides_.assign(shape_.size(), 1);
    std::size_t total = 1;
    for (std::size_t k = shape_.size(); k-- > 0;) {
        strides_[k] = total;
        total *= shape_[k];
    }
    a_.assign(total, Rational());
}

std::size_t Tensor::flat_index(std::span<const std::size_t> idx) const {
    if (idx.size() != shape_.size()) throw domain_error("tensor index arity mismatch");
    std::size_t f = 0;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (idx[k] >= shape_[k]) throw domain_error("tensor index out of range");
        f += idx[k] * strides_[k];
    }
    return f;
}

Rational& Tensor::at(std::span<const std::size_t> idx) { return a_[flat_index(idx)]; }
const Rational& Tensor::at(std::span<const std::size_t> idx) const { return a_[flat_index(idx)]; }

std::vector<std::size_t> Tensor::unflatten(std::size_t flat) const {
    std::vector<std::size_t> idx(shape_.size());
    for (std::size_t k = 0; k < shape_.size(); ++k) {
        idx[k] = flat / strides_[k];
        flat %= strides_[k];
    }
    return idx;
}

bool Tensor::is_zero() const {
    for (const auto& x : a_)
        if (!zinbiel::is_zero(x)) return false;
    return true;
}

Tensor Tensor::operator+(const Tensor& rhs) const {
    if (shape_ != rhs.shape_) throw domain_error("tensor sum: shape mismatch");
    Tensor out = *this;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (!zinbiel::is_zero(rhs.a_[i])) out.a_[i] += rhs.a_[i];
    return out;
}

Tensor Tensor::operator-(const Tensor& rhs) const {
    if (shape_ != rhs.shape_) throw domain_error("tensor difference: shape mismatch");
    Tensor out = *this;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (!zinbiel::is_zero(rhs.a_[i])) out.a_[i] -= rhs.a_[i];
    return out;
}

Tensor Tensor::scaled(const Rational& c) const {
    Tensor out(shape_);
    if (zinbiel::is_zero(c)) return out;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (!zinbiel::is_zero(a_[i])) out.a_[i] = c * a_[i];
    return out;
}

Vec apply2(const Tensor& t, const Vec& x, const Vec& y) {
    const auto& s = t.shape();
    if (s.size() != 3) throw domain_error("apply2: tensor order must be 3");
    if (x.size() != s[0] || y.size() != s[1]) throw domain_error("apply2: length mismatch");
    Vec out(s[2]);
    for (std::size_t i = 0; i < s[0]; ++i) {
        if (is_zero(x[i])) continue;
        for (std::size_t j = 0; j < s[1]; ++j) {
            if (is_zero(y[j])) continue;
            const Rational xy = x[i] * y[j];
            for (std::size_t c = 0; c < s[2]; ++c) {
                const Rational& v = t.at({i, j, c});
                if (!is_zero(v)) out[c] += xy * v;
            }
        }
    }
    return out;
}

Vec apply3(const Tensor& t, const Vec& x, const Vec& y, const Vec& z) {
    const auto& s = t.shape();
    if (s.size() != 4) throw domain_error("apply3: tensor order must be 4");
    if (x.size() != s[0] || y.size() != s[1] || z.size() != s[2])
        throw domain_error("apply3: length mismatch");
    Vec out(s[3]);
    for (std::size_t i = 0; i < s[0]; ++i) {
        if (is_zero(x[i])) continue;
        for (std::size_t j = 0; j < s[1]; ++j) {
            if (is_zero(y[j])) continue;
            const Rational xy = x[i] * y[j];
            for (std::size_t k = 0; k < s[2]; ++k) {
                if (is_zero(z[k])) continue;
                const Rational xyz = xy * z[k];
                for (std::size_t c = 0; c < s[3]; ++c) {
                    const Rational& v = t.at({i, j, k, c});
                    if (!is_zero(v)) out[c] += xyz * v;
                }
            }
        }
    }
    return out;
}

} // namespace zinbiel
