#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "zinbiel/linalg.hpp"

namespace zinbiel {

/* Dense multilinear array over Q, row-major (last index fastest). Holds
 * structure constants: a rank-(k+1) tensor encodes a k-linear map by
 * t.at({i_1..i_k, out}) = coefficient of basis vector `out`. */
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(std::vector<std::size_t> shape);

    const std::vector<std::size_t>& shape() const { return shape_; }
    std::size_t order() const { return shape_.size(); }
    std::size_t size() const { return a_.size(); }

    Rational& at(std::span<const std::size_t> idx);
    const Rational& at(std::span<const std::size_t> idx) const;
    Rational& at(std::initializer_list<std::size_t> idx) {
        return at(std::span<const std::size_t>(idx.begin(), idx.size()));
    }
    const Rational& at(std::initializer_list<std::size_t> idx) const {
        return at(std::span<const std::size_t>(idx.begin(), idx.size()));
    }

    Rational& flat(std::size_t i) { return a_[i]; }
    const Rational& flat(std::size_t i) const { return a_[i]; }
    std::size_t flat_index(std::span<const std::size_t> idx) const;
    std::vector<std::size_t> unflatten(std::size_t flat) const;

    bool is_zero() const;
    bool operator==(const Tensor& rhs) const = default;

    Tensor operator+(const Tensor& rhs) const;
    Tensor operator-(const Tensor& rhs) const;
    Tensor scaled(const Rational& c) const;

private:
    std::vector<std::size_t> shape_;
    std::vector<std::size_t> strides_;
    Vec a_;
};

/* Bilinear-map value: out[c] = sum over i,j of x[i] y[j] t.at({i,j,c}). */
Vec apply2(const Tensor& t, const Vec& x, const Vec& y);

/* Trilinear-map value: out[c] = sum x[i] y[j] z[k] t.at({i,j,k,c}). */
Vec apply3(const Tensor& t, const Vec& x, const Vec& y, const Vec& z);

} // namespace zinbiel
