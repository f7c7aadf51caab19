#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>

#include "zinbiel/algebra.hpp"
#include "zinbiel/linalg.hpp"
#include "zinbiel/tensor.hpp"

namespace zinbiel {

/* Multilinear map on `degree` algebra slots with module values:
 * map.at({i_1..i_n, a}) = coefficient of v_a at the basis tuple. */
struct Cochain {
    std::size_t degree = 1; // 1..4
    Tensor map;             // shape (dim_Z, ..., dim_Z, dim_V)

    static Cochain zero(std::size_t degree, std::size_t alg_dim, std::size_t mod_dim);

    std::size_t alg_dim() const { return map.shape().front(); }
    std::size_t mod_dim() const { return map.shape().back(); }

    /* Module coordinates of the value on a basis tuple. */
    Vec value(std::span<const std::size_t> at) const;
    Vec value(std::initializer_list<std::size_t> at) const {
        return value(std::span<const std::size_t>(at.begin(), at.size()));
    }
    /* Full multilinear evaluation, one coordinate vector per slot. */
    Vec apply(std::span<const Vec> args) const;

    bool operator==(const Cochain& rhs) const = default;
};

/* Coordinate dimension of the space of degree-n cochains: dim_Z^n * dim_V. */
std::size_t cochain_space_dim(std::size_t degree, std::size_t alg_dim, std::size_t mod_dim);

/* Coordinate position of the entry (i_1..i_n, a):
 * i_1 + i_2 dim_Z + ... + i_n dim_Z^(n-1) + a dim_Z^n.
 * The leftmost algebra index varies fastest, the module index slowest; the
 * coboundary matrices, flatten, and unflatten_cochain all share this order. */
std::size_t cochain_flat_index(std::size_t alg_dim, std::span<const std::size_t> idx);

Vec flatten(const Cochain& w);
Cochain unflatten_cochain(std::size_t degree, std::size_t alg_dim, std::size_t mod_dim,
                          const Vec& coords);

/* The degree-raising operator, for w of degree 1, 2, 3:
 *   (d1 w)(x,y)     = x |> w(y) - w(x*y) + w(x) <| y
 *   (d2 w)(x,y,z)   = x |> (w(y,z)+w(z,y)) - w(x*y,z) + w(x,y*z+z*y)
 *                     - w(x,y) <| z
 *   (d3 w)(x,y,z,t) = x |> (w(y,z,t)-w(z,t,y)+w(z,y,t)-w(t,z,y)) - w(x*y,z,t)
 *                     + w(x,y*z+z*y,t) - w(x,y,z*t+t*z) + w(x,y,z) <| t     */
Cochain coboundary(const Algebra& a, const Bimodule& v, const Cochain& w);

/* Matrix of the degree-raising operator in the flattened coordinates,
 * assembled entry by entry from the structure constants. Shape
 * cochain_space_dim(degree+1) x cochain_space_dim(degree); applying it to
 * flatten(w) agrees with flatten(coboundary(w)). degree in {1,2,3}. */
Matrix coboundary_matrix(const Algebra& a, const Bimodule& v, std::size_t degree);

struct CohomologyResult {
    std::size_t degree = 0;
    std::size_t cocycles = 0;     // kernel dimension at this degree
    std::size_t coboundaries = 0; // image dimension from one degree below
    std::size_t h_dim = 0;        // cocycles - coboundaries
};

/* degree in {2,3}. Requires a and v to pass their checkers. */
CohomologyResult cohomology_dim(const Algebra& a, const Bimodule& v, std::size_t degree);

/* Whether coboundary(w) vanishes identically. Degree of w in {1,2,3}. */
bool is_cocycle(const Algebra& a, const Bimodule& v, const Cochain& w);

/* A cochain u with coboundary(u) = w, zeros in all free coordinates of the
 * solve; nullopt when w is not a coboundary. Degree of w in {2,3,4}. */
std::optional<Cochain> coboundary_preimage(const Algebra& a, const Bimodule& v, const Cochain& w);

/* Seed-deterministic rational combination of the canonical cocycle basis at
 * this degree (numerators in [-9,9], denominators in {1,2,3}). degree in
 * {2,3}; output always satisfies is_cocycle. */
Cochain random_cocycle(const Algebra& a, const Bimodule& v, std::size_t degree,
                       std::uint64_t seed);

} // namespace zinbiel
