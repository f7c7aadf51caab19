#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "zinbiel/report.hpp"
#include "zinbiel/tensor.hpp"

namespace zinbiel {

/* Structure constants of a bilinear product on a finite-dimensional space.
 * product.at({i,j,k}) = coefficient of e_k in e_i * e_j.
 * Whether the product satisfies the right-commutative identity
 * (x*y)*z = x*(y*z) + x*(z*y) is check_zinbiel's business, not a type
 * invariant: checkers must be able to hold failing candidates. */
struct Algebra {
    std::size_t dim = 0;
    std::vector<std::string> labels; // optional; empty or one per basis vector
    Tensor product;                  // shape (dim, dim, dim)

    static Algebra zero(std::size_t dim);
    Vec mul(const Vec& x, const Vec& y) const { return apply2(product, x, y); }
    Vec basis(std::size_t i) const { return unit_vec(dim, i); }

    bool operator==(const Algebra& rhs) const = default;
};

/* A two-sided action pair: left.at({i,b,c}) = coefficient of v_c in
 * e_i |> v_b; right.at({b,j,c}) = coefficient of v_c in v_b <| e_j. */
struct Bimodule {
    std::size_t alg_dim = 0;
    std::size_t mod_dim = 0;
    Tensor left;  // shape (alg_dim, mod_dim, mod_dim)
    Tensor right; // shape (mod_dim, alg_dim, mod_dim)

    static Bimodule zero(std::size_t alg_dim, std::size_t mod_dim);
    Vec act_left(const Vec& x, const Vec& v) const { return apply2(left, x, v); }
    Vec act_right(const Vec& v, const Vec& x) const { return apply2(right, v, x); }
    Vec basis(std::size_t b) const { return unit_vec(mod_dim, b); }

    bool operator==(const Bimodule& rhs) const = default;
};

/* Linear map between algebras, columns indexed by source basis. */
struct AlgebraMorphism {
    std::size_t source_dim = 0;
    std::size_t target_dim = 0;
    Matrix matrix; // target_dim x source_dim

    bool operator==(const AlgebraMorphism& rhs) const = default;
};

/* Residuals of (x*y)*z - x*(y*z) - x*(z*y) on all basis triples.
 * Condition id "zinbiel". */
CheckReport check_zinbiel(const Algebra& a);

/* Residuals of the three action identities on all basis tuples (x, y, v):
 *   eq2: (x*y) |> v = x |> (y |> v + v <| y)
 *   eq3: (v <| x) <| y = v <| (x*y + y*x)
 *   eq4: (x |> v) <| y = x |> (v <| y + y |> v)                            */
CheckReport check_bimodule(const Algebra& a, const Bimodule& v);

/* f(x*y) = f(x)*f(y) on all basis pairs. Condition id "hom". */
CheckReport check_morphism(const AlgebraMorphism& f, const Algebra& source, const Algebra& target);

/* Half-sum product (x,y) -> (x*y + y*x)/2. */
Algebra symmetrize(const Algebra& a);

/* The algebra acting on itself, both actions equal to the product.
 * Requires check_zinbiel(a) to pass. */
Bimodule regular_bimodule(const Algebra& a);

/* Single-generator truncated algebra on x^1..x^n:
 * x^p * x^q = C(p+q-1, q) x^(p+q), zero past degree n. */
Algebra truncated_shuffle(std::size_t n);

} // namespace zinbiel
