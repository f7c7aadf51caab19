#pragma once

/* Shared fixtures for the unit and acceptance suites. Everything here is
 * deterministic; the cohomology dimension table at the bottom was computed
 * independently and is asserted verbatim by the tests. */

#include <cstddef>
#include <cstdint>
#include <vector>

#include <zinbiel/algebra.hpp>
#include <zinbiel/cohomology.hpp>
#include <zinbiel/dendriform.hpp>
#include <zinbiel/extension.hpp>
#include <zinbiel/linalg.hpp>
#include <zinbiel/rational.hpp>
#include <zinbiel/rng.hpp>
#include <zinbiel/tensor.hpp>
#include <zinbiel/two_vect.hpp>
#include <zinbiel/zinf.hpp>

namespace fixtures {

using namespace zinbiel;

/* dim 2, e1*e1 = e2, all other products zero. */
inline Algebra nilpotent2() {
    Algebra a = Algebra::zero(2);
    a.product.at({0, 0, 1}) = 1;
    return a;
}

/* Fails the defining identity with residual -1 at (0,0,0). */
inline Algebra idempotent1() {
    Algebra a = Algebra::zero(1);
    a.product.at({0, 0, 0}) = 1;
    return a;
}

inline Algebra unlabeled(Algebra a) {
    a.labels.clear();
    return a;
}

/* One-dimensional zero bimodule with both actions zero. */
inline Bimodule zero_line(const Algebra& a) { return Bimodule::zero(a.dim, 1); }

/* ---- crossed modules, spanning ker(phi) dimensions 0, 1, 2 and
 * im(phi) ranks 0, 1, 2 ---- */

/* phi = 0, zero actions; M is all of h, Z identifies with g. */
inline CrossedModule crossed_zero() {
    CrossedModule x;
    x.g = nilpotent2();
    x.h = Algebra::zero(2);
    x.phi = Matrix(2, 2);
    x.action = Bimodule::zero(2, 2);
    return x;
}

/* phi = identity, both actions the product; M = 0 and Z = 0. */
inline CrossedModule crossed_identity() {
    CrossedModule x;
    x.g = nilpotent2();
    x.h = nilpotent2();
    x.phi = Matrix::identity(2);
    x.action = regular_bimodule(x.g);
    return x;
}

/* h = span(u, w) with zero product, phi(u) = e2, phi(w) = 0, zero actions;
 * rank 1 with a 1-dim kernel. */
inline CrossedModule crossed_rank1() {
    CrossedModule x;
    x.g = nilpotent2();
    x.h = Algebra::zero(2);
    x.phi = Matrix(2, 2);
    x.phi.at(1, 0) = 1;
    x.action = Bimodule::zero(2, 2);
    return x;
}

/* Injective phi with a nonzero cokernel: h = span(u), phi(u) = e2. */
inline CrossedModule crossed_m0() {
    CrossedModule x;
    x.g = nilpotent2();
    x.h = Algebra::zero(1);
    x.phi = Matrix(2, 1);
    x.phi.at(1, 0) = 1;
    x.action = Bimodule::zero(2, 1);
    return x;
}

/* Nontrivial obstruction class: g three-dimensional with the truncated
 * product, h = span(u, w) abelian, phi(u) = x3, x1 acting by u -> w on both
 * sides. The induced quotient is nilpotent2 acting on the line spanned by w. */
inline CrossedModule crossed_ts3() {
    CrossedModule x;
    x.g = unlabeled(truncated_shuffle(3));
    x.h = Algebra::zero(2);
    x.phi = Matrix(3, 2);
    x.phi.at(2, 0) = 1;
    x.action = Bimodule::zero(3, 2);
    x.action.left.at({0, 0, 1}) = 1;
    x.action.right.at({0, 0, 1}) = 1;
    return x;
}

/* Split obstruction class: g four-dimensional truncated, h = span(u3, u4, w)
 * abelian, phi(u3) = x3 and phi(u4) = x4, x1 acting by u3 -> u4 on the left
 * and u3 -> 3 u4 on the right (the structure constants of g itself). */
inline CrossedModule crossed_ts4() {
    CrossedModule x;
    x.g = unlabeled(truncated_shuffle(4));
    x.h = Algebra::zero(3);
    x.phi = Matrix(4, 3);
    x.phi.at(2, 0) = 1;
    x.phi.at(3, 1) = 1;
    x.action = Bimodule::zero(4, 3);
    x.action.left.at({0, 0, 1}) = 1;
    x.action.right.at({0, 0, 1}) = 3;
    return x;
}

inline std::vector<CrossedModule> all_crossed() {
    return {crossed_zero(), crossed_identity(), crossed_rank1(), crossed_m0(),
            crossed_ts3(),  crossed_ts4()};
}

/* ---- two-term structures ---- */

/* Copies src into dst with every index shifted by the matching offset. */
inline void embed(Tensor& dst, const Tensor& src, const std::vector<std::size_t>& off) {
    for (std::size_t f = 0; f < src.size(); ++f) {
        if (is_zero(src.flat(f))) continue;
        std::vector<std::size_t> idx = src.unflatten(f);
        for (std::size_t k = 0; k < idx.size(); ++k) idx[k] += off[k];
        dst.at(idx) = src.flat(f);
    }
}

/* Block direct sum; checker-passing whenever both summands are, since every
 * mixed-block operation vanishes. */
inline TwoTermZinf direct_sum(const TwoTermZinf& a, const TwoTermZinf& b) {
    TwoTermZinf out = TwoTermZinf::zero(a.dim0 + b.dim0, a.dim1 + b.dim1);
    for (std::size_t r = 0; r < a.dim0; ++r)
        for (std::size_t c = 0; c < a.dim1; ++c) out.d.at(r, c) = a.d.at(r, c);
    for (std::size_t r = 0; r < b.dim0; ++r)
        for (std::size_t c = 0; c < b.dim1; ++c) out.d.at(a.dim0 + r, a.dim1 + c) = b.d.at(r, c);
    embed(out.l2_00, a.l2_00, {0, 0, 0});
    embed(out.l2_00, b.l2_00, {a.dim0, a.dim0, a.dim0});
    embed(out.l2_01, a.l2_01, {0, 0, 0});
    embed(out.l2_01, b.l2_01, {a.dim0, a.dim1, a.dim1});
    embed(out.l2_10, a.l2_10, {0, 0, 0});
    embed(out.l2_10, b.l2_10, {a.dim1, a.dim0, a.dim1});
    embed(out.l3, a.l3, {0, 0, 0, 0});
    embed(out.l3, b.l3, {a.dim0, a.dim0, a.dim0, a.dim1});
    return out;
}

/* Seed-deterministic integer noise on l3 alone; the result generically
 * violates conditions (d)-(f) while keeping (b) and (c) intact. */
inline TwoTermZinf perturb_l3(TwoTermZinf L, std::uint64_t seed) {
    SplitMix64 rng(seed);
    for (std::size_t f = 0; f < L.l3.size(); ++f)
        L.l3.flat(f) += Rational(static_cast<long>(rng.in_range(-3, 3)));
    return L;
}

/* ---- coupled commutative / averaging-operator pair ---- */

/* Strict two-term lift of the half-sum product of the three-letter truncated
 * algebra: both degrees carry the same space, d = 0, every m2 component the
 * symmetrized product, m3 = 0. */
inline TwoTermAinf rb_ainf() {
    Algebra s = symmetrize(unlabeled(truncated_shuffle(3)));
    TwoTermAinf A = TwoTermAinf::zero(3, 3);
    A.m2_00 = s.product;
    A.m2_01 = s.product;
    A.m2_10 = s.product;
    return A;
}

/* Degree-preserving shift x1 -> x2 -> x3 -> 0 on both levels; satisfies all
 * four weight-zero identities against rb_ainf(). */
inline RotaBaxter2 rb_shift() {
    RotaBaxter2 R;
    R.r0 = Matrix(3, 3);
    R.r0.at(1, 0) = 1;
    R.r0.at(2, 1) = 1;
    R.r1 = R.r0;
    return R;
}

/* ---- frozen cohomology dimensions (independent recomputation) ---- */

struct CohRecord {
    const char* name;
    Algebra algebra;
    Bimodule bimodule;
    std::size_t z2, b2, h2;
    std::size_t z3, b3, h3;
};

inline std::vector<CohRecord> frozen_cohomology() {
    std::vector<CohRecord> table;
    {
        Algebra a = nilpotent2();
        table.push_back({"nilpotent2+regular", a, regular_bimodule(a), 3, 2, 1, 6, 5, 1});
        table.push_back({"nilpotent2+zero2", a, Bimodule::zero(2, 2), 4, 2, 2, 6, 4, 2});
        table.push_back({"nilpotent2+zero1", a, zero_line(a), 2, 1, 1, 3, 2, 1});
    }
    {
        Algebra a = unlabeled(truncated_shuffle(1));
        table.push_back({"shuffle1+regular", a, regular_bimodule(a), 1, 0, 1, 1, 0, 1});
    }
    {
        Algebra a = unlabeled(truncated_shuffle(3));
        table.push_back({"shuffle3+regular", a, regular_bimodule(a), 7, 6, 1, 21, 20, 1});
    }
    {
        Algebra a = unlabeled(truncated_shuffle(4));
        table.push_back({"shuffle4+regular", a, regular_bimodule(a), 13, 12, 1, 52, 51, 1});
    }
    {
        Algebra a = Algebra::zero(1);
        table.push_back({"zero1+zero1", a, zero_line(a), 1, 0, 1, 1, 0, 1});
    }
    return table;
}

} // namespace fixtures
