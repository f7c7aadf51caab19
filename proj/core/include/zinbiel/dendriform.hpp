#pragma once

#include <array>
#include <cstddef>

#include "zinbiel/linalg.hpp"
#include "zinbiel/report.hpp"
#include "zinbiel/tensor.hpp"
#include "zinbiel/zinf.hpp"

namespace zinbiel {

/* Two-term homotopy associative structure: same graded shape as TwoTermZinf
 * with a binary m2 and ternary corrector m3; no m2 on V_1 x V_1. */
struct TwoTermAinf {
    std::size_t dim0 = 0;
    std::size_t dim1 = 0;
    Matrix d;      // dim0 x dim1
    Tensor m2_00;  // (dim0, dim0, dim0)
    Tensor m2_01;  // (dim0, dim1, dim1)
    Tensor m2_10;  // (dim1, dim0, dim1)
    Tensor m3;     // (dim0, dim0, dim0, dim1)

    static TwoTermAinf zero(std::size_t dim0, std::size_t dim1);

    Vec apply_d(const Vec& h) const { return d.apply(h); }
    Vec apply_m2_00(const Vec& x, const Vec& y) const { return apply2(m2_00, x, y); }
    Vec apply_m2_01(const Vec& x, const Vec& h) const { return apply2(m2_01, x, h); }
    Vec apply_m2_10(const Vec& h, const Vec& x) const { return apply2(m2_10, h, x); }
    Vec apply_m3(const Vec& x, const Vec& y, const Vec& z) const { return apply3(m3, x, y, z); }

    bool operator==(const TwoTermAinf& rhs) const = default;
};

/* Two-term dendriform data: each binary cell [1] ("precede") and [2]
 * ("succeed") carries the three graded components; the ternary corrector has
 * cells [1],[2],[3]. Stored as arrays indexed cell-1. */
struct TwoTermDend {
    std::size_t dim0 = 0;
    std::size_t dim1 = 0;
    Matrix d;
    std::array<Tensor, 2> mu2_00;
    std::array<Tensor, 2> mu2_01;
    std::array<Tensor, 2> mu2_10;
    std::array<Tensor, 3> mu3;

    static TwoTermDend zero(std::size_t dim0, std::size_t dim1);

    bool operator==(const TwoTermDend& rhs) const = default;
};

struct RotaBaxter2 {
    Matrix r0;  // dim0 x dim0
    Matrix r1;  // dim1 x dim1

    bool operator==(const RotaBaxter2& rhs) const = default;
};

/* Structure equations on all basis tuples. Normative conditions:
 *   b1: d(m2(x,h)) = m2(x,dh)            b2: d(m2(h,x)) = m2(dh,x)
 *   c:  m2(dh,k) = m2(h,dk)
 *   d:  d(m3(x,y,z)) = m2(x,m2(y,z)) - m2(m2(x,y),z)
 *   e1: m3(x,y,dh) = m2(x,m2(y,h)) - m2(m2(x,y),h)
 *   e2: m3(x,dh,z) = m2(x,m2(h,z)) - m2(m2(x,h),z)
 *   e3: m3(dh,y,z) = m2(h,m2(y,z)) - m2(m2(h,y),z)
 *   f:  m2(x,m3(y,z,t)) - m3(m2(x,y),z,t) + m3(x,m2(y,z),t)
 *       - m3(x,y,m2(z,t)) + m2(m3(x,y,z),t) = 0
 * Informational ids e1_verbatim..e3_verbatim and f_verbatim record
 * alternative readings of those right-hand sides; never affect pass(). */
CheckReport check_ainf(const TwoTermAinf& A);

/* check_ainf plus m2_commutative (m2 symmetric in both gradings; tuple
 * (0,i,j) for degree-0 pairs, (1,i,p) for mixed) and m3_commutative
 * (invariance under the five nontrivial argument permutations; tuple
 * (perm,i,j,k) with perm in 1..5). */
CheckReport check_cinf(const TwoTermAinf& A);

/* m2 = half the sum of l2 and its flip in every grading;
 * m3 = one sixth of the sum of l3 over all six argument orders. */
TwoTermAinf symmetrize_zinf(const TwoTermZinf& L);

/* Cell [1] reads l2 straight, cell [2] flipped (in every grading);
 * mu3 cells are the three cyclic shifts of l3. */
TwoTermDend dendrify(const TwoTermZinf& L);

/* Collapse of the cells: m2 = mu2[1] + mu2[2], m3 = mu3[1]+mu3[2]+mu3[3]. */
TwoTermAinf totalize(const TwoTermDend& D);

/* The four operator axioms on basis tuples:
 *   rb_00: m2(R0 x, R0 y) = R0(m2(x, R0 y) + m2(R0 x, y))
 *   rb_01: m2(R0 x, R1 h) = R1(m2(x, R1 h) + m2(R0 x, h))
 *   rb_10: m2(R1 h, R0 x) = R1(m2(h, R0 x) + m2(R1 h, x))
 *   rb_m3: m3(R0 x, R0 y, R0 z)
 *          = R1(m3(x,R0 y,R0 z) + m3(R0 x,y,R0 z) + m3(R0 x,R0 y,z)) */
CheckReport check_rota_baxter(const RotaBaxter2& R, const TwoTermAinf& A);

/* The bracket induced by a Rota-Baxter operator:
 *   l2(a,b) = m2(a, R b) + m2(R a, b) with the grading-matched R component;
 *   l3(x,y,z) = m3(x,R0 y,R0 z) + m3(R0 x,y,R0 z) + m3(R0 x,R0 y,z); d kept.
 * Requires A to pass check_cinf and (R, A) to pass check_rota_baxter. */
TwoTermZinf zinf_from_rb(const TwoTermAinf& A, const RotaBaxter2& R);

} // namespace zinbiel
