#pragma once

#include <cstddef>

#include "zinbiel/algebra.hpp"
#include "zinbiel/cohomology.hpp"
#include "zinbiel/linalg.hpp"
#include "zinbiel/report.hpp"
#include "zinbiel/tensor.hpp"

namespace zinbiel {

/* Two-term homotopy structure V_1 --d--> V_0 with a graded bracket l2, a
 * ternary corrector l3 on degree-0 slots, and the convention that at most
 * one argument of l2 sits in degree 1. */
struct TwoTermZinf {
    std::size_t dim0 = 0;
    std::size_t dim1 = 0;
    Matrix d;      // dim0 x dim1
    Tensor l2_00;  // (dim0, dim0, dim0)
    Tensor l2_01;  // (dim0, dim1, dim1)
    Tensor l2_10;  // (dim1, dim0, dim1)
    Tensor l3;     // (dim0, dim0, dim0, dim1)

    static TwoTermZinf zero(std::size_t dim0, std::size_t dim1);

    Vec apply_d(const Vec& h) const { return d.apply(h); }
    Vec apply_l2_00(const Vec& x, const Vec& y) const { return apply2(l2_00, x, y); }
    Vec apply_l2_01(const Vec& x, const Vec& h) const { return apply2(l2_01, x, h); }
    Vec apply_l2_10(const Vec& h, const Vec& x) const { return apply2(l2_10, h, x); }
    Vec apply_l3(const Vec& x, const Vec& y, const Vec& z) const { return apply3(l3, x, y, z); }

    bool operator==(const TwoTermZinf& rhs) const = default;
};

/* Structure equations on all basis tuples. Normative conditions:
 *   b1: d(l2(x,h)) = l2(x,dh)            at (i,p)
 *   b2: d(l2(h,x)) = l2(dh,x)            at (p,i)
 *   c:  l2(dh,k) = l2(h,dk)              at (p,q)
 *   d:  d(l3(x,y,z)) = l2(x,l2(y,z)) + l2(x,l2(z,y)) - l2(l2(x,y),z)
 *   e1: l3(x,y,dh) = l2(x,l2(y,h)) + l2(x,l2(h,y)) - l2(l2(x,y),h)
 *   e2: l3(x,dh,z) = l2(x,l2(h,z)) + l2(x,l2(z,h)) - l2(l2(x,h),z)
 *   e3: l3(dh,y,z) = l2(h,l2(y,z)) + l2(h,l2(z,y)) - l2(l2(h,y),z)
 *   f:  l2(x,l3(y,z,t)) + l2(x,l3(z,y,t)) + l3(x,y*z+z*y,t) + l2(l3(x,y,z),t)
 *       - l2(x,l3(z,t,y)) - l2(x,l3(t,z,y)) - l3(x,y,z*t+t*z) - l3(x*y,z,t) = 0
 * The informational ids e1_verbatim, e2_verbatim, e3_verbatim record an
 * alternative right-hand side for e1-e3 that is not implied by the normative
 * set; they never affect pass(). */
CheckReport check_zinf(const TwoTermZinf& L);

/* Residual of condition f at the degree-0 basis tuple (i,j,k,t); the value
 * lives in V_1. Shared with the two-arrow calculus checks. */
Vec zinf_f_residual(const TwoTermZinf& L, std::size_t i, std::size_t j, std::size_t k,
                    std::size_t t);

/* Morphism data (f0, f1, f2): linear maps on each degree plus a bilinear
 * corrector f2 with values in the target's degree 1. */
struct ZinfMorphism {
    Matrix f0;  // target.dim0 x source.dim0
    Matrix f1;  // target.dim1 x source.dim1
    Tensor f2;  // (source.dim0, source.dim0, target.dim1)

    bool operator==(const ZinfMorphism& rhs) const = default;
};

/* Morphism equations on all basis tuples of the source:
 *   i:   f0(dh) = d'(f1(h))
 *   ii:  f0(l2(x,y)) - l2'(f0 x, f0 y) = d'(f2(x,y))
 *   iii: f1(l2(x,h)) - l2'(f0 x, f1 h) = f2(x, dh)
 *   iv:  f1(l3(x,y,z)) - l3'(f0 x, f0 y, f0 z)
 *          = f2(x, l2(y,z)) - f2(l2(x,y), z) - f2(y, l2(x,z))
 *            + l2'(f0 x, f2(y,z)) - l2'(f2(x,y), f0 z) - l2'(f0 y, f2(x,z)) */
CheckReport check_zinf_morphism(const ZinfMorphism& f, const TwoTermZinf& source,
                                const TwoTermZinf& target);

ZinfMorphism identity_morphism(const TwoTermZinf& L);

/* g after f: composite maps g0 f0 and g1 f1, and the corrector
 * (g.f)2(x,y) = g2(f0 x, f0 y) + g1(f2(x,y)). */
ZinfMorphism compose_morphisms(const ZinfMorphism& g, const ZinfMorphism& f);

/* d = 0, l2 from the product and the two actions, l3 = the cochain. Requires
 * the algebra and bimodule checkers to pass and w to be a degree-3 cocycle. */
TwoTermZinf skeletal_from_cocycle(const Algebra& a, const Bimodule& v, const Cochain& w);

struct SkeletalData {
    Algebra algebra;
    Bimodule bimodule;
    Cochain cocycle;
};

/* Inverse reading of a structure with d = 0: the degree-0 product, the two
 * actions on degree 1, and l3 as a degree-3 cochain. Rejects d != 0; the
 * extracted triple is validated and any checker failure is surfaced with its
 * report. */
SkeletalData classify_skeletal(const TwoTermZinf& L);

/* A map phi: h -> g with g acting on h on both sides. */
struct CrossedModule {
    Algebra g;
    Algebra h;
    Matrix phi;       // g.dim x h.dim
    Bimodule action;  // alg_dim = g.dim, mod_dim = h.dim

    bool operator==(const CrossedModule& rhs) const = default;
};

/* Both algebra checkers (ids g_zinbiel, h_zinbiel), the action equations
 * (eq2, eq3, eq4), equivariance of phi (compat_left, compat_right), and the
 * action of an image element (peiffer_left: phi(h) |> k = h*k, peiffer_right:
 * h*k = h <| phi(k)). */
CheckReport check_crossed_module(const CrossedModule& X);

/* d = phi, l2 from g's product and the two actions, l3 = 0. Requires the
 * crossed module checker to pass. */
TwoTermZinf strict_from_crossed(const CrossedModule& X);

/* Inverse of strict_from_crossed: rejects l3 != 0, requires check_zinf to
 * pass, and recovers the degree-1 product as h*k = l2(dh,k). */
CrossedModule crossed_from_strict(const TwoTermZinf& L);

} // namespace zinbiel
