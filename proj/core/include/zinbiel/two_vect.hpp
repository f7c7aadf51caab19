#pragma once

#include <cstddef>

#include "zinbiel/linalg.hpp"
#include "zinbiel/report.hpp"
#include "zinbiel/zinf.hpp"

namespace zinbiel {

/* Morphism (x, h) of the categorified vector space: source x, target x + dh. */
struct Mor2 {
    Vec x;
    Vec h;

    Mor2 operator+(const Mor2& rhs) const { return Mor2{add(x, rhs.x), add(h, rhs.h)}; }
    Mor2 operator-(const Mor2& rhs) const { return Mor2{sub(x, rhs.x), sub(h, rhs.h)}; }
    bool operator==(const Mor2& rhs) const = default;
};

/* The category with objects V_0 and morphisms V_0 + V_1, determined by d. */
struct TwoVect {
    std::size_t objects_dim = 0;
    std::size_t morphisms_dim = 0;  // objects_dim + dim V_1
    Matrix d;

    bool operator==(const TwoVect& rhs) const = default;
};

/* A TwoVect together with the bracket data inducing its product functor. */
struct Zinbiel2Algebra {
    TwoVect space;
    TwoTermZinf ops;

    bool operator==(const Zinbiel2Algebra& rhs) const = default;
};

Vec source(const Mor2& f);
Vec target(const Mor2& f, const TwoTermZinf& L);
Mor2 identity(const Vec& x, const TwoTermZinf& L);

/* g after f: (x,h) then (x+dh,k) gives (x, h+k). Rejects a junction
 * mismatch source(g) != target(f). */
Mor2 compose(const Mor2& g, const Mor2& f, const TwoTermZinf& L);

/* Monoidal product of morphisms:
 * (x,h)*(y,k) = (l2(x,y), l2(x,k) + l2(h,y) + l2(dh,k)). */
Mor2 product(const Mor2& f, const Mor2& g, const TwoTermZinf& L);

/* J_{x,y,z} = ((x*y)*z, l3(x,y,z)): the morphism from (x*y)*z to
 * x*(y*z) + x*(z*y) whenever condition (d) holds. */
Mor2 zinbielator(const TwoTermZinf& L, const Vec& x, const Vec& y, const Vec& z);

/* Naturality square of J over all triples of basis morphisms (single
 * condition id "naturality"; residual = source difference then h
 * difference). Junctions are composed without the match test so the square
 * is meaningful even on failing L. */
CheckReport check_naturality(const TwoTermZinf& L);

/* The two composite morphisms rewriting ((x*y)*z)*t, on all degree-0 basis
 * quadruples:
 *   left:  J_{x,y,z}*1_t, then J_{x,y*z,t} + J_{x,z*y,t},
 *          then 1_x*J_{y,z,t} + 1_x*J_{z,y,t} + 1 + 1
 *   right: J_{x*y,z,t}, then J_{x,y,z*t} + J_{x,y,t*z},
 *          then 1 + 1 + 1_x*J_{z,t,y} + 1_x*J_{t,z,y}
 * Condition "zinbielator_identity" records left - right (h component; the
 * object components agree identically). Condition "equals_f_residual"
 * records (left - right).h minus the condition-f residual, which vanishes
 * for every L, so failures of the identity match failures of (f) exactly. */
CheckReport check_zinbielator_identity(const TwoTermZinf& L);

/* The categorified side of a checker-passing L: its TwoVect plus the ops. */
Zinbiel2Algebra functor_T(const TwoTermZinf& L);

/* Extraction of the bracket data back out of the categorical calculus:
 * d from targets, l2_00 from products of identities, l2_01/l2_10 from mixed
 * products, l3 from the Zinbielator. Inverse of functor_T on the nose. */
TwoTermZinf functor_S(const Zinbiel2Algebra& z2);

} // namespace zinbiel
