#include "zinbiel/two_vect.hpp"

#include <string>
#include <utility>

#include "zinbiel/errors.hpp"

namespace zinbiel {

namespace {

void require_mor(const Mor2& f, const TwoTermZinf& L, const std::string& who) {
    if (f.x.size() != L.dim0 || f.h.size() != L.dim1)
        throw domain_error(who + ": morphism dimensions mismatch");
}

/* Composition with the junction test skipped, for checkers that evaluate
 * both squares of a law on inputs that may fail it. */
Mor2 compose_raw(const Mor2& g, const Mor2& f) { return Mor2{f.x, add(f.h, g.h)}; }

Vec concat(const Vec& a, const Vec& b) {
    Vec r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

} // namespace

Vec source(const Mor2& f) { return f.x; }

Vec target(const Mor2& f, const TwoTermZinf& L) {
    require_mor(f, L, "target");
    return add(f.x, L.apply_d(f.h));
}

Mor2 identity(const Vec& x, const TwoTermZinf& L) {
    if (x.size() != L.dim0) throw domain_error("identity: object dimension mismatch");
    return Mor2{x, zero_vec(L.dim1)};
}

Mor2 compose(const Mor2& g, const Mor2& f, const TwoTermZinf& L) {
    require_mor(f, L, "compose");
    require_mor(g, L, "compose");
    if (source(g) != target(f, L))
        throw domain_error("compose: source of g differs from target of f");
    return compose_raw(g, f);
}

Mor2 product(const Mor2& f, const Mor2& g, const TwoTermZinf& L) {
    require_mor(f, L, "product");
    require_mor(g, L, "product");
    Vec h = L.apply_l2_01(f.x, g.h);
    add_in(h, L.apply_l2_10(f.h, g.x));
    add_in(h, L.apply_l2_01(L.apply_d(f.h), g.h));
    return Mor2{L.apply_l2_00(f.x, g.x), std::move(h)};
}

Mor2 zinbielator(const TwoTermZinf& L, const Vec& x, const Vec& y, const Vec& z) {
    return Mor2{L.apply_l2_00(L.apply_l2_00(x, y), z), L.apply_l3(x, y, z)};
}

CheckReport check_naturality(const TwoTermZinf& L) {
    CheckReport rep{"naturality", {ConditionReport{"naturality", false, {}}}};
    ConditionReport& cond = rep.conditions.front();
    const std::size_t n = L.dim0 + L.dim1;
    const auto basis_mor = [&](std::size_t m) {
        return m < L.dim0 ? Mor2{unit_vec(L.dim0, m), zero_vec(L.dim1)}
                          : Mor2{zero_vec(L.dim0), unit_vec(L.dim1, m - L.dim0)};
    };
    for (std::size_t a = 0; a < n; ++a) {
        const Mor2 f = basis_mor(a);
        for (std::size_t b = 0; b < n; ++b) {
            const Mor2 g = basis_mor(b);
            for (std::size_t c = 0; c < n; ++c) {
                const Mor2 e = basis_mor(c);
                const Mor2 lhs = compose_raw(
                    zinbielator(L, target(f, L), target(g, L), target(e, L)),
                    product(product(f, g, L), e, L));
                const Mor2 rhs = compose_raw(
                    product(f, product(g, e, L), L) + product(f, product(e, g, L), L),
                    zinbielator(L, source(f), source(g), source(e)));
                const Mor2 diff = lhs - rhs;
                if (!is_zero(diff.x) || !is_zero(diff.h))
                    cond.violations.push_back({{a, b, c}, concat(diff.x, diff.h)});
            }
        }
    }
    return rep;
}

CheckReport check_zinbielator_identity(const TwoTermZinf& L) {
    CheckReport rep{"zinbielator_identity",
                    {ConditionReport{"zinbielator_identity", false, {}},
                     ConditionReport{"equals_f_residual", false, {}}}};
    ConditionReport& law = rep.conditions[0];
    ConditionReport& agree = rep.conditions[1];
    const std::size_t n = L.dim0;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec x = unit_vec(n, i);
        const Mor2 one_x = identity(x, L);
        for (std::size_t j = 0; j < n; ++j) {
            const Vec y = unit_vec(n, j);
            for (std::size_t k = 0; k < n; ++k) {
                const Vec z = unit_vec(n, k);
                const Vec yz = L.apply_l2_00(y, z), zy = L.apply_l2_00(z, y);
                for (std::size_t t = 0; t < n; ++t) {
                    const Vec w = unit_vec(n, t);

                    const Mor2 left_1 = product(zinbielator(L, x, y, z), identity(w, L), L);
                    const Mor2 left_2 = zinbielator(L, x, yz, w) + zinbielator(L, x, zy, w);
                    const Mor2 left_3 =
                        product(one_x, zinbielator(L, y, z, w), L) +
                        product(one_x, zinbielator(L, z, y, w), L) +
                        identity(L.apply_l2_00(x, L.apply_l2_00(w, yz)), L) +
                        identity(L.apply_l2_00(x, L.apply_l2_00(w, zy)), L);
                    const Mor2 left = compose_raw(left_3, compose_raw(left_2, left_1));

                    const Vec zw = L.apply_l2_00(z, w), wz = L.apply_l2_00(w, z);
                    const Mor2 right_1 = zinbielator(L, L.apply_l2_00(x, y), z, w);
                    const Mor2 right_2 = zinbielator(L, x, y, zw) + zinbielator(L, x, y, wz);
                    const Mor2 right_3 =
                        identity(L.apply_l2_00(x, L.apply_l2_00(y, zw)), L) +
                        identity(L.apply_l2_00(x, L.apply_l2_00(y, wz)), L) +
                        product(one_x, zinbielator(L, z, w, y), L) +
                        product(one_x, zinbielator(L, w, z, y), L);
                    const Mor2 right = compose_raw(right_3, compose_raw(right_2, right_1));

                    const Mor2 diff = left - right;
                    if (!is_zero(diff.x))
                        throw internal_error(
                            "check_zinbielator_identity: object components diverged");
                    if (!is_zero(diff.h)) law.violations.push_back({{i, j, k, t}, diff.h});

                    Vec gap = diff.h;
                    sub_in(gap, zinf_f_residual(L, i, j, k, t));
                    if (!is_zero(gap)) agree.violations.push_back({{i, j, k, t}, std::move(gap)});
                }
            }
        }
    }
    return rep;
}

Zinbiel2Algebra functor_T(const TwoTermZinf& L) {
    require_pass(check_zinf(L), "functor_T");
    return Zinbiel2Algebra{TwoVect{L.dim0, L.dim0 + L.dim1, L.d}, L};
}

TwoTermZinf functor_S(const Zinbiel2Algebra& z2) {
    const TwoTermZinf& L = z2.ops;
    if (z2.space.objects_dim != L.dim0 || z2.space.morphisms_dim != L.dim0 + L.dim1 ||
        !(z2.space.d == L.d))
        throw domain_error("functor_S: space and ops disagree");
    require_pass(check_zinf(L), "functor_S");

    const std::size_t n0 = L.dim0, n1 = L.dim1;
    TwoTermZinf out = TwoTermZinf::zero(n0, n1);
    const auto store = [](Tensor& tt, std::vector<std::size_t> idx, const Vec& val) {
        for (std::size_t a = 0; a < val.size(); ++a) {
            if (is_zero(val[a])) continue;
            idx.back() = a;
            tt.at(idx) = val[a];
        }
    };

    for (std::size_t p = 0; p < n1; ++p) {
        const Mor2 up{zero_vec(n0), unit_vec(n1, p)};
        const Vec val = target(up, L);
        for (std::size_t r = 0; r < n0; ++r)
            if (!is_zero(val[r])) out.d.at(r, p) = val[r];
    }
    for (std::size_t i = 0; i < n0; ++i) {
        const Mor2 ix = identity(unit_vec(n0, i), L);
        for (std::size_t j = 0; j < n0; ++j)
            store(out.l2_00, {i, j, 0}, product(ix, identity(unit_vec(n0, j), L), L).x);
        for (std::size_t p = 0; p < n1; ++p) {
            const Mor2 up{zero_vec(n0), unit_vec(n1, p)};
            store(out.l2_01, {i, p, 0}, product(ix, up, L).h);
            store(out.l2_10, {p, i, 0}, product(up, ix, L).h);
        }
        for (std::size_t j = 0; j < n0; ++j)
            for (std::size_t k = 0; k < n0; ++k)
                store(out.l3, {i, j, k, 0},
                      zinbielator(L, unit_vec(n0, i), unit_vec(n0, j), unit_vec(n0, k)).h);
    }
    return out;
}

} // namespace zinbiel
