#include "zinbiel/zinf.hpp"

#include <string>
#include <utility>

#include "zinbiel/errors.hpp"

namespace zinbiel {

namespace {

void require_shape(const TwoTermZinf& L, const std::string& who) {
    if (L.d.rows() != L.dim0 || L.d.cols() != L.dim1)
        throw domain_error(who + ": d must be dim0 x dim1");
    if (L.l2_00.shape() != std::vector<std::size_t>{L.dim0, L.dim0, L.dim0} ||
        L.l2_01.shape() != std::vector<std::size_t>{L.dim0, L.dim1, L.dim1} ||
        L.l2_10.shape() != std::vector<std::size_t>{L.dim1, L.dim0, L.dim1} ||
        L.l3.shape() != std::vector<std::size_t>{L.dim0, L.dim0, L.dim0, L.dim1})
        throw domain_error(who + ": tensor shape mismatch");
}

/* A nonzero cochain value set wrapped as a report, so cocycle preconditions
 * surface the same way checker failures do. */
CheckReport cocycle_report(const Algebra& a, const Bimodule& v, const Cochain& w) {
    CheckReport rep{"cocycle", {ConditionReport{"cocycle", false, {}}}};
    const Cochain dw = coboundary(a, v, w);
    const std::size_t n = dw.degree, dz = a.dim;
    std::vector<std::size_t> idx(n, 0);
    for (;;) {
        Vec val = dw.value(idx);
        if (!is_zero(val)) rep.conditions.front().violations.push_back({idx, std::move(val)});
        std::size_t k = 0;
        while (k < n && ++idx[k] == dz) idx[k++] = 0;
        if (k == n) break;
    }
    return rep;
}

} // namespace

TwoTermZinf TwoTermZinf::zero(std::size_t dim0, std::size_t dim1) {
    return TwoTermZinf{dim0,
                       dim1,
                       Matrix(dim0, dim1),
                       Tensor({dim0, dim0, dim0}),
                       Tensor({dim0, dim1, dim1}),
                       Tensor({dim1, dim0, dim1}),
                       Tensor({dim0, dim0, dim0, dim1})};
}

Vec zinf_f_residual(const TwoTermZinf& L, std::size_t i, std::size_t j, std::size_t k,
                    std::size_t t) {
    const Vec x = unit_vec(L.dim0, i), y = unit_vec(L.dim0, j);
    const Vec z = unit_vec(L.dim0, k), w = unit_vec(L.dim0, t);
    Vec r = L.apply_l2_01(x, L.apply_l3(y, z, w));
    add_in(r, L.apply_l2_01(x, L.apply_l3(z, y, w)));
    add_in(r, L.apply_l3(x, add(L.apply_l2_00(y, z), L.apply_l2_00(z, y)), w));
    add_in(r, L.apply_l2_10(L.apply_l3(x, y, z), w));
    sub_in(r, L.apply_l2_01(x, L.apply_l3(z, w, y)));
    sub_in(r, L.apply_l2_01(x, L.apply_l3(w, z, y)));
    sub_in(r, L.apply_l3(x, y, add(L.apply_l2_00(z, w), L.apply_l2_00(w, z))));
    sub_in(r, L.apply_l3(L.apply_l2_00(x, y), z, w));
    return r;
}

CheckReport check_zinf(const TwoTermZinf& L) {
    require_shape(L, "check_zinf");
    CheckReport rep{"zinf",
                    {ConditionReport{"b1", false, {}}, ConditionReport{"b2", false, {}},
                     ConditionReport{"c", false, {}}, ConditionReport{"d", false, {}},
                     ConditionReport{"e1", false, {}}, ConditionReport{"e2", false, {}},
                     ConditionReport{"e3", false, {}}, ConditionReport{"f", false, {}},
                     ConditionReport{"e1_verbatim", true, {}},
                     ConditionReport{"e2_verbatim", true, {}},
                     ConditionReport{"e3_verbatim", true, {}}}};
    ConditionReport& b1 = rep.conditions[0];
    ConditionReport& b2 = rep.conditions[1];
    ConditionReport& c = rep.conditions[2];
    ConditionReport& d = rep.conditions[3];
    ConditionReport& e1 = rep.conditions[4];
    ConditionReport& e2 = rep.conditions[5];
    ConditionReport& e3 = rep.conditions[6];
    ConditionReport& f = rep.conditions[7];
    ConditionReport& e1v = rep.conditions[8];
    ConditionReport& e2v = rep.conditions[9];
    ConditionReport& e3v = rep.conditions[10];
    const std::size_t n0 = L.dim0, n1 = L.dim1;

    for (std::size_t i = 0; i < n0; ++i) {
        const Vec x = unit_vec(n0, i);
        for (std::size_t p = 0; p < n1; ++p) {
            const Vec h = unit_vec(n1, p), dh = L.d.column(p);

            Vec rb1 = L.apply_d(L.apply_l2_01(x, h));
            sub_in(rb1, L.apply_l2_00(x, dh));
            if (!is_zero(rb1)) b1.violations.push_back({{i, p}, std::move(rb1)});

            Vec rb2 = L.apply_d(L.apply_l2_10(h, x));
            sub_in(rb2, L.apply_l2_00(dh, x));
            if (!is_zero(rb2)) b2.violations.push_back({{p, i}, std::move(rb2)});
        }
    }

    for (std::size_t p = 0; p < n1; ++p) {
        const Vec h = unit_vec(n1, p), dh = L.d.column(p);
        for (std::size_t q = 0; q < n1; ++q) {
            const Vec k = unit_vec(n1, q);
            Vec rc = L.apply_l2_01(dh, k);
            sub_in(rc, L.apply_l2_10(h, L.d.column(q)));
            if (!is_zero(rc)) c.violations.push_back({{p, q}, std::move(rc)});
        }
    }

    for (std::size_t i = 0; i < n0; ++i) {
        const Vec x = unit_vec(n0, i);
        for (std::size_t j = 0; j < n0; ++j) {
            const Vec y = unit_vec(n0, j);
            const Vec xy = L.apply_l2_00(x, y);
            for (std::size_t k = 0; k < n0; ++k) {
                const Vec z = unit_vec(n0, k);
                Vec rd = L.apply_d(L.apply_l3(x, y, z));
                sub_in(rd, L.apply_l2_00(x, L.apply_l2_00(y, z)));
                sub_in(rd, L.apply_l2_00(x, L.apply_l2_00(z, y)));
                add_in(rd, L.apply_l2_00(xy, z));
                if (!is_zero(rd)) d.violations.push_back({{i, j, k}, std::move(rd)});
            }
        }
    }

    for (std::size_t i = 0; i < n0; ++i) {
        const Vec x = unit_vec(n0, i);
        for (std::size_t j = 0; j < n0; ++j) {
            const Vec y = unit_vec(n0, j);
            const Vec xy = L.apply_l2_00(x, y);
            for (std::size_t p = 0; p < n1; ++p) {
                const Vec h = unit_vec(n1, p), dh = L.d.column(p);

                Vec re1 = L.apply_l3(x, y, dh);
                sub_in(re1, L.apply_l2_01(x, L.apply_l2_01(y, h)));
                sub_in(re1, L.apply_l2_01(x, L.apply_l2_10(h, y)));
                add_in(re1, L.apply_l2_01(xy, h));
                if (!is_zero(re1)) e1.violations.push_back({{i, j, p}, std::move(re1)});

                /* Recorded alternative reading; its first two right-hand
                 * terms cancel, leaving l3(x,y,dh) + l2(x, l2(h,y)). */
                Vec re1v = L.apply_l3(x, y, dh);
                add_in(re1v, L.apply_l2_01(x, L.apply_l2_10(h, y)));
                if (!is_zero(re1v)) e1v.violations.push_back({{i, j, p}, std::move(re1v)});
            }
        }
    }

    for (std::size_t i = 0; i < n0; ++i) {
        const Vec x = unit_vec(n0, i);
        for (std::size_t p = 0; p < n1; ++p) {
            const Vec h = unit_vec(n1, p), dh = L.d.column(p);
            const Vec xh = L.apply_l2_01(x, h);
            for (std::size_t k = 0; k < n0; ++k) {
                const Vec z = unit_vec(n0, k);

                Vec re2 = L.apply_l3(x, dh, z);
                sub_in(re2, L.apply_l2_01(x, L.apply_l2_10(h, z)));
                sub_in(re2, L.apply_l2_01(x, L.apply_l2_01(z, h)));
                add_in(re2, L.apply_l2_10(xh, z));
                if (!is_zero(re2)) e2.violations.push_back({{i, p, k}, std::move(re2)});

                Vec re2v = L.apply_l3(x, dh, z);
                sub_in(re2v, L.apply_l2_10(xh, z));
                add_in(re2v, L.apply_l2_01(x, L.apply_l2_10(h, z)));
                add_in(re2v, L.apply_l2_01(x, L.apply_l2_01(z, h)));
                if (!is_zero(re2v)) e2v.violations.push_back({{i, p, k}, std::move(re2v)});
            }
        }
    }

    for (std::size_t p = 0; p < n1; ++p) {
        const Vec h = unit_vec(n1, p), dh = L.d.column(p);
        for (std::size_t j = 0; j < n0; ++j) {
            const Vec y = unit_vec(n0, j);
            const Vec hy = L.apply_l2_10(h, y);
            for (std::size_t k = 0; k < n0; ++k) {
                const Vec z = unit_vec(n0, k);

                Vec re3 = L.apply_l3(dh, y, z);
                sub_in(re3, L.apply_l2_10(h, L.apply_l2_00(y, z)));
                sub_in(re3, L.apply_l2_10(h, L.apply_l2_00(z, y)));
                add_in(re3, L.apply_l2_10(hy, z));
                if (!is_zero(re3)) e3.violations.push_back({{p, j, k}, std::move(re3)});

                Vec re3v = L.apply_l3(dh, y, z);
                sub_in(re3v, L.apply_l2_10(hy, z));
                add_in(re3v, L.apply_l2_10(h, L.apply_l2_00(y, z)));
                add_in(re3v, L.apply_l2_10(h, L.apply_l2_00(z, y)));
                if (!is_zero(re3v)) e3v.violations.push_back({{p, j, k}, std::move(re3v)});
            }
        }
    }

    for (std::size_t i = 0; i < n0; ++i)
        for (std::size_t j = 0; j < n0; ++j)
            for (std::size_t k = 0; k < n0; ++k)
                for (std::size_t t = 0; t < n0; ++t) {
                    Vec rf = zinf_f_residual(L, i, j, k, t);
                    if (!is_zero(rf)) f.violations.push_back({{i, j, k, t}, std::move(rf)});
                }
    return rep;
}

CheckReport check_zinf_morphism(const ZinfMorphism& f, const TwoTermZinf& source,
                                const TwoTermZinf& target) {
    require_shape(source, "check_zinf_morphism");
    require_shape(target, "check_zinf_morphism");
    if (f.f0.rows() != target.dim0 || f.f0.cols() != source.dim0 ||
        f.f1.rows() != target.dim1 || f.f1.cols() != source.dim1)
        throw domain_error("check_zinf_morphism: component shape mismatch");
    if (f.f2.shape() != std::vector<std::size_t>{source.dim0, source.dim0, target.dim1})
        throw domain_error("check_zinf_morphism: f2 shape mismatch");

    CheckReport rep{"zinf_morphism",
                    {ConditionReport{"i", false, {}}, ConditionReport{"ii", false, {}},
                     ConditionReport{"iii", false, {}}, ConditionReport{"iv", false, {}}}};
    const std::size_t n0 = source.dim0, n1 = source.dim1;

    for (std::size_t p = 0; p < n1; ++p) {
        Vec r = f.f0.apply(source.d.column(p));
        sub_in(r, target.apply_d(f.f1.column(p)));
        if (!is_zero(r)) rep.conditions[0].violations.push_back({{p}, std::move(r)});
    }

    for (std::size_t i = 0; i < n0; ++i) {
        const Vec x = unit_vec(n0, i), fx = f.f0.column(i);
        for (std::size_t j = 0; j < n0; ++j) {
            const Vec y = unit_vec(n0, j);
            Vec r = f.f0.apply(source.apply_l2_00(x, y));
            sub_in(r, target.apply_l2_00(fx, f.f0.column(j)));
            sub_in(r, target.apply_d(apply2(f.f2, x, y)));
            if (!is_zero(r)) rep.conditions[1].violations.push_back({{i, j}, std::move(r)});
        }
        for (std::size_t p = 0; p < n1; ++p) {
            const Vec h = unit_vec(n1, p);
            Vec r = f.f1.apply(source.apply_l2_01(x, h));
            sub_in(r, target.apply_l2_01(fx, f.f1.column(p)));
            sub_in(r, apply2(f.f2, x, source.d.column(p)));
            if (!is_zero(r)) rep.conditions[2].violations.push_back({{i, p}, std::move(r)});
        }
    }

    for (std::size_t i = 0; i < n0; ++i) {
        const Vec x = unit_vec(n0, i), fx = f.f0.column(i);
        for (std::size_t j = 0; j < n0; ++j) {
            const Vec y = unit_vec(n0, j), fy = f.f0.column(j);
            for (std::size_t k = 0; k < n0; ++k) {
                const Vec z = unit_vec(n0, k), fz = f.f0.column(k);
                Vec r = f.f1.apply(source.apply_l3(x, y, z));
                sub_in(r, target.apply_l3(fx, fy, fz));
                sub_in(r, apply2(f.f2, x, source.apply_l2_00(y, z)));
                add_in(r, apply2(f.f2, source.apply_l2_00(x, y), z));
                add_in(r, apply2(f.f2, y, source.apply_l2_00(x, z)));
                sub_in(r, target.apply_l2_01(fx, apply2(f.f2, y, z)));
                add_in(r, target.apply_l2_10(apply2(f.f2, x, y), fz));
                add_in(r, target.apply_l2_01(fy, apply2(f.f2, x, z)));
                if (!is_zero(r)) rep.conditions[3].violations.push_back({{i, j, k}, std::move(r)});
            }
        }
    }
    return rep;
}

ZinfMorphism identity_morphism(const TwoTermZinf& L) {
    return ZinfMorphism{Matrix::identity(L.dim0), Matrix::identity(L.dim1),
                        Tensor({L.dim0, L.dim0, L.dim1})};
}

ZinfMorphism compose_morphisms(const ZinfMorphism& g, const ZinfMorphism& f) {
    if (g.f0.cols() != f.f0.rows() || g.f1.cols() != f.f1.rows())
        throw domain_error("compose_morphisms: middle dimensions disagree");
    if (g.f2.shape().front() != f.f0.rows() || g.f2.shape()[1] != f.f0.rows() ||
        f.f2.shape().back() != g.f1.cols())
        throw domain_error("compose_morphisms: corrector shape mismatch");
    const std::size_t n0 = f.f0.cols(), m1 = g.f1.rows();
    ZinfMorphism out{g.f0 * f.f0, g.f1 * f.f1, Tensor({n0, n0, m1})};
    for (std::size_t i = 0; i < n0; ++i) {
        const Vec fx = f.f0.column(i);
        for (std::size_t j = 0; j < n0; ++j) {
            Vec val = apply2(g.f2, fx, f.f0.column(j));
            add_in(val, g.f1.apply(apply2(f.f2, unit_vec(n0, i), unit_vec(n0, j))));
            for (std::size_t a = 0; a < m1; ++a)
                if (!is_zero(val[a])) out.f2.at({i, j, a}) = val[a];
        }
    }
    return out;
}

TwoTermZinf skeletal_from_cocycle(const Algebra& a, const Bimodule& v, const Cochain& w) {
    if (w.degree != 3) throw domain_error("skeletal_from_cocycle: cochain degree must be 3");
    if (v.alg_dim != a.dim || w.alg_dim() != a.dim || w.mod_dim() != v.mod_dim)
        throw domain_error("skeletal_from_cocycle: dimension mismatch");
    require_pass(check_zinbiel(a), "skeletal_from_cocycle");
    require_pass(check_bimodule(a, v), "skeletal_from_cocycle");
    if (!is_cocycle(a, v, w))
        throw precondition_error("skeletal_from_cocycle: input is not a cocycle",
                                 cocycle_report(a, v, w));
    return TwoTermZinf{a.dim, v.mod_dim, Matrix(a.dim, v.mod_dim),
                       a.product, v.left,  v.right,
                       w.map};
}

SkeletalData classify_skeletal(const TwoTermZinf& L) {
    require_shape(L, "classify_skeletal");
    if (!L.d.is_zero()) throw domain_error("classify_skeletal: d must vanish");
    SkeletalData out{Algebra{L.dim0, {}, L.l2_00},
                     Bimodule{L.dim0, L.dim1, L.l2_01, L.l2_10},
                     Cochain{3, L.l3}};
    require_pass(check_zinbiel(out.algebra), "classify_skeletal");
    require_pass(check_bimodule(out.algebra, out.bimodule), "classify_skeletal");
    if (!is_cocycle(out.algebra, out.bimodule, out.cocycle))
        throw precondition_error("classify_skeletal: l3 is not a cocycle",
                                 cocycle_report(out.algebra, out.bimodule, out.cocycle));
    return out;
}

CheckReport check_crossed_module(const CrossedModule& X) {
    if (X.phi.rows() != X.g.dim || X.phi.cols() != X.h.dim)
        throw domain_error("check_crossed_module: phi must be g.dim x h.dim");
    if (X.action.alg_dim != X.g.dim || X.action.mod_dim != X.h.dim)
        throw domain_error("check_crossed_module: action dimensions mismatch");

    CheckReport rep{"crossed_module", {}};
    CheckReport gz = check_zinbiel(X.g);
    gz.conditions.front().id = "g_zinbiel";
    rep.conditions.push_back(std::move(gz.conditions.front()));
    CheckReport hz = check_zinbiel(X.h);
    hz.conditions.front().id = "h_zinbiel";
    rep.conditions.push_back(std::move(hz.conditions.front()));
    CheckReport bi = check_bimodule(X.g, X.action);
    for (auto& cond : bi.conditions) rep.conditions.push_back(std::move(cond));

    rep.conditions.push_back(ConditionReport{"compat_left", false, {}});
    rep.conditions.push_back(ConditionReport{"compat_right", false, {}});
    rep.conditions.push_back(ConditionReport{"peiffer_left", false, {}});
    rep.conditions.push_back(ConditionReport{"peiffer_right", false, {}});
    ConditionReport& compat_l = rep.conditions[5];
    ConditionReport& compat_r = rep.conditions[6];
    ConditionReport& peiffer_l = rep.conditions[7];
    ConditionReport& peiffer_r = rep.conditions[8];

    for (std::size_t i = 0; i < X.g.dim; ++i) {
        const Vec x = X.g.basis(i);
        for (std::size_t p = 0; p < X.h.dim; ++p) {
            const Vec h = X.h.basis(p), ph = X.phi.column(p);

            Vec rl = X.phi.apply(X.action.act_left(x, h));
            sub_in(rl, X.g.mul(x, ph));
            if (!is_zero(rl)) compat_l.violations.push_back({{i, p}, std::move(rl)});

            Vec rr = X.phi.apply(X.action.act_right(h, x));
            sub_in(rr, X.g.mul(ph, x));
            if (!is_zero(rr)) compat_r.violations.push_back({{p, i}, std::move(rr)});
        }
    }

    for (std::size_t p = 0; p < X.h.dim; ++p) {
        const Vec h = X.h.basis(p), ph = X.phi.column(p);
        for (std::size_t q = 0; q < X.h.dim; ++q) {
            const Vec k = X.h.basis(q);
            const Vec hk = X.h.mul(h, k);

            Vec rl = X.action.act_left(ph, k);
            sub_in(rl, hk);
            if (!is_zero(rl)) peiffer_l.violations.push_back({{p, q}, std::move(rl)});

            Vec rr = hk;
            sub_in(rr, X.action.act_right(h, X.phi.column(q)));
            if (!is_zero(rr)) peiffer_r.violations.push_back({{p, q}, std::move(rr)});
        }
    }
    return rep;
}

TwoTermZinf strict_from_crossed(const CrossedModule& X) {
    require_pass(check_crossed_module(X), "strict_from_crossed");
    return TwoTermZinf{X.g.dim,    X.h.dim,        X.phi,
                       X.g.product, X.action.left, X.action.right,
                       Tensor({X.g.dim, X.g.dim, X.g.dim, X.h.dim})};
}

CrossedModule crossed_from_strict(const TwoTermZinf& L) {
    require_shape(L, "crossed_from_strict");
    if (!L.l3.is_zero()) throw domain_error("crossed_from_strict: l3 must vanish");
    require_pass(check_zinf(L), "crossed_from_strict");

    /* Degree-1 product h*k = l2(dh, k); condition (c) makes l2(h, dk) agree. */
    Tensor hprod({L.dim1, L.dim1, L.dim1});
    for (std::size_t p = 0; p < L.dim1; ++p) {
        const Vec dh = L.d.column(p);
        for (std::size_t q = 0; q < L.dim1; ++q) {
            const Vec val = L.apply_l2_01(dh, unit_vec(L.dim1, q));
            for (std::size_t r = 0; r < L.dim1; ++r)
                if (!is_zero(val[r])) hprod.at({p, q, r}) = val[r];
        }
    }
    return CrossedModule{Algebra{L.dim0, {}, L.l2_00}, Algebra{L.dim1, {}, std::move(hprod)},
                         L.d, Bimodule{L.dim0, L.dim1, L.l2_01, L.l2_10}};
}

} // namespace zinbiel
