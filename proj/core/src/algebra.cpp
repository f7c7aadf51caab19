#include "zinbiel/algebra.hpp"

#include "zinbiel/errors.hpp"

namespace zinbiel {

Algebra Algebra::zero(std::size_t dim) {
    return Algebra{dim, {}, Tensor({dim, dim, dim})};
}

Bimodule Bimodule::zero(std::size_t alg_dim, std::size_t mod_dim) {
    return Bimodule{alg_dim, mod_dim, Tensor({alg_dim, mod_dim, mod_dim}),
                    Tensor({mod_dim, alg_dim, mod_dim})};
}

CheckReport check_zinbiel(const Algebra& a) {
    CheckReport rep{"zinbiel", {ConditionReport{"zinbiel", false, {}}}};
    ConditionReport& cond = rep.conditions.front();
    const std::size_t n = a.dim;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec ei = a.basis(i);
        for (std::size_t j = 0; j < n; ++j) {
            const Vec ej = a.basis(j);
            const Vec ij = a.mul(ei, ej);
            for (std::size_t k = 0; k < n; ++k) {
                const Vec ek = a.basis(k);
                Vec resid = a.mul(ij, ek);
                sub_in(resid, a.mul(ei, a.mul(ej, ek)));
                sub_in(resid, a.mul(ei, a.mul(ek, ej)));
                if (!is_zero(resid)) cond.violations.push_back({{i, j, k}, std::move(resid)});
            }
        }
    }
    return rep;
}

CheckReport check_bimodule(const Algebra& a, const Bimodule& v) {
    if (v.alg_dim != a.dim) throw domain_error("check_bimodule: algebra dimension mismatch");
    CheckReport rep{"bimodule",
                    {ConditionReport{"eq2", false, {}}, ConditionReport{"eq3", false, {}},
                     ConditionReport{"eq4", false, {}}}};
    const std::size_t n = a.dim, m = v.mod_dim;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec x = a.basis(i);
        for (std::size_t j = 0; j < n; ++j) {
            const Vec y = a.basis(j);
            const Vec xy = a.mul(x, y);
            const Vec xy_yx = add(xy, a.mul(y, x));
            for (std::size_t b = 0; b < m; ++b) {
                const Vec w = v.basis(b);

                Vec r2 = v.act_left(xy, w);
                sub_in(r2, v.act_left(x, add(v.act_left(y, w), v.act_right(w, y))));
                if (!is_zero(r2)) rep.conditions[0].violations.push_back({{i, j, b}, std::move(r2)});

                Vec r3 = v.act_right(v.act_right(w, x), y);
                sub_in(r3, v.act_right(w, xy_yx));
                if (!is_zero(r3)) rep.conditions[1].violations.push_back({{i, j, b}, std::move(r3)});

                Vec r4 = v.act_right(v.act_left(x, w), y);
                sub_in(r4, v.act_left(x, add(v.act_right(w, y), v.act_left(y, w))));
                if (!is_zero(r4)) rep.conditions[2].violations.push_back({{i, j, b}, std::move(r4)});
            }
        }
    }
    return rep;
}

CheckReport check_morphism(const AlgebraMorphism& f, const Algebra& source, const Algebra& target) {
    if (f.source_dim != source.dim || f.target_dim != target.dim ||
        f.matrix.rows() != target.dim || f.matrix.cols() != source.dim)
        throw domain_error("check_morphism: dimension mismatch");
    CheckReport rep{"morphism", {ConditionReport{"hom", false, {}}}};
    ConditionReport& cond = rep.conditions.front();
    for (std::size_t i = 0; i < source.dim; ++i) {
        const Vec fi = f.matrix.column(i);
        for (std::size_t j = 0; j < source.dim; ++j) {
            Vec resid = f.matrix.apply(source.mul(source.basis(i), source.basis(j)));
            sub_in(resid, target.mul(fi, f.matrix.column(j)));
            if (!is_zero(resid)) cond.violations.push_back({{i, j}, std::move(resid)});
        }
    }
    return rep;
}

Algebra symmetrize(const Algebra& a) {
    Algebra out = Algebra::zero(a.dim);
    out.labels = a.labels;
    const Rational half = frac(1, 2);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            for (std::size_t k = 0; k < a.dim; ++k) {
                const Rational s = a.product.at({i, j, k}) + a.product.at({j, i, k});
                if (!is_zero(s)) out.product.at({i, j, k}) = half * s;
            }
    return out;
}

Bimodule regular_bimodule(const Algebra& a) {
    require_pass(check_zinbiel(a), "regular_bimodule");
    Bimodule v = Bimodule::zero(a.dim, a.dim);
    v.left = a.product;
    v.right = a.product;
    return v;
}

Algebra truncated_shuffle(std::size_t n) {
    if (n == 0) throw domain_error("truncated_shuffle: n must be positive");
    Algebra a = Algebra::zero(n);
    for (std::size_t i = 0; i < n; ++i) a.labels.push_back("x" + std::to_string(i + 1));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t p = i + 1, q = j + 1;
            if (p + q > n) continue;
            mpz_class coeff;
            mpz_bin_uiui(coeff.get_mpz_t(), static_cast<unsigned long>(p + q - 1),
                         static_cast<unsigned long>(q));
            a.product.at({i, j, p + q - 1}) = Rational(coeff);
        }
    return a;
}

} // namespace zinbiel
