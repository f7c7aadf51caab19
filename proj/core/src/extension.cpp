#include "zinbiel/extension.hpp"

#include <string>
#include <utility>

#include "zinbiel/errors.hpp"

namespace zinbiel {

namespace {

std::string tuple_str(std::size_t p, std::size_t q, std::size_t r) {
    return "(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + ")";
}

Matrix basis_change(const CrossedExtension& E) {
    std::vector<Vec> cols = E.im_basis;
    cols.insert(cols.end(), E.z_basis.begin(), E.z_basis.end());
    return Matrix::from_columns(E.xm.g.dim, cols);
}

void require_sections(const CrossedExtension& E, const SectionPair& sp, const std::string& who) {
    const std::size_t sdim = E.xm.g.dim, vdim = E.xm.h.dim, zdim = E.z.dim;
    if (sp.s.rows() != sdim || sp.s.cols() != zdim || sp.q.rows() != vdim ||
        sp.q.cols() != sdim)
        throw domain_error(who + ": section shapes mismatch");
    if (!(E.pi * sp.s == Matrix::identity(zdim)))
        throw domain_error(who + ": s is not a section of pi");
    if (!(E.xm.phi * sp.q * E.xm.phi == E.xm.phi))
        throw domain_error(who + ": q is not a section of phi on its image");
}

} // namespace

CrossedExtension extension_from_crossed(const CrossedModule& X) {
    require_pass(check_crossed_module(X), "extension_from_crossed");
    const std::size_t vdim = X.h.dim, sdim = X.g.dim;

    CrossedExtension E;
    E.xm = X;
    E.m_basis = kernel_basis(X.phi);
    E.incl = Matrix::from_columns(vdim, E.m_basis);
    E.im_pivot_cols = rref(X.phi).pivot_cols;
    for (std::size_t c : E.im_pivot_cols) E.im_basis.push_back(X.phi.column(c));
    E.z_basis = complement_basis(E.im_basis, sdim);
    for (const Vec& v : E.z_basis)
        for (std::size_t i = 0; i < sdim; ++i)
            if (!is_zero(v[i])) {
                E.z_indices.push_back(i);
                break;
            }

    const std::size_t mdim = E.m_basis.size(), r = E.im_basis.size(), zdim = E.z_basis.size();
    const Matrix binv = inverse(basis_change(E));
    E.pi = Matrix(zdim, sdim);
    for (std::size_t t = 0; t < zdim; ++t)
        for (std::size_t c = 0; c < sdim; ++c) E.pi.at(t, c) = binv.at(r + t, c);

    if (rank(E.incl) != mdim || r + mdim != vdim) throw internal_error("extension: kernel side");
    if (rank(E.pi) != zdim || r + zdim != sdim) throw internal_error("extension: cokernel side");
    if (!(E.pi * X.phi).is_zero()) throw internal_error("extension: pi does not kill the image");
    if (!(E.pi * Matrix::from_columns(sdim, E.z_basis) == Matrix::identity(zdim)))
        throw internal_error("extension: pi is not a retraction of the complement");

    E.z = Algebra::zero(zdim);
    for (std::size_t p = 0; p < zdim; ++p)
        for (std::size_t q = 0; q < zdim; ++q) {
            const Vec val = E.pi.apply(X.g.mul(E.z_basis[p], E.z_basis[q]));
            for (std::size_t t = 0; t < zdim; ++t)
                if (!is_zero(val[t])) E.z.product.at({p, q, t}) = val[t];
        }

    E.m = Bimodule::zero(zdim, mdim);
    for (std::size_t p = 0; p < zdim; ++p)
        for (std::size_t t = 0; t < mdim; ++t) {
            const auto left = solve(E.incl, X.action.act_left(E.z_basis[p], E.m_basis[t]));
            const auto right = solve(E.incl, X.action.act_right(E.m_basis[t], E.z_basis[p]));
            if (!left || !right) throw internal_error("extension: action does not preserve M");
            for (std::size_t a = 0; a < mdim; ++a) {
                if (!is_zero((*left)[a])) E.m.left.at({p, t, a}) = (*left)[a];
                if (!is_zero((*right)[a])) E.m.right.at({t, p, a}) = (*right)[a];
            }
        }

    if (!check_zinbiel(E.z).pass()) throw internal_error("extension: induced product invalid");
    if (!check_bimodule(E.z, E.m).pass()) throw internal_error("extension: induced action invalid");
    return E;
}

SectionPair choose_sections(const CrossedExtension& E, SectionStrategy strategy) {
    const std::size_t vdim = E.xm.h.dim, sdim = E.xm.g.dim;
    const std::size_t mdim = E.m_basis.size(), r = E.im_basis.size();
    const Matrix binv = inverse(basis_change(E));

    Matrix p(vdim, sdim);
    for (std::size_t i = 0; i < r; ++i) p.at(E.im_pivot_cols[i], i) = 1;
    Matrix q = p * binv;
    if (strategy == SectionStrategy::shifted && mdim > 0) {
        Matrix shift(vdim, sdim);
        for (std::size_t c = 0; c < sdim; ++c) {
            const Vec& mv = E.m_basis[c % mdim];
            for (std::size_t row = 0; row < vdim; ++row) shift.at(row, c) = mv[row];
        }
        q = q + shift * binv;
    }

    SectionPair sp{Matrix::from_columns(sdim, E.z_basis), std::move(q)};
    require_sections(E, sp, "choose_sections");
    return sp;
}

Cochain theta(const CrossedExtension& E, const SectionPair& sp) {
    require_sections(E, sp, "theta");
    const std::size_t zdim = E.z.dim, mdim = E.m_basis.size();

    std::vector<Vec> sx(zdim);
    for (std::size_t p = 0; p < zdim; ++p) sx[p] = sp.s.column(p);

    /* g(x,y) = q(s(x) s(y) - s(x y)) on basis pairs, extended bilinearly. */
    std::vector<std::vector<Vec>> gv(zdim, std::vector<Vec>(zdim));
    for (std::size_t p = 0; p < zdim; ++p)
        for (std::size_t q = 0; q < zdim; ++q) {
            Vec w = E.xm.g.mul(sx[p], sx[q]);
            sub_in(w, sp.s.apply(E.z.mul(E.z.basis(p), E.z.basis(q))));
            gv[p][q] = sp.q.apply(w);
        }
    const auto g_of = [&](const Vec& a, const Vec& b) {
        Vec out = zero_vec(E.xm.h.dim);
        for (std::size_t p = 0; p < zdim; ++p) {
            if (is_zero(a[p])) continue;
            for (std::size_t q = 0; q < zdim; ++q)
                if (!is_zero(b[q])) add_in(out, scale(a[p] * b[q], gv[p][q]));
        }
        return out;
    };

    Cochain out = Cochain::zero(3, zdim, mdim);
    for (std::size_t p = 0; p < zdim; ++p) {
        const Vec ep = E.z.basis(p);
        for (std::size_t q = 0; q < zdim; ++q) {
            const Vec eq = E.z.basis(q);
            const Vec pq = E.z.mul(ep, eq);
            for (std::size_t t = 0; t < zdim; ++t) {
                const Vec et = E.z.basis(t);
                Vec val = E.xm.action.act_left(sx[p], add(gv[q][t], gv[t][q]));
                sub_in(val, g_of(pq, et));
                add_in(val, g_of(ep, add(E.z.mul(eq, et), E.z.mul(et, eq))));
                sub_in(val, E.xm.action.act_right(gv[p][q], sx[t]));

                if (!is_zero(E.xm.phi.apply(val)))
                    throw internal_error("theta: value escaped the kernel at " +
                                         tuple_str(p, q, t));
                const auto coords = solve(E.incl, val);
                if (!coords)
                    throw internal_error("theta: kernel coordinates unsolvable at " +
                                         tuple_str(p, q, t));
                for (std::size_t a = 0; a < mdim; ++a)
                    if (!is_zero((*coords)[a])) out.map.at({p, q, t, a}) = (*coords)[a];
            }
        }
    }
    return out;
}

XiResult xi(const CrossedExtension& E) {
    return XiResult{theta(E, choose_sections(E, SectionStrategy::pivot)),
                    cohomology_dim(E.z, E.m, 3)};
}

bool same_class(const Cochain& t1, const Cochain& t2, const Algebra& z, const Bimodule& m) {
    if (t1.degree != 3 || t2.degree != 3)
        throw domain_error("same_class: cochains must have degree 3");
    if (t1.alg_dim() != z.dim || t2.alg_dim() != z.dim || t1.mod_dim() != m.mod_dim ||
        t2.mod_dim() != m.mod_dim || m.alg_dim != z.dim)
        throw domain_error("same_class: context mismatch");
    const Cochain diff{3, t1.map - t2.map};
    return solve(coboundary_matrix(z, m, 2), flatten(diff)).has_value();
}

CrossedModule transport_crossed(const CrossedExtension& E, const Matrix& u, const Matrix& j) {
    const std::size_t vdim = E.xm.h.dim, sdim = E.xm.g.dim, mdim = E.m_basis.size();
    if (u.rows() != mdim || u.cols() != vdim)
        throw domain_error("transport_crossed: u must be M.dim x V.dim");
    if (j.rows() != vdim || j.cols() != sdim)
        throw domain_error("transport_crossed: j must be V.dim x S.dim");
    if (!(u * E.incl).is_zero())
        throw domain_error("transport_crossed: u must vanish on the kernel");

    const Matrix eps = E.incl * u;
    const Matrix alpha = Matrix::identity(vdim) + eps;
    const Matrix alpha_inv = Matrix::identity(vdim) - eps;  // eps * eps = 0
    const Matrix beta = Matrix::identity(sdim) + E.xm.phi * j;
    const Matrix beta_inv = inverse(beta);

    CrossedModule out{Algebra::zero(sdim), Algebra::zero(vdim), beta * E.xm.phi * alpha_inv,
                      Bimodule::zero(sdim, vdim)};
    for (std::size_t i = 0; i < sdim; ++i) {
        const Vec bi = beta_inv.column(i);
        for (std::size_t k = 0; k < sdim; ++k) {
            const Vec val = beta.apply(E.xm.g.mul(bi, beta_inv.column(k)));
            for (std::size_t t = 0; t < sdim; ++t)
                if (!is_zero(val[t])) out.g.product.at({i, k, t}) = val[t];
        }
    }
    for (std::size_t p = 0; p < vdim; ++p) {
        const Vec ap = alpha_inv.column(p);
        for (std::size_t q = 0; q < vdim; ++q) {
            const Vec val = alpha.apply(E.xm.h.mul(ap, alpha_inv.column(q)));
            for (std::size_t t = 0; t < vdim; ++t)
                if (!is_zero(val[t])) out.h.product.at({p, q, t}) = val[t];
        }
    }
    for (std::size_t i = 0; i < sdim; ++i) {
        const Vec bi = beta_inv.column(i);
        for (std::size_t p = 0; p < vdim; ++p) {
            const Vec ap = alpha_inv.column(p);
            const Vec lv = alpha.apply(E.xm.action.act_left(bi, ap));
            const Vec rv = alpha.apply(E.xm.action.act_right(ap, bi));
            for (std::size_t t = 0; t < vdim; ++t) {
                if (!is_zero(lv[t])) out.action.left.at({i, p, t}) = lv[t];
                if (!is_zero(rv[t])) out.action.right.at({p, i, t}) = rv[t];
            }
        }
    }
    return out;
}

} // namespace zinbiel
