#include "zinbiel/cohomology.hpp"

#include <vector>

#include "zinbiel/errors.hpp"
#include "zinbiel/rng.hpp"

namespace zinbiel {

namespace {

void require_context(const Algebra& a, const Bimodule& v, const Cochain& w, const char* who) {
    if (v.alg_dim != a.dim) throw domain_error(std::string(who) + ": bimodule algebra dim mismatch");
    if (w.alg_dim() != a.dim || w.mod_dim() != v.mod_dim)
        throw domain_error(std::string(who) + ": cochain context mismatch");
}

} // namespace

Cochain Cochain::zero(std::size_t degree, std::size_t alg_dim, std::size_t mod_dim) {
    if (degree < 1 || degree > 4) throw domain_error("Cochain: unsupported degree");
    std::vector<std::size_t> shape(degree, alg_dim);
    shape.push_back(mod_dim);
    return Cochain{degree, Tensor(std::move(shape))};
}

Vec Cochain::value(std::span<const std::size_t> at) const {
    if (at.size() != degree) throw domain_error("Cochain::value: wrong slot count");
    const std::size_t dv = mod_dim();
    std::vector<std::size_t> idx(at.begin(), at.end());
    idx.push_back(0);
    Vec out = zero_vec(dv);
    for (std::size_t c = 0; c < dv; ++c) {
        idx.back() = c;
        out[c] = map.at(idx);
    }
    return out;
}

Vec Cochain::apply(std::span<const Vec> args) const {
    if (args.size() != degree) throw domain_error("Cochain::apply: wrong slot count");
    const std::size_t dz = alg_dim(), dv = mod_dim();
    for (const Vec& arg : args)
        if (arg.size() != dz) throw domain_error("Cochain::apply: wrong coordinate length");
    Vec out = zero_vec(dv);
    std::vector<std::size_t> idx(degree + 1, 0);
    auto descend = [&](auto&& self, std::size_t slot, const Rational& coeff) -> void {
        if (slot == degree) {
            for (std::size_t c = 0; c < dv; ++c) {
                idx[degree] = c;
                const Rational& e = map.at(idx);
                if (!is_zero(e)) out[c] += coeff * e;
            }
            return;
        }
        for (std::size_t i = 0; i < dz; ++i) {
            if (is_zero(args[slot][i])) continue;
            idx[slot] = i;
            self(self, slot + 1, coeff * args[slot][i]);
        }
    };
    descend(descend, 0, Rational(1));
    return out;
}

std::size_t cochain_space_dim(std::size_t degree, std::size_t alg_dim, std::size_t mod_dim) {
    std::size_t d = mod_dim;
    for (std::size_t k = 0; k < degree; ++k) d *= alg_dim;
    return d;
}

std::size_t cochain_flat_index(std::size_t alg_dim, std::span<const std::size_t> idx) {
    std::size_t pos = 0, stride = 1;
    for (std::size_t v : idx) {
        pos += v * stride;
        stride *= alg_dim;
    }
    return pos;
}

Vec flatten(const Cochain& w) {
    const std::size_t dz = w.alg_dim();
    Vec out = zero_vec(w.map.size());
    for (std::size_t f = 0; f < w.map.size(); ++f) {
        const Rational& e = w.map.flat(f);
        if (is_zero(e)) continue;
        out[cochain_flat_index(dz, w.map.unflatten(f))] = e;
    }
    return out;
}

Cochain unflatten_cochain(std::size_t degree, std::size_t alg_dim, std::size_t mod_dim,
                          const Vec& coords) {
    if (coords.size() != cochain_space_dim(degree, alg_dim, mod_dim))
        throw domain_error("unflatten_cochain: wrong coordinate length");
    Cochain w = Cochain::zero(degree, alg_dim, mod_dim);
    for (std::size_t f = 0; f < w.map.size(); ++f) {
        const Rational& e = coords[cochain_flat_index(alg_dim, w.map.unflatten(f))];
        if (!is_zero(e)) w.map.flat(f) = e;
    }
    return w;
}

Cochain coboundary(const Algebra& a, const Bimodule& v, const Cochain& w) {
    require_context(a, v, w, "coboundary");
    const std::size_t dz = a.dim, dv = v.mod_dim, n = w.degree;
    if (n < 1 || n > 3) throw domain_error("coboundary: unsupported degree");
    Cochain out = Cochain::zero(n + 1, dz, dv);

    auto store = [&](std::span<const std::size_t> at, const Vec& val) {
        std::vector<std::size_t> idx(at.begin(), at.end());
        idx.push_back(0);
        for (std::size_t c = 0; c < dv; ++c) {
            if (is_zero(val[c])) continue;
            idx.back() = c;
            out.map.at(idx) = val[c];
        }
    };

    if (n == 1) {
        for (std::size_t i = 0; i < dz; ++i)
            for (std::size_t j = 0; j < dz; ++j) {
                const Vec ei = a.basis(i), ej = a.basis(j);
                Vec val = v.act_left(ei, w.value({j}));
                sub_in(val, w.apply(std::vector<Vec>{a.mul(ei, ej)}));
                add_in(val, v.act_right(w.value({i}), ej));
                const std::size_t at[] = {i, j};
                store(at, val);
            }
        return out;
    }

    if (n == 2) {
        for (std::size_t i = 0; i < dz; ++i)
            for (std::size_t j = 0; j < dz; ++j)
                for (std::size_t k = 0; k < dz; ++k) {
                    const Vec ei = a.basis(i), ej = a.basis(j), ek = a.basis(k);
                    Vec val = v.act_left(ei, add(w.value({j, k}), w.value({k, j})));
                    sub_in(val, w.apply(std::vector<Vec>{a.mul(ei, ej), ek}));
                    add_in(val, w.apply(std::vector<Vec>{ei, add(a.mul(ej, ek), a.mul(ek, ej))}));
                    sub_in(val, v.act_right(w.value({i, j}), ek));
                    const std::size_t at[] = {i, j, k};
                    store(at, val);
                }
        return out;
    }

    for (std::size_t i = 0; i < dz; ++i)
        for (std::size_t j = 0; j < dz; ++j)
            for (std::size_t k = 0; k < dz; ++k)
                for (std::size_t t = 0; t < dz; ++t) {
                    const Vec ei = a.basis(i), ej = a.basis(j), ek = a.basis(k), et = a.basis(t);
                    Vec block = w.value({j, k, t});
                    sub_in(block, w.value({k, t, j}));
                    add_in(block, w.value({k, j, t}));
                    sub_in(block, w.value({t, k, j}));
                    Vec val = v.act_left(ei, block);
                    sub_in(val, w.apply(std::vector<Vec>{a.mul(ei, ej), ek, et}));
                    add_in(val,
                           w.apply(std::vector<Vec>{ei, add(a.mul(ej, ek), a.mul(ek, ej)), et}));
                    sub_in(val,
                           w.apply(std::vector<Vec>{ei, ej, add(a.mul(ek, et), a.mul(et, ek))}));
                    add_in(val, v.act_right(w.value({i, j, k}), et));
                    const std::size_t at[] = {i, j, k, t};
                    store(at, val);
                }
    return out;
}

Matrix coboundary_matrix(const Algebra& a, const Bimodule& v, std::size_t degree) {
    if (v.alg_dim != a.dim) throw domain_error("coboundary_matrix: bimodule algebra dim mismatch");
    if (degree < 1 || degree > 3) throw domain_error("coboundary_matrix: unsupported degree");
    const std::size_t dz = a.dim, dv = v.mod_dim;
    const Tensor& c = a.product;
    const Tensor& L = v.left;
    const Tensor& R = v.right;
    Matrix m(cochain_space_dim(degree + 1, dz, dv), cochain_space_dim(degree, dz, dv));

    auto row = [&](std::initializer_list<std::size_t> idx) {
        return cochain_flat_index(dz, std::span<const std::size_t>(idx.begin(), idx.size()));
    };
    auto col = row;

    if (degree == 1) {
        for (std::size_t i = 0; i < dz; ++i)
            for (std::size_t j = 0; j < dz; ++j) {
                for (std::size_t b = 0; b < dv; ++b)
                    for (std::size_t x = 0; x < dv; ++x) {
                        const Rational& l = L.at({i, b, x});
                        if (!is_zero(l)) m.at(row({i, j, x}), col({j, b})) += l;
                        const Rational& r = R.at({b, j, x});
                        if (!is_zero(r)) m.at(row({i, j, x}), col({i, b})) += r;
                    }
                for (std::size_t p = 0; p < dz; ++p) {
                    const Rational& e = c.at({i, j, p});
                    if (is_zero(e)) continue;
                    for (std::size_t x = 0; x < dv; ++x) m.at(row({i, j, x}), col({p, x})) -= e;
                }
            }
        return m;
    }

    if (degree == 2) {
        for (std::size_t i = 0; i < dz; ++i)
            for (std::size_t j = 0; j < dz; ++j)
                for (std::size_t k = 0; k < dz; ++k) {
                    for (std::size_t b = 0; b < dv; ++b)
                        for (std::size_t x = 0; x < dv; ++x) {
                            const Rational& l = L.at({i, b, x});
                            if (!is_zero(l)) {
                                m.at(row({i, j, k, x}), col({j, k, b})) += l;
                                m.at(row({i, j, k, x}), col({k, j, b})) += l;
                            }
                            const Rational& r = R.at({b, k, x});
                            if (!is_zero(r)) m.at(row({i, j, k, x}), col({i, j, b})) -= r;
                        }
                    for (std::size_t p = 0; p < dz; ++p) {
                        const Rational& e1 = c.at({i, j, p});
                        const Rational e2 = c.at({j, k, p}) + c.at({k, j, p});
                        for (std::size_t x = 0; x < dv; ++x) {
                            if (!is_zero(e1)) m.at(row({i, j, k, x}), col({p, k, x})) -= e1;
                            if (!is_zero(e2)) m.at(row({i, j, k, x}), col({i, p, x})) += e2;
                        }
                    }
                }
        return m;
    }

    for (std::size_t i = 0; i < dz; ++i)
        for (std::size_t j = 0; j < dz; ++j)
            for (std::size_t k = 0; k < dz; ++k)
                for (std::size_t t = 0; t < dz; ++t) {
                    for (std::size_t b = 0; b < dv; ++b)
                        for (std::size_t x = 0; x < dv; ++x) {
                            const Rational& l = L.at({i, b, x});
                            if (!is_zero(l)) {
                                m.at(row({i, j, k, t, x}), col({j, k, t, b})) += l;
                                m.at(row({i, j, k, t, x}), col({k, t, j, b})) -= l;
                                m.at(row({i, j, k, t, x}), col({k, j, t, b})) += l;
                                m.at(row({i, j, k, t, x}), col({t, k, j, b})) -= l;
                            }
                            const Rational& r = R.at({b, t, x});
                            if (!is_zero(r)) m.at(row({i, j, k, t, x}), col({i, j, k, b})) += r;
                        }
                    for (std::size_t p = 0; p < dz; ++p) {
                        const Rational& e1 = c.at({i, j, p});
                        const Rational e2 = c.at({j, k, p}) + c.at({k, j, p});
                        const Rational e3 = c.at({k, t, p}) + c.at({t, k, p});
                        for (std::size_t x = 0; x < dv; ++x) {
                            if (!is_zero(e1)) m.at(row({i, j, k, t, x}), col({p, k, t, x})) -= e1;
                            if (!is_zero(e2)) m.at(row({i, j, k, t, x}), col({i, p, t, x})) += e2;
                            if (!is_zero(e3)) m.at(row({i, j, k, t, x}), col({i, j, p, x})) -= e3;
                        }
                    }
                }
    return m;
}

CohomologyResult cohomology_dim(const Algebra& a, const Bimodule& v, std::size_t degree) {
    if (degree != 2 && degree != 3) throw domain_error("cohomology_dim: unsupported degree");
    require_pass(check_zinbiel(a), "cohomology_dim");
    require_pass(check_bimodule(a, v), "cohomology_dim");
    const std::size_t cocycles = kernel_basis(coboundary_matrix(a, v, degree)).size();
    const std::size_t bounds = rank(coboundary_matrix(a, v, degree - 1));
    if (bounds > cocycles) throw internal_error("cohomology_dim: image exceeds kernel");
    return CohomologyResult{degree, cocycles, bounds, cocycles - bounds};
}

bool is_cocycle(const Algebra& a, const Bimodule& v, const Cochain& w) {
    return coboundary(a, v, w).map.is_zero();
}

std::optional<Cochain> coboundary_preimage(const Algebra& a, const Bimodule& v, const Cochain& w) {
    require_context(a, v, w, "coboundary_preimage");
    if (w.degree < 2 || w.degree > 4) throw domain_error("coboundary_preimage: unsupported degree");
    auto x = solve(coboundary_matrix(a, v, w.degree - 1), flatten(w));
    if (!x) return std::nullopt;
    return unflatten_cochain(w.degree - 1, a.dim, v.mod_dim, *x);
}

Cochain random_cocycle(const Algebra& a, const Bimodule& v, std::size_t degree,
                       std::uint64_t seed) {
    if (degree != 2 && degree != 3) throw domain_error("random_cocycle: unsupported degree");
    if (v.alg_dim != a.dim) throw domain_error("random_cocycle: bimodule algebra dim mismatch");
    const auto basis = kernel_basis(coboundary_matrix(a, v, degree));
    SplitMix64 rng(seed);
    Vec coords = zero_vec(cochain_space_dim(degree, a.dim, v.mod_dim));
    for (const Vec& b : basis) {
        const long num = rng.in_range(-9, 9);
        const long den = rng.in_range(1, 3);
        const Rational coeff = frac(num, den);
        if (is_zero(coeff)) continue;
        for (std::size_t p = 0; p < coords.size(); ++p)
            if (!is_zero(b[p])) coords[p] += coeff * b[p];
    }
    return unflatten_cochain(degree, a.dim, v.mod_dim, coords);
}

} // namespace zinbiel
