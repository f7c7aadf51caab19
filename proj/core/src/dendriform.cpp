#include "zinbiel/dendriform.hpp"

#include <string>
#include <utility>

#include "zinbiel/errors.hpp"
#include "zinbiel/rational.hpp"

namespace zinbiel {

namespace {

void require_shape(const TwoTermAinf& A, const std::string& who) {
    if (A.d.rows() != A.dim0 || A.d.cols() != A.dim1)
        throw domain_error(who + ": d must be dim0 x dim1");
    if (A.m2_00.shape() != std::vector<std::size_t>{A.dim0, A.dim0, A.dim0} ||
        A.m2_01.shape() != std::vector<std::size_t>{A.dim0, A.dim1, A.dim1} ||
        A.m2_10.shape() != std::vector<std::size_t>{A.dim1, A.dim0, A.dim1} ||
        A.m3.shape() != std::vector<std::size_t>{A.dim0, A.dim0, A.dim0, A.dim1})
        throw domain_error(who + ": tensor shape mismatch");
}

void store_vec(Tensor& t, std::vector<std::size_t> idx, const Vec& val) {
    for (std::size_t a = 0; a < val.size(); ++a) {
        if (is_zero(val[a])) continue;
        idx.back() = a;
        t.at(idx) = val[a];
    }
}

} // namespace

TwoTermAinf TwoTermAinf::zero(std::size_t dim0, std::size_t dim1) {
    return TwoTermAinf{dim0,
                       dim1,
                       Matrix(dim0, dim1),
                       Tensor({dim0, dim0, dim0}),
                       Tensor({dim0, dim1, dim1}),
                       Tensor({dim1, dim0, dim1}),
                       Tensor({dim0, dim0, dim0, dim1})};
}

TwoTermDend TwoTermDend::zero(std::size_t dim0, std::size_t dim1) {
    TwoTermDend out;
    out.dim0 = dim0;
    out.dim1 = dim1;
    out.d = Matrix(dim0, dim1);
    for (auto& t : out.mu2_00) t = Tensor({dim0, dim0, dim0});
    for (auto& t : out.mu2_01) t = Tensor({dim0, dim1, dim1});
    for (auto& t : out.mu2_10) t = Tensor({dim1, dim0, dim1});
    for (auto& t : out.mu3) t = Tensor({dim0, dim0, dim0, dim1});
    return out;
}

CheckReport check_ainf(const TwoTermAinf& A) {
    require_shape(A, "check_ainf");
    CheckReport rep{"ainf",
                    {ConditionReport{"b1", false, {}}, ConditionReport{"b2", false, {}},
                     ConditionReport{"c", false, {}}, ConditionReport{"d", false, {}},
                     ConditionReport{"e1", false, {}}, ConditionReport{"e2", false, {}},
                     ConditionReport{"e3", false, {}}, ConditionReport{"f", false, {}},
                     ConditionReport{"e1_verbatim", true, {}},
                     ConditionReport{"e2_verbatim", true, {}},
                     ConditionReport{"e3_verbatim", true, {}},
                     ConditionReport{"f_verbatim", true, {}}}};
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
    ConditionReport& fv = rep.conditions[11];
    const std::size_t n0 = A.dim0, n1 = A.dim1;

    for (std::size_t i = 0; i < n0; ++i) {
        const Vec x = unit_vec(n0, i);
        for (std::size_t p = 0; p < n1; ++p) {
            const Vec h = unit_vec(n1, p), dh = A.d.column(p);

            Vec rb1 = A.apply_d(A.apply_m2_01(x, h));
            sub_in(rb1, A.apply_m2_00(x, dh));
            if (!is_zero(rb1)) b1.violations.push_back({{i, p}, std::move(rb1)});

            Vec rb2 = A.apply_d(A.apply_m2_10(h, x));
            sub_in(rb2, A.apply_m2_00(dh, x));
            if (!is_zero(rb2)) b2.violations.push_back({{p, i}, std::move(rb2)});
        }
    }

    for (std::size_t p = 0; p < n1; ++p) {
        const Vec h = unit_vec(n1, p), dh = A.d.column(p);
        for (std::size_t q = 0; q < n1; ++q) {
            Vec rc = A.apply_m2_01(dh, unit_vec(n1, q));
            sub_in(rc, A.apply_m2_10(h, A.d.column(q)));
            if (!is_zero(rc)) c.violations.push_back({{p, q}, std::move(rc)});
        }
    }

    for (std::size_t i = 0; i < n0; ++i) {
        const Vec x = unit_vec(n0, i);
        for (std::size_t j = 0; j < n0; ++j) {
            const Vec y = unit_vec(n0, j);
            const Vec xy = A.apply_m2_00(x, y);
            for (std::size_t k = 0; k < n0; ++k) {
                const Vec z = unit_vec(n0, k);
                Vec rd = A.apply_d(A.apply_m3(x, y, z));
                sub_in(rd, A.apply_m2_00(x, A.apply_m2_00(y, z)));
                add_in(rd, A.apply_m2_00(xy, z));
                if (!is_zero(rd)) d.violations.push_back({{i, j, k}, std::move(rd)});
            }
        }
    }

    for (std::size_t i = 0; i < n0; ++i) {
        const Vec x = unit_vec(n0, i);
        for (std::size_t j = 0; j < n0; ++j) {
            const Vec y = unit_vec(n0, j);
            const Vec xy = A.apply_m2_00(x, y);
            for (std::size_t p = 0; p < n1; ++p) {
                const Vec h = unit_vec(n1, p), dh = A.d.column(p);

                Vec re1 = A.apply_m3(x, y, dh);
                sub_in(re1, A.apply_m2_01(x, A.apply_m2_01(y, h)));
                add_in(re1, A.apply_m2_01(xy, h));
                if (!is_zero(re1)) e1.violations.push_back({{i, j, p}, std::move(re1)});

                /* Recorded alternative reading; its right side cancels. */
                Vec re1v = A.apply_m3(x, y, dh);
                if (!is_zero(re1v)) e1v.violations.push_back({{i, j, p}, std::move(re1v)});
            }
        }
    }

    for (std::size_t i = 0; i < n0; ++i) {
        const Vec x = unit_vec(n0, i);
        for (std::size_t p = 0; p < n1; ++p) {
            const Vec h = unit_vec(n1, p), dh = A.d.column(p);
            const Vec xh = A.apply_m2_01(x, h);
            for (std::size_t k = 0; k < n0; ++k) {
                const Vec z = unit_vec(n0, k);

                Vec re2 = A.apply_m3(x, dh, z);
                sub_in(re2, A.apply_m2_01(x, A.apply_m2_10(h, z)));
                add_in(re2, A.apply_m2_10(xh, z));
                if (!is_zero(re2)) e2.violations.push_back({{i, p, k}, std::move(re2)});

                Vec re2v = A.apply_m3(x, dh, z);
                sub_in(re2v, A.apply_m2_10(xh, z));
                add_in(re2v, A.apply_m2_01(x, A.apply_m2_10(h, z)));
                if (!is_zero(re2v)) e2v.violations.push_back({{i, p, k}, std::move(re2v)});
            }
        }
    }

    for (std::size_t p = 0; p < n1; ++p) {
        const Vec h = unit_vec(n1, p), dh = A.d.column(p);
        for (std::size_t j = 0; j < n0; ++j) {
            const Vec y = unit_vec(n0, j);
            const Vec hy = A.apply_m2_10(h, y);
            for (std::size_t k = 0; k < n0; ++k) {
                const Vec z = unit_vec(n0, k);

                Vec re3 = A.apply_m3(dh, y, z);
                sub_in(re3, A.apply_m2_10(h, A.apply_m2_00(y, z)));
                add_in(re3, A.apply_m2_10(hy, z));
                if (!is_zero(re3)) e3.violations.push_back({{p, j, k}, std::move(re3)});

                Vec re3v = A.apply_m3(dh, y, z);
                sub_in(re3v, A.apply_m2_10(hy, z));
                add_in(re3v, A.apply_m2_10(h, A.apply_m2_00(y, z)));
                if (!is_zero(re3v)) e3v.violations.push_back({{p, j, k}, std::move(re3v)});
            }
        }
    }

    for (std::size_t i = 0; i < n0; ++i) {
        const Vec x = unit_vec(n0, i);
        for (std::size_t j = 0; j < n0; ++j) {
            const Vec y = unit_vec(n0, j);
            const Vec xy = A.apply_m2_00(x, y);
            for (std::size_t k = 0; k < n0; ++k) {
                const Vec z = unit_vec(n0, k);
                const Vec yz = A.apply_m2_00(y, z);
                for (std::size_t t = 0; t < n0; ++t) {
                    const Vec w = unit_vec(n0, t);

                    Vec rf = A.apply_m2_01(x, A.apply_m3(y, z, w));
                    sub_in(rf, A.apply_m3(xy, z, w));
                    add_in(rf, A.apply_m3(x, yz, w));
                    sub_in(rf, A.apply_m3(x, y, A.apply_m2_00(z, w)));
                    add_in(rf, A.apply_m2_10(A.apply_m3(x, y, z), w));
                    if (!is_zero(rf)) f.violations.push_back({{i, j, k, t}, std::move(rf)});

                    Vec rfv = A.apply_m2_01(x, A.apply_m3(y, z, w));
                    sub_in(rfv, A.apply_m3(xy, z, w));
                    add_in(rfv, A.apply_m3(x, yz, w));
                    sub_in(rfv, A.apply_m3(y, z, A.apply_m2_00(x, w)));
                    add_in(rfv, A.apply_m2_10(A.apply_m3(x, y, z), w));
                    if (!is_zero(rfv)) fv.violations.push_back({{i, j, k, t}, std::move(rfv)});
                }
            }
        }
    }
    return rep;
}

CheckReport check_cinf(const TwoTermAinf& A) {
    CheckReport rep = check_ainf(A);
    rep.subject = "cinf";
    rep.conditions.push_back(ConditionReport{"m2_commutative", false, {}});
    rep.conditions.push_back(ConditionReport{"m3_commutative", false, {}});
    ConditionReport& m2c = rep.conditions[rep.conditions.size() - 2];
    ConditionReport& m3c = rep.conditions.back();
    const std::size_t n0 = A.dim0, n1 = A.dim1;

    for (std::size_t i = 0; i < n0; ++i)
        for (std::size_t j = i + 1; j < n0; ++j) {
            Vec diff(n0);
            for (std::size_t k = 0; k < n0; ++k)
                diff[k] = A.m2_00.at({i, j, k}) - A.m2_00.at({j, i, k});
            if (!is_zero(diff)) m2c.violations.push_back({{0, i, j}, std::move(diff)});
        }
    for (std::size_t i = 0; i < n0; ++i)
        for (std::size_t p = 0; p < n1; ++p) {
            Vec diff(n1);
            for (std::size_t q = 0; q < n1; ++q)
                diff[q] = A.m2_01.at({i, p, q}) - A.m2_10.at({p, i, q});
            if (!is_zero(diff)) m2c.violations.push_back({{1, i, p}, std::move(diff)});
        }

    constexpr std::size_t perms[5][3] = {{1, 0, 2}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (std::size_t s = 0; s < 5; ++s)
        for (std::size_t i = 0; i < n0; ++i)
            for (std::size_t j = 0; j < n0; ++j)
                for (std::size_t k = 0; k < n0; ++k) {
                    const std::size_t idx[3] = {i, j, k};
                    Vec diff(n1);
                    for (std::size_t a = 0; a < n1; ++a)
                        diff[a] = A.m3.at({i, j, k, a}) -
                                  A.m3.at({idx[perms[s][0]], idx[perms[s][1]],
                                           idx[perms[s][2]], a});
                    if (!is_zero(diff)) m3c.violations.push_back({{s + 1, i, j, k},
                                                                  std::move(diff)});
                }
    return rep;
}

TwoTermAinf symmetrize_zinf(const TwoTermZinf& L) {
    TwoTermAinf out = TwoTermAinf::zero(L.dim0, L.dim1);
    out.d = L.d;
    const Rational half = frac(1, 2), sixth = frac(1, 6);
    const std::size_t n0 = L.dim0, n1 = L.dim1;

    for (std::size_t i = 0; i < n0; ++i)
        for (std::size_t j = 0; j < n0; ++j)
            for (std::size_t k = 0; k < n0; ++k) {
                const Rational v = half * (L.l2_00.at({i, j, k}) + L.l2_00.at({j, i, k}));
                if (!is_zero(v)) out.m2_00.at({i, j, k}) = v;
            }
    for (std::size_t i = 0; i < n0; ++i)
        for (std::size_t p = 0; p < n1; ++p)
            for (std::size_t q = 0; q < n1; ++q) {
                const Rational v = half * (L.l2_01.at({i, p, q}) + L.l2_10.at({p, i, q}));
                if (is_zero(v)) continue;
                out.m2_01.at({i, p, q}) = v;
                out.m2_10.at({p, i, q}) = v;
            }
    for (std::size_t i = 0; i < n0; ++i)
        for (std::size_t j = 0; j < n0; ++j)
            for (std::size_t k = 0; k < n0; ++k)
                for (std::size_t a = 0; a < n1; ++a) {
                    const Rational v =
                        sixth * (L.l3.at({i, j, k, a}) + L.l3.at({j, k, i, a}) +
                                 L.l3.at({k, i, j, a}) + L.l3.at({j, i, k, a}) +
                                 L.l3.at({k, j, i, a}) + L.l3.at({i, k, j, a}));
                    if (!is_zero(v)) out.m3.at({i, j, k, a}) = v;
                }
    return out;
}

TwoTermDend dendrify(const TwoTermZinf& L) {
    TwoTermDend out = TwoTermDend::zero(L.dim0, L.dim1);
    out.d = L.d;
    out.mu2_00[0] = L.l2_00;
    out.mu2_01[0] = L.l2_01;
    out.mu2_10[0] = L.l2_10;
    const std::size_t n0 = L.dim0, n1 = L.dim1;

    for (std::size_t i = 0; i < n0; ++i)
        for (std::size_t j = 0; j < n0; ++j)
            for (std::size_t k = 0; k < n0; ++k) {
                const Rational& v = L.l2_00.at({j, i, k});
                if (!is_zero(v)) out.mu2_00[1].at({i, j, k}) = v;
            }
    for (std::size_t i = 0; i < n0; ++i)
        for (std::size_t p = 0; p < n1; ++p)
            for (std::size_t q = 0; q < n1; ++q) {
                const Rational& flip01 = L.l2_10.at({p, i, q});
                if (!is_zero(flip01)) out.mu2_01[1].at({i, p, q}) = flip01;
                const Rational& flip10 = L.l2_01.at({i, p, q});
                if (!is_zero(flip10)) out.mu2_10[1].at({p, i, q}) = flip10;
            }
    out.mu3[0] = L.l3;
    for (std::size_t i = 0; i < n0; ++i)
        for (std::size_t j = 0; j < n0; ++j)
            for (std::size_t k = 0; k < n0; ++k)
                for (std::size_t a = 0; a < n1; ++a) {
                    const Rational& cyc1 = L.l3.at({j, k, i, a});
                    if (!is_zero(cyc1)) out.mu3[1].at({i, j, k, a}) = cyc1;
                    const Rational& cyc2 = L.l3.at({k, i, j, a});
                    if (!is_zero(cyc2)) out.mu3[2].at({i, j, k, a}) = cyc2;
                }
    return out;
}

TwoTermAinf totalize(const TwoTermDend& D) {
    TwoTermAinf out = TwoTermAinf::zero(D.dim0, D.dim1);
    out.d = D.d;
    out.m2_00 = D.mu2_00[0] + D.mu2_00[1];
    out.m2_01 = D.mu2_01[0] + D.mu2_01[1];
    out.m2_10 = D.mu2_10[0] + D.mu2_10[1];
    out.m3 = D.mu3[0] + D.mu3[1] + D.mu3[2];
    return out;
}

CheckReport check_rota_baxter(const RotaBaxter2& R, const TwoTermAinf& A) {
    require_shape(A, "check_rota_baxter");
    if (R.r0.rows() != A.dim0 || R.r0.cols() != A.dim0 || R.r1.rows() != A.dim1 ||
        R.r1.cols() != A.dim1)
        throw domain_error("check_rota_baxter: operator shapes mismatch");

    CheckReport rep{"rota_baxter",
                    {ConditionReport{"rb_00", false, {}}, ConditionReport{"rb_01", false, {}},
                     ConditionReport{"rb_10", false, {}}, ConditionReport{"rb_m3", false, {}}}};
    const std::size_t n0 = A.dim0, n1 = A.dim1;

    for (std::size_t i = 0; i < n0; ++i) {
        const Vec x = unit_vec(n0, i), rx = R.r0.column(i);
        for (std::size_t j = 0; j < n0; ++j) {
            const Vec y = unit_vec(n0, j), ry = R.r0.column(j);
            Vec r = A.apply_m2_00(rx, ry);
            sub_in(r, R.r0.apply(add(A.apply_m2_00(x, ry), A.apply_m2_00(rx, y))));
            if (!is_zero(r)) rep.conditions[0].violations.push_back({{i, j}, std::move(r)});
        }
        for (std::size_t p = 0; p < n1; ++p) {
            const Vec h = unit_vec(n1, p), rh = R.r1.column(p);

            Vec r01 = A.apply_m2_01(rx, rh);
            sub_in(r01, R.r1.apply(add(A.apply_m2_01(x, rh), A.apply_m2_01(rx, h))));
            if (!is_zero(r01)) rep.conditions[1].violations.push_back({{i, p}, std::move(r01)});

            Vec r10 = A.apply_m2_10(rh, rx);
            sub_in(r10, R.r1.apply(add(A.apply_m2_10(h, rx), A.apply_m2_10(rh, x))));
            if (!is_zero(r10)) rep.conditions[2].violations.push_back({{p, i}, std::move(r10)});
        }
    }

    for (std::size_t i = 0; i < n0; ++i) {
        const Vec x = unit_vec(n0, i), rx = R.r0.column(i);
        for (std::size_t j = 0; j < n0; ++j) {
            const Vec y = unit_vec(n0, j), ry = R.r0.column(j);
            for (std::size_t k = 0; k < n0; ++k) {
                const Vec z = unit_vec(n0, k), rz = R.r0.column(k);
                Vec r = A.apply_m3(rx, ry, rz);
                Vec inner = A.apply_m3(x, ry, rz);
                add_in(inner, A.apply_m3(rx, y, rz));
                add_in(inner, A.apply_m3(rx, ry, z));
                sub_in(r, R.r1.apply(inner));
                if (!is_zero(r)) rep.conditions[3].violations.push_back({{i, j, k}, std::move(r)});
            }
        }
    }
    return rep;
}

TwoTermZinf zinf_from_rb(const TwoTermAinf& A, const RotaBaxter2& R) {
    require_pass(check_cinf(A), "zinf_from_rb");
    require_pass(check_rota_baxter(R, A), "zinf_from_rb");

    TwoTermZinf out = TwoTermZinf::zero(A.dim0, A.dim1);
    out.d = A.d;
    const std::size_t n0 = A.dim0, n1 = A.dim1;
    for (std::size_t i = 0; i < n0; ++i) {
        const Vec x = unit_vec(n0, i), rx = R.r0.column(i);
        for (std::size_t j = 0; j < n0; ++j) {
            const Vec y = unit_vec(n0, j);
            store_vec(out.l2_00, {i, j, 0},
                      add(A.apply_m2_00(x, R.r0.column(j)), A.apply_m2_00(rx, y)));
        }
        for (std::size_t p = 0; p < n1; ++p) {
            const Vec h = unit_vec(n1, p), rh = R.r1.column(p);
            store_vec(out.l2_01, {i, p, 0},
                      add(A.apply_m2_01(x, rh), A.apply_m2_01(rx, h)));
            store_vec(out.l2_10, {p, i, 0},
                      add(A.apply_m2_10(h, rx), A.apply_m2_10(rh, x)));
        }
        for (std::size_t j = 0; j < n0; ++j) {
            const Vec y = unit_vec(n0, j), ry = R.r0.column(j);
            for (std::size_t k = 0; k < n0; ++k) {
                const Vec z = unit_vec(n0, k), rz = R.r0.column(k);
                Vec val = A.apply_m3(x, ry, rz);
                add_in(val, A.apply_m3(rx, y, rz));
                add_in(val, A.apply_m3(rx, ry, z));
                store_vec(out.l3, {i, j, k, 0}, val);
            }
        }
    }
    return out;
}

} // namespace zinbiel
