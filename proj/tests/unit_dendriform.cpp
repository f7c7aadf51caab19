#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include <zinbiel/dendriform.hpp>

#include "fixtures.hpp"

using namespace zinbiel;

namespace {

TwoTermZinf skeletal_fixture(std::uint64_t seed) {
    Algebra a = fixtures::nilpotent2();
    Bimodule v = regular_bimodule(a);
    return skeletal_from_cocycle(a, v, random_cocycle(a, v, 3, seed));
}

RotaBaxter2 cyclic_operator(long a, long b, long c) {
    RotaBaxter2 R;
    R.r0 = Matrix(3, 3);
    R.r0.at(1, 0) = a;
    R.r0.at(2, 1) = b;
    R.r0.at(0, 2) = c;
    R.r1 = R.r0;
    return R;
}

} // namespace

TEST_CASE("associative checker on the commutative fixture") {
    TwoTermAinf A = fixtures::rb_ainf();
    CheckReport r = check_ainf(A);
    CHECK(r.subject == "ainf");
    CHECK(r.pass());
    CHECK(check_ainf(TwoTermAinf::zero(2, 3)).pass());

    CheckReport c = check_cinf(A);
    CHECK(c.subject == "cinf");
    CHECK(c.pass());
    REQUIRE(c.find("m2_commutative") != nullptr);
    REQUIRE(c.find("m3_commutative") != nullptr);
}

TEST_CASE("associativity failures are located") {
    TwoTermAinf A = fixtures::rb_ainf();
    A.m2_00.at({1, 1, 2}) = 7; // x2 x2 = 7 x3 breaks associativity at degree 0
    CheckReport r = check_ainf(A);
    CHECK_FALSE(r.pass());
    const ConditionReport* d = r.find("d");
    REQUIRE(d != nullptr);
    CHECK_FALSE(d->ok());
}

TEST_CASE("commutativity failures are located") {
    TwoTermAinf A = fixtures::rb_ainf();
    A.m2_01.at({0, 1, 2}) += 1; // mixed product no longer matches its flip
    CheckReport r = check_cinf(A);
    CHECK_FALSE(r.pass());
    const ConditionReport* c = r.find("m2_commutative");
    REQUIRE(c != nullptr);
    REQUIRE_FALSE(c->violations.empty());
    CHECK(c->violations[0].at == std::vector<std::size_t>{1, 0, 1});
}

TEST_CASE("averaging map: component formulas") {
    TwoTermZinf L = fixtures::perturb_l3(strict_from_crossed(fixtures::crossed_ts3()), 13);
    L.l2_00.at({1, 0, 2}) = frac(5, 3); // make the binary part visibly asymmetric
    TwoTermAinf A = symmetrize_zinf(L);
    CHECK(A.d == L.d);
    const Rational half = frac(1, 2), sixth = frac(1, 6);
    for (std::size_t i = 0; i < L.dim0; ++i)
        for (std::size_t j = 0; j < L.dim0; ++j)
            for (std::size_t k = 0; k < L.dim0; ++k)
                CHECK(A.m2_00.at({i, j, k}) ==
                      half * (L.l2_00.at({i, j, k}) + L.l2_00.at({j, i, k})));
    for (std::size_t i = 0; i < L.dim0; ++i)
        for (std::size_t p = 0; p < L.dim1; ++p)
            for (std::size_t q = 0; q < L.dim1; ++q) {
                Rational v = half * (L.l2_01.at({i, p, q}) + L.l2_10.at({p, i, q}));
                CHECK(A.m2_01.at({i, p, q}) == v);
                CHECK(A.m2_10.at({p, i, q}) == v);
            }
    for (std::size_t i = 0; i < L.dim0; ++i)
        for (std::size_t j = 0; j < L.dim0; ++j)
            for (std::size_t k = 0; k < L.dim0; ++k)
                for (std::size_t a = 0; a < L.dim1; ++a)
                    CHECK(A.m3.at({i, j, k, a}) ==
                          sixth * (L.l3.at({i, j, k, a}) + L.l3.at({j, k, i, a}) +
                                   L.l3.at({k, i, j, a}) + L.l3.at({j, i, k, a}) +
                                   L.l3.at({k, j, i, a}) + L.l3.at({i, k, j, a})));
}

TEST_CASE("averaging strict structures gives a commutative associative pair") {
    for (const CrossedModule& x : fixtures::all_crossed()) {
        TwoTermZinf L = strict_from_crossed(x);
        TwoTermAinf A = symmetrize_zinf(L);
        CHECK(check_cinf(A).pass());
        CHECK(check_ainf(A).pass());
    }
}

TEST_CASE("averaging any passing structure satisfies everything except possibly the pentagon") {
    for (std::uint64_t seed : {5u, 6u}) {
        TwoTermZinf L = skeletal_fixture(seed);
        REQUIRE(check_zinf(L).pass());
        CheckReport r = check_cinf(symmetrize_zinf(L));
        for (const ConditionReport& c : r.conditions) {
            if (c.informational || c.id == "f") continue;
            CAPTURE(c.id);
            CHECK(c.ok());
        }
    }
}

TEST_CASE("splitting: components and totals") {
    TwoTermZinf L = fixtures::perturb_l3(strict_from_crossed(fixtures::crossed_ts3()), 13);
    TwoTermDend D = dendrify(L);
    CHECK(D.d == L.d);
    CHECK(D.mu2_00[0] == L.l2_00);
    CHECK(D.mu2_01[0] == L.l2_01);
    CHECK(D.mu2_10[0] == L.l2_10);
    CHECK(D.mu3[0] == L.l3);
    for (std::size_t i = 0; i < L.dim0; ++i)
        for (std::size_t j = 0; j < L.dim0; ++j)
            for (std::size_t k = 0; k < L.dim0; ++k)
                CHECK(D.mu2_00[1].at({i, j, k}) == L.l2_00.at({j, i, k}));
    for (std::size_t i = 0; i < L.dim0; ++i)
        for (std::size_t p = 0; p < L.dim1; ++p)
            for (std::size_t q = 0; q < L.dim1; ++q) {
                CHECK(D.mu2_01[1].at({i, p, q}) == L.l2_10.at({p, i, q}));
                CHECK(D.mu2_10[1].at({p, i, q}) == L.l2_01.at({i, p, q}));
            }
    for (std::size_t i = 0; i < L.dim0; ++i)
        for (std::size_t j = 0; j < L.dim0; ++j)
            for (std::size_t k = 0; k < L.dim0; ++k)
                for (std::size_t a = 0; a < L.dim1; ++a) {
                    CHECK(D.mu3[1].at({i, j, k, a}) == L.l3.at({j, k, i, a}));
                    CHECK(D.mu3[2].at({i, j, k, a}) == L.l3.at({k, i, j, a}));
                }

    TwoTermAinf T = totalize(D);
    CHECK(T.d == L.d);
    CHECK(T.m2_00 == D.mu2_00[0] + D.mu2_00[1]);
    CHECK(T.m2_01 == D.mu2_01[0] + D.mu2_01[1]);
    CHECK(T.m2_10 == D.mu2_10[0] + D.mu2_10[1]);
    CHECK(T.m3 == D.mu3[0] + D.mu3[1] + D.mu3[2]);

    // the binary layers of the total agree with twice the average; the
    // ternary layers differ (three cyclic terms against six)
    TwoTermAinf S = symmetrize_zinf(L);
    CHECK(T.m2_00 == S.m2_00.scaled(2));
    CHECK(T.m2_01 == S.m2_01.scaled(2));
    CHECK(T.m2_10 == S.m2_10.scaled(2));
}

TEST_CASE("totalized splitting of a strict structure is associative") {
    for (const CrossedModule& x : fixtures::all_crossed()) {
        TwoTermZinf L = strict_from_crossed(x);
        CHECK(check_ainf(totalize(dendrify(L))).pass());
    }
}

TEST_CASE("weight-zero operator identities over the cyclic family") {
    TwoTermAinf A = fixtures::rb_ainf();
    CHECK(check_rota_baxter(fixtures::rb_shift(), A).pass());

    for (long a = -1; a <= 1; ++a)
        for (long b = -1; b <= 1; ++b)
            for (long c = -1; c <= 1; ++c) {
                RotaBaxter2 R = cyclic_operator(a, b, c);
                CheckReport r = check_rota_baxter(R, A);
                CHECK(r.subject == "rota_baxter");
                CAPTURE(a);
                CAPTURE(b);
                CAPTURE(c);
                if (c == 0) {
                    CHECK(r.pass());
                } else {
                    CHECK_FALSE(r.pass());
                    const ConditionReport* rb00 = r.find("rb_00");
                    REQUIRE(rb00 != nullptr);
                    REQUIRE_FALSE(rb00->violations.empty());
                    bool at_22 = false;
                    for (const Violation& v : rb00->violations)
                        if (v.at == std::vector<std::size_t>{2, 2}) at_22 = true;
                    CHECK(at_22);
                }
            }

    CHECK_THROWS_AS(check_rota_baxter(RotaBaxter2{Matrix(2, 2), Matrix(3, 3)}, A),
                    domain_error);
}

TEST_CASE("bracket induced by the operator") {
    TwoTermAinf A = fixtures::rb_ainf();
    RotaBaxter2 R = fixtures::rb_shift();
    TwoTermZinf L = zinf_from_rb(A, R);

    CHECK(L.dim0 == 3);
    CHECK(L.dim1 == 3);
    CHECK(L.d == A.d);
    CHECK(L.l3.is_zero());

    // only x1 against x1 survives: m2(x1, Rx1) + m2(Rx1, x1) = 3 x3
    Tensor expected({3, 3, 3});
    expected.at({0, 0, 2}) = 3;
    CHECK(L.l2_00 == expected);
    CHECK(L.l2_01 == expected);
    CHECK(L.l2_10 == expected);

    CHECK(check_zinf(L).pass());
    Algebra induced{3, {}, L.l2_00};
    CHECK(check_zinbiel(induced).pass());

    // component formulas on every basis pair
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            Vec x = unit_vec(3, i);
            Vec y = unit_vec(3, j);
            Vec expect = A.apply_m2_00(x, R.r0.apply(y));
            add_in(expect, A.apply_m2_00(R.r0.apply(x), y));
            CHECK(L.apply_l2_00(x, y) == expect);
        }
}

TEST_CASE("operator bracket preconditions") {
    TwoTermAinf A = fixtures::rb_ainf();
    CHECK_THROWS_AS(zinf_from_rb(A, cyclic_operator(1, 1, 1)), precondition_error);

    TwoTermAinf lopsided = A;
    lopsided.m2_01.at({0, 1, 2}) += 1; // no longer commutative
    CHECK_THROWS_AS(zinf_from_rb(lopsided, fixtures::rb_shift()), precondition_error);
}
