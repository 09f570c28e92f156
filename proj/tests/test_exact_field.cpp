#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qlrec/rfmatrix.hpp"

using namespace qlrec;

namespace {

MultiPoly T(int e = 1) { return MultiPoly::var("t", e); }
MultiPoly X(int e = 1) { return MultiPoly::var("X", e); }
MultiPoly C(long v) { return MultiPoly::constant(v); }

// small random Laurent polynomial over {t, X, a}
MultiPoly random_poly(std::mt19937_64& rng) {
    static const char* names[3] = {"t", "X", "a"};
    std::uniform_int_distribution<int> nterms(0, 4), expo(-2, 2), coef(-5, 5), pick(0, 2);
    MultiPoly p;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        MultiPoly m = MultiPoly::constant(Rational(coef(rng)));
        m = m.shifted({{names[pick(rng)], expo(rng)}, {names[pick(rng)], expo(rng)}});
        p += m;
    }
    return p;
}

} // namespace

TEST_CASE("rational basics") {
    Rational r(2, 4);
    CHECK(r == Rational(1, 2));
    CHECK(r.str() == "1/2");
    CHECK(Rational(-3, 6).str() == "-1/2");
    CHECK(Rational::parse("7/21")->str() == "1/3");
    CHECK(Rational::parse("-4").has_value());
    CHECK(!Rational::parse("x").has_value());
    CHECK(!Rational::parse("1/0").has_value());
    CHECK(Rational(1, 3).decimal(5) == "0.33333");
    CHECK(Rational(-5, 2).decimal(10) == "-2.5");
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK_THROWS_AS(Rational(1).operator/=(Rational(0)), Error);
}

TEST_CASE("poly_arith examples") {
    // (t + 1)(t - 1) = t^2 - 1
    CHECK((T() + C(1)) * (T() - C(1)) == T(2) - C(1));
    // p + 0 = p
    MultiPoly p = T(3) + X(-1);
    CHECK(p + MultiPoly() == p);
    // (t^-1 + t) * t = 1 + t^2
    CHECK((T(-1) + T()) * T() == C(1) + T(2));
}

TEST_CASE("ring axioms on random values") {
    std::mt19937_64 rng(20240811);
    for (int i = 0; i < 200; ++i) {
        MultiPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == MultiPoly());
    }
}

TEST_CASE("substitute") {
    // u^2 with u -> t^3 gives t^6
    MultiPoly p = MultiPoly::var("u", 2);
    RatFunc r = substitute(p, {{"u", RatFunc(T(3))}});
    CHECK(ratfunc_eq(r, RatFunc(T(6))));
    // X + 1 with X -> 1/2 gives 3/2
    r = substitute(X() + C(1), {{"X", RatFunc(Rational(1, 2))}});
    CHECK(ratfunc_eq(r, RatFunc(Rational(3, 2))));
    // t - t^-1 with t -> 2/3 gives -5/6
    r = substitute(T() - T(-1), {{"t", RatFunc(Rational(2, 3))}});
    CHECK(ratfunc_eq(r, RatFunc(Rational(-5, 6))));
    // negative power of a zero binding
    CHECK_THROWS_AS(substitute(T(-1), {{"t", RatFunc(Rational(0))}}), Error);
}

TEST_CASE("substitute is a homomorphism") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(1, 9), den(1, 9);
    for (int i = 0; i < 100; ++i) {
        MultiPoly a = random_poly(rng), b = random_poly(rng);
        std::map<std::string, RatFunc> bind{
            {"t", RatFunc(Rational(num(rng), den(rng)))},
            {"X", RatFunc(T(1) + MultiPoly::constant(Rational(num(rng), den(rng))))},
        };
        RatFunc lhs = substitute(a * b, bind);
        RatFunc rhs = substitute(a, bind) * substitute(b, bind);
        CHECK(ratfunc_eq(lhs, rhs));
        CHECK(ratfunc_eq(substitute(a + b, bind), substitute(a, bind) + substitute(b, bind)));
    }
}

TEST_CASE("ratfunc equality by cross multiplication") {
    // (X^2 - 1)/(X - 1) == (X + 1)/1
    RatFunc lhs(X(2) - C(1), X() - C(1));
    CHECK(ratfunc_eq(lhs, RatFunc(X() + C(1))));
    // t/1 == t^2/t
    CHECK(ratfunc_eq(RatFunc(T()), RatFunc(T(2), T())));
    // 1/X != X/1
    CHECK(!ratfunc_eq(RatFunc(C(1), X()), RatFunc(X())));
}

TEST_CASE("try_divide") {
    MultiPoly p = (T() + X()) * (T(2) - X(3)) * MultiPoly::constant(Rational(3, 2));
    auto q = MultiPoly::try_divide(p, T() + X());
    REQUIRE(q.has_value());
    CHECK(*q == (T(2) - X(3)).scaled(Rational(3, 2)));
    CHECK(!MultiPoly::try_divide(p + C(1), T() + X()).has_value());
    // Laurent divisor
    auto q2 = MultiPoly::try_divide(p, T(-1));
    REQUIRE(q2.has_value());
    CHECK(*q2 == p * T(1));
}

TEST_CASE("nullspace examples") {
    // 1x2 [1, -1] -> {(1, 1)}
    RFMatrix m(1, 2);
    m.at(0, 0) = RatFunc(Rational(1));
    m.at(0, 1) = RatFunc(Rational(-1));
    auto b = nullspace(m);
    REQUIRE(b.size() == 1);
    CHECK(b[0][0] == C(1));
    CHECK(b[0][1] == C(1));

    // 2x2 identity -> empty
    RFMatrix id(2, 2);
    id.at(0, 0) = RatFunc(Rational(1));
    id.at(1, 1) = RatFunc(Rational(1));
    CHECK(nullspace(id).empty());

    // [[X, -1], [X^2, -X]] -> {(1, X)}
    RFMatrix r(2, 2);
    r.at(0, 0) = RatFunc(X());
    r.at(0, 1) = RatFunc(C(-1));
    r.at(1, 0) = RatFunc(X(2));
    r.at(1, 1) = RatFunc(-X());
    b = nullspace(r);
    REQUIRE(b.size() == 1);
    CHECK(b[0][0] == C(1));
    CHECK(b[0][1] == X());
}

TEST_CASE("nullspace vectors annihilate the matrix") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 4);
        std::size_t R = dim(rng), Cn = dim(rng);
        RFMatrix m(R, Cn);
        for (std::size_t i = 0; i < R; ++i)
            for (std::size_t j = 0; j < Cn; ++j) {
                MultiPoly den = random_poly(rng);
                m.at(i, j) = den.is_zero() ? RatFunc(random_poly(rng))
                                           : RatFunc(random_poly(rng), den);
            }
        auto basis = nullspace(m);
        for (const auto& v : basis) {
            for (std::size_t i = 0; i < R; ++i) {
                RatFunc s;
                for (std::size_t j = 0; j < Cn; ++j) s += m.at(i, j) * RatFunc(v[j]);
                CHECK(s.is_zero());
            }
        }
        // duplicated row forces dimension >= 1 when C >= 2
        if (Cn >= 2) {
            RFMatrix d(2, Cn);
            for (std::size_t j = 0; j < Cn; ++j) {
                d.at(0, j) = RatFunc(random_poly(rng));
                d.at(1, j) = d.at(0, j);
            }
            CHECK(nullspace(d).size() >= Cn - 1);
        }
    }
}

TEST_CASE("nonsingular square matrix has empty nullspace") {
    RFMatrix m(2, 2);
    m.at(0, 0) = RatFunc(T() + C(1));
    m.at(0, 1) = RatFunc(C(2));
    m.at(1, 0) = RatFunc(X());
    m.at(1, 1) = RatFunc(T() - X(2));
    CHECK(nullspace(m).empty());
}
