#include "support.hpp"

#include "uniflip/cyclotomic.hpp"
#include "uniflip/error.hpp"
#include "uniflip/matrix.hpp"

#include <doctest.h>

#include <random>

using namespace uniflip;
using test::P;
using test::u;

TEST_SUITE("algebra") {

TEST_CASE("rationals stay in lowest terms") {
    const Rational r(6, -4);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational::parse("10/-4") == Rational(-5, 2));
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("rational field axioms on random triples") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> d(-50, 50), n(1, 40);
    for (int i = 0; i < 300; ++i) {
        const Rational a(d(rng), n(rng)), b(d(rng), n(rng)), c(d(rng), n(rng));
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(Rational(a.numerator(), a.denominator()) == a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("negating the variable") {
    CHECK(poly_negate_variable(P({1, 2, 1})) == P({1, -2, 1}));
    CHECK(poly_negate_variable(u(4)) == u(4));
    CHECK(poly_negate_variable(u(3)) == -u(3));
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> d(-9, 9);
    for (int i = 0; i < 50; ++i) {
        const Poly p = P({d(rng), d(rng), d(rng), d(rng), d(rng)});
        CHECK(poly_negate_variable(poly_negate_variable(p)) == p);
        CHECK(poly_negate_variable(p).degree() == p.degree());
    }
}

TEST_CASE("zero polynomial has no degree") {
    CHECK(Poly().is_zero());
    CHECK_FALSE(Poly().degree().has_value());
    CHECK(P({0, 0}).is_zero());
    CHECK(P({1, 0, 3, 0}).degree() == 2u);
}

TEST_CASE("exact series division") {
    const std::size_t order = series_guard_order(4);
    const Poly numer = (P({1}) - u(2)) * (P({1}) - u(4));
    const Poly denom = P({1, -1}) * P({1, -1});
    CHECK(series_divide_exact(TruncatedSeries(numer, order), TruncatedSeries(denom, order), 4) ==
          P({1, 2, 2, 2, 1}));
    CHECK(series_divide_exact(TruncatedSeries(P({1}), 1), TruncatedSeries(P({1}), 1), 0) == P({1}));
    try {
        series_divide_exact(TruncatedSeries(P({1}), 1), TruncatedSeries(P({1, -1}), 1), 0);
        FAIL("expected NonPolynomialQuotient");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonPolynomialQuotient);
    }
    try {
        series_divide_exact(TruncatedSeries(P({1}), 3), TruncatedSeries(P({0, 1}), 3), 1);
        FAIL("expected ZeroConstantTerm");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ZeroConstantTerm);
    }
}

TEST_CASE("series division inverts multiplication on random inputs") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> d(-6, 6), nz(1, 6);
    for (int i = 0; i < 60; ++i) {
        const Poly a = P({d(rng), d(rng), d(rng), d(rng)});
        const Poly b = P({nz(rng), d(rng), d(rng)});
        const std::size_t deg = 3;
        const std::size_t order = series_guard_order(deg) + 2;
        CHECK(series_divide_exact(TruncatedSeries(a * b, order), TruncatedSeries(b, order), deg) == a);
    }
}

TEST_CASE("guard band override widens the check") {
    set_series_guard_extra(3);
    CHECK(series_guard_order(4) == 12u);
    set_series_guard_extra(0);
    CHECK(series_guard_order(4) == 9u);
}

TEST_CASE("cyclotomic normal form") {
    const Cyclotomic z3 = Cyclotomic::zeta(12, 4);
    CHECK((Cyclotomic(12, 1) + z3 + z3 * z3).is_zero());
    const Cyclotomic i = Cyclotomic::zeta(12, 3);
    CHECK(i * i == Cyclotomic(12, -1));
    CHECK((i * i).is_rational());
    CHECK(z3 * (z3 * z3) == Cyclotomic(12, 1));
    CHECK_FALSE(z3.is_rational());
    CHECK(z3.conj() == z3 * z3);
    CHECK((z3 + z3.conj()).rational_value() == Rational(-1));
    CHECK(cyclo_reduce(3, {Rational(1), Rational(1), Rational(1)}).is_zero());
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == P({-1, 1}));
    CHECK(cyclotomic_polynomial(4) == P({1, 0, 1}));
    CHECK(cyclotomic_polynomial(6) == P({1, -1, 1}));
    CHECK(cyclotomic_polynomial(12) == P({1, 0, -1, 0, 1}));
}

TEST_CASE("characteristic polynomials of integer matrices") {
    IntMatrix rot(2, 2);
    rot(0, 1) = -1;
    rot(1, 0) = 1;
    CHECK(det_u_minus(rot) == P({1, 0, 1}));
    CHECK(det_one_minus_u(rot) == P({1, 0, 1}));
    CHECK(det_u_minus(IntMatrix::identity(3)) == poly_pow(P({-1, 1}), 3));
}

}
