#pragma once

#include "uniflip/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace uniflip {

/// Univariate polynomial over Q in the indeterminate u. Coefficients are stored
/// lowest degree first with no trailing zeros; the zero polynomial is empty.
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Rational> coeffs);
    explicit Poly(std::vector<Rational> coeffs);

    static Poly constant(const Rational& c);
    static Poly monomial(const Rational& c, std::size_t degree);

    /// Degree, or std::nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const;
    /// Smallest exponent with nonzero coefficient, std::nullopt for zero.
    std::optional<std::size_t> valuation() const;

    bool is_zero() const { return c_.empty(); }
    /// Coefficient of u^k (zero beyond the degree).
    Rational coeff(std::size_t k) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& x) const;
    /// Least common multiple of the coefficient denominators.
    mpz_class denominator_lcm() const;
    bool has_integer_coeffs() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
    Poly operator-() const;

    friend bool operator==(const Poly& a, const Poly& b) = default;

    /// Renders as e.g. "1 + 2u - 1/2u^3".
    std::string str() const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// p(-u).
Poly poly_negate_variable(const Poly& p);

/// Exact division with zero remainder; std::nullopt if the divisor does not
/// divide. The divisor must be nonzero.
std::optional<Poly> poly_divide_exact(const Poly& num, const Poly& den);

Poly poly_pow(const Poly& p, unsigned e);

/// u^deg p(1/u) for deg >= degree(p).
Poly poly_reverse(const Poly& p, std::size_t deg);

/// Power series truncated at a fixed order: coefficients of u^0..u^order.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order);
    TruncatedSeries(const Poly& p, std::size_t order);

    std::size_t order() const { return c_.size() - 1; }
    const Rational& operator[](std::size_t k) const { return c_[k]; }
    Rational& operator[](std::size_t k) { return c_[k]; }

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const Rational& s);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

    /// Multiplicative inverse; throws ZeroConstantTerm if the constant term vanishes.
    TruncatedSeries inverse() const;

    /// The polynomial obtained by dropping nothing (all stored terms).
    Poly to_poly() const;

private:
    std::vector<Rational> c_;
};

/// Returns the polynomial q with deg q <= expected_degree and numer = denom * q
/// through the full truncation order of both inputs.
///
/// Throws ZeroConstantTerm when denom(0) == 0 and NonPolynomialQuotient when the
/// series quotient has a nonzero coefficient beyond expected_degree.
Poly series_divide_exact(const TruncatedSeries& numer, const TruncatedSeries& denom,
                         std::size_t expected_degree);

/// Truncation order used for an exact quotient of the given degree:
/// 2 * degree + 1 plus the process-wide extra margin.
std::size_t series_guard_order(std::size_t expected_degree);
/// Extra coefficients checked beyond the default guard band.
void set_series_guard_extra(std::size_t extra);

}  // namespace uniflip
