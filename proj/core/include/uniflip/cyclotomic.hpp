#pragma once

#include "uniflip/poly.hpp"
#include "uniflip/rational.hpp"

#include <memory>
#include <string>
#include <vector>

namespace uniflip {

/// The field Q(zeta_n) with basis 1, zeta, ..., zeta^{phi(n)-1}.
class CyclotomicField {
public:
    /// Shared immutable instance for order n (memoized, thread-safe).
    static std::shared_ptr<const CyclotomicField> get(int n);

    int order() const { return n_; }
    int dimension() const { return phi_; }
    /// Coordinates of zeta^k (k taken mod n).
    const std::vector<Rational>& power(long k) const;
    const Poly& minimal_polynomial() const { return phi_poly_; }

    explicit CyclotomicField(int n);

private:
    int n_;
    int phi_;
    Poly phi_poly_;
    std::vector<std::vector<Rational>> powers_;
};

/// The n-th cyclotomic polynomial.
Poly cyclotomic_polynomial(int n);

/// Element of Q(zeta_n), held in reduced coordinates.
class Cyclotomic {
public:
    /// Zero of Q(zeta_n).
    explicit Cyclotomic(int n = 12);
    Cyclotomic(int n, const Rational& r);

    static Cyclotomic zeta(int n, long k);

    int order() const { return field_->order(); }
    const std::vector<Rational>& coords() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Requires is_rational().
    Rational rational_value() const;

    /// Complex conjugate (zeta -> zeta^{-1}).
    Cyclotomic conj() const;
    /// The same number viewed in Q(zeta_m); requires order() | m.
    Cyclotomic embed(int m) const;

    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Rational& s);
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(Cyclotomic a, const Rational& s) { return a *= s; }
    Cyclotomic operator-() const;

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

    std::string str() const;

private:
    Cyclotomic(std::shared_ptr<const CyclotomicField> f, std::vector<Rational> c)
        : field_(std::move(f)), c_(std::move(c)) {}
    void check_same(const Cyclotomic& o) const;

    std::shared_ptr<const CyclotomicField> field_;
    std::vector<Rational> c_;
};

/// Reduces an arbitrary combination sum_k a_k zeta_n^k (k in [0, n)) to normal form.
Cyclotomic cyclo_reduce(int n, const std::vector<Rational>& power_coeffs);

}  // namespace uniflip
