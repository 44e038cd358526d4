#include "uniflip/poly.hpp"

#include "uniflip/error.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

namespace uniflip {

Poly::Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::optional<std::size_t> Poly::degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
}

std::optional<std::size_t> Poly::valuation() const {
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (!c_[k].is_zero()) return k;
    return std::nullopt;
}

Rational Poly::coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

Rational Poly::eval(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

mpz_class Poly::denominator_lcm() const {
    mpz_class l = 1;
    for (const auto& c : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.raw().get_den_mpz_t());
    return l;
}

bool Poly::has_integer_coeffs() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& c) { return c.is_integer(); });
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

std::string Poly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        const Rational& c = c_[k];
        if (c.is_zero()) continue;
        Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0 || mag != Rational(1)) os << mag;
        if (k >= 1) os << "u";
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

Poly poly_negate_variable(const Poly& p) {
    std::vector<Rational> c = p.coeffs();
    for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
    return Poly(std::move(c));
}

std::optional<Poly> poly_divide_exact(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero polynomial");
    if (num.is_zero()) return Poly{};
    const std::size_t dn = *num.degree(), dd = *den.degree();
    if (dn < dd) return std::nullopt;
    std::vector<Rational> rem = num.coeffs();
    std::vector<Rational> q(dn - dd + 1);
    const Rational& lead = den.coeffs().back();
    for (std::size_t k = dn - dd + 1; k-- > 0;) {
        Rational t = rem[k + dd] / lead;
        q[k] = t;
        if (t.is_zero()) continue;
        for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= t * den.coeffs()[j];
    }
    for (const auto& r : rem)
        if (!r.is_zero()) return std::nullopt;
    return Poly(std::move(q));
}

Poly poly_pow(const Poly& p, unsigned e) {
    Poly r = Poly::constant(1);
    for (unsigned i = 0; i < e; ++i) r *= p;
    return r;
}

Poly poly_reverse(const Poly& p, std::size_t deg) {
    if (p.is_zero()) return {};
    if (*p.degree() > deg) throw Error(ErrorCode::InvalidArgument, "reverse degree too small");
    std::vector<Rational> c(deg + 1);
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) c[deg - k] = p.coeffs()[k];
    return Poly(std::move(c));
}

TruncatedSeries::TruncatedSeries(std::size_t order) : c_(order + 1) {}

TruncatedSeries::TruncatedSeries(const Poly& p, std::size_t order) : c_(order + 1) {
    for (std::size_t k = 0; k <= order && k < p.coeffs().size(); ++k) c_[k] = p.coeffs()[k];
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    if (o.order() != order()) throw Error(ErrorCode::InvalidArgument, "series order mismatch");
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& s) {
    for (auto& c : c_) c *= s;
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= n; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
}

TruncatedSeries TruncatedSeries::inverse() const {
    if (c_[0].is_zero()) throw Error(ErrorCode::ZeroConstantTerm, "series has zero constant term");
    TruncatedSeries r(order());
    const Rational inv0 = Rational(1) / c_[0];
    r.c_[0] = inv0;
    for (std::size_t k = 1; k < c_.size(); ++k) {
        Rational acc;
        for (std::size_t j = 1; j <= k; ++j)
            if (!c_[j].is_zero()) acc += c_[j] * r.c_[k - j];
        r.c_[k] = -acc * inv0;
    }
    return r;
}

Poly TruncatedSeries::to_poly() const { return Poly(c_); }

namespace {
std::atomic<std::size_t> guard_extra{0};
}

std::size_t series_guard_order(std::size_t expected_degree) { return 2 * expected_degree + 1 + guard_extra; }

void set_series_guard_extra(std::size_t extra) { guard_extra = extra; }

Poly series_divide_exact(const TruncatedSeries& numer, const TruncatedSeries& denom,
                         std::size_t expected_degree) {
    if (denom[0].is_zero())
        throw Error(ErrorCode::ZeroConstantTerm, "denominator series has zero constant term");
    const std::size_t n = std::min(numer.order(), denom.order());
    if (n < series_guard_order(expected_degree))
        throw Error(ErrorCode::InvalidArgument, "truncation order below the guard band");
    // Long division from the low end: q_k = (numer_k - sum_{j<k} q_j denom_{k-j}) / denom_0.
    std::vector<Rational> q(n + 1);
    const Rational inv0 = Rational(1) / denom[0];
    for (std::size_t k = 0; k <= n; ++k) {
        Rational acc = numer[k];
        for (std::size_t j = 0; j < k; ++j)
            if (!q[j].is_zero()) acc -= q[j] * denom[k - j];
        q[k] = acc * inv0;
        if (k > expected_degree && !q[k].is_zero())
            throw Error(ErrorCode::NonPolynomialQuotient,
                        "coefficient of u^" + std::to_string(k) + " is " + q[k].str());
    }
    q.resize(expected_degree + 1);
    return Poly(std::move(q));
}

}  // namespace uniflip
