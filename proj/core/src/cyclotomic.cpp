#include "uniflip/cyclotomic.hpp"

#include "uniflip/error.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace uniflip {

Poly cyclotomic_polynomial(int n) {
    if (n <= 0) throw Error(ErrorCode::InvalidArgument, "cyclotomic order must be positive");
    Poly p = Poly::monomial(1, static_cast<std::size_t>(n)) - Poly::constant(1);
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = *poly_divide_exact(p, cyclotomic_polynomial(d));
    return p;
}

CyclotomicField::CyclotomicField(int n) : n_(n), phi_poly_(cyclotomic_polynomial(n)) {
    phi_ = static_cast<int>(*phi_poly_.degree());
    powers_.assign(n_, std::vector<Rational>(phi_));
    // x^k for k < phi is a basis vector; beyond that use x^phi = -(lower terms).
    std::vector<Rational> cur(phi_);
    cur[0] = 1;
    for (int k = 0; k < n_; ++k) {
        powers_[k] = cur;
        std::vector<Rational> next(phi_);
        for (int i = 0; i + 1 < phi_; ++i) next[i + 1] = cur[i];
        const Rational& top = cur[phi_ - 1];
        if (!top.is_zero())
            for (int i = 0; i < phi_; ++i) next[i] -= top * phi_poly_.coeff(i);
        cur = std::move(next);
    }
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(int n) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const CyclotomicField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = std::make_shared<const CyclotomicField>(n);
    return slot;
}

const std::vector<Rational>& CyclotomicField::power(long k) const {
    long r = k % n_;
    if (r < 0) r += n_;
    return powers_[static_cast<std::size_t>(r)];
}

Cyclotomic::Cyclotomic(int n) : field_(CyclotomicField::get(n)), c_(field_->dimension()) {}

Cyclotomic::Cyclotomic(int n, const Rational& r) : Cyclotomic(n) { c_[0] = r; }

Cyclotomic Cyclotomic::zeta(int n, long k) {
    auto f = CyclotomicField::get(n);
    std::vector<Rational> c = f->power(k);
    return Cyclotomic(std::move(f), std::move(c));
}

bool Cyclotomic::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Rational Cyclotomic::rational_value() const {
    if (!is_rational()) throw Error(ErrorCode::DataIntegrity, "irrational cyclotomic " + str());
    return c_[0];
}

Cyclotomic cyclo_reduce(int n, const std::vector<Rational>& power_coeffs) {
    auto f = CyclotomicField::get(n);
    std::vector<Rational> c(f->dimension());
    for (std::size_t k = 0; k < power_coeffs.size(); ++k) {
        if (power_coeffs[k].is_zero()) continue;
        const auto& pw = f->power(static_cast<long>(k));
        for (int i = 0; i < f->dimension(); ++i)
            if (!pw[i].is_zero()) c[i] += power_coeffs[k] * pw[i];
    }
    Cyclotomic r(n);
    for (int i = 0; i < f->dimension(); ++i) r += Cyclotomic::zeta(n, i) * c[i];
    return r;
}

Cyclotomic Cyclotomic::conj() const {
    std::vector<Rational> out(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        const auto& pw = field_->power(-static_cast<long>(k));
        for (std::size_t i = 0; i < out.size(); ++i)
            if (!pw[i].is_zero()) out[i] += c_[k] * pw[i];
    }
    return Cyclotomic(field_, std::move(out));
}

Cyclotomic Cyclotomic::embed(int m) const {
    const int n = order();
    if (m % n != 0) throw Error(ErrorCode::InvalidArgument, "field order does not divide target");
    auto g = CyclotomicField::get(m);
    std::vector<Rational> out(g->dimension());
    const long step = m / n;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        const auto& pw = g->power(static_cast<long>(k) * step);
        for (std::size_t i = 0; i < out.size(); ++i)
            if (!pw[i].is_zero()) out[i] += c_[k] * pw[i];
    }
    return Cyclotomic(std::move(g), std::move(out));
}

void Cyclotomic::check_same(const Cyclotomic& o) const {
    if (order() != o.order())
        throw Error(ErrorCode::InvalidArgument, "mixed cyclotomic fields Q(zeta_" +
                                                    std::to_string(order()) + ") and Q(zeta_" +
                                                    std::to_string(o.order()) + ")");
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& s) {
    for (auto& x : c_) x *= s;
    return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    a.check_same(b);
    const std::size_t d = a.c_.size();
    std::vector<Rational> out(d);
    for (std::size_t i = 0; i < d; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (b.c_[j].is_zero()) continue;
            const Rational t = a.c_[i] * b.c_[j];
            const auto& pw = a.field_->power(static_cast<long>(i + j));
            for (std::size_t k = 0; k < d; ++k)
                if (!pw[k].is_zero()) out[k] += t * pw[k];
        }
    }
    return Cyclotomic(a.field_, std::move(out));
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.order() == b.order() && a.c_ == b.c_;
}

std::string Cyclotomic::str() const {
    if (is_rational()) return c_[0].str();
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << c_[k];
        if (k > 0) os << "*z" << order() << "^" << k;
    }
    return os.str();
}

}  // namespace uniflip
