#include "uniflip/rational.hpp"

#include "uniflip/error.hpp"

#include <ostream>

namespace uniflip {

Rational::Rational(long num, long den) {
    if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0 || q.get_den() == 0)
        throw Error(ErrorCode::InvalidArgument, "not a rational: '" + s + "'");
    return Rational(q);
}

std::int64_t Rational::to_int64() const {
    if (!is_integer() || !v_.get_num().fits_slong_p())
        throw Error(ErrorCode::InvalidArgument, "not a machine integer: " + str());
    return v_.get_num().get_si();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace uniflip
