#include "uniflip/matrix.hpp"

#include "uniflip/error.hpp"

namespace uniflip {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.c_ != b.r_) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
    IntMatrix r(a.r_, b.c_);
    for (std::size_t i = 0; i < a.r_; ++i)
        for (std::size_t k = 0; k < a.c_; ++k) {
            const std::int64_t x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.c_; ++j) r(i, j) += x * b(k, j);
        }
    return r;
}

std::vector<std::int64_t> IntMatrix::apply(const std::vector<std::int64_t>& v) const {
    std::vector<std::int64_t> out(r_, 0);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
}

bool IntMatrix::is_minus_identity() const {
    if (r_ != c_) return false;
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j)
            if ((*this)(i, j) != (i == j ? -1 : 0)) return false;
    return true;
}

std::int64_t IntMatrix::trace() const {
    std::int64_t t = 0;
    for (std::size_t i = 0; i < std::min(r_, c_); ++i) t += (*this)(i, i);
    return t;
}

// Berkowitz: the characteristic polynomial is the product of Toeplitz matrices
// built from the leading principal submatrices.
std::vector<std::int64_t> characteristic_polynomial(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw Error(ErrorCode::InvalidArgument, "charpoly of non-square matrix");
    if (n == 0) return {1};
    // v holds coefficients highest first: v[0] = 1 (monic).
    std::vector<std::int64_t> v{1, -m(0, 0)};
    for (std::size_t r = 1; r < n; ++r) {
        // Submatrix A = m[0..r-1][0..r-1], R = row r cols 0..r-1, C = col r rows 0..r-1, a = m(r,r).
        // Toeplitz column: t = [1, -a, -R C, -R A C, -R A^2 C, ...] (length r+2).
        std::vector<std::int64_t> t(r + 2);
        t[0] = 1;
        t[1] = -m(r, r);
        std::vector<std::int64_t> col(r);
        for (std::size_t i = 0; i < r; ++i) col[i] = m(i, r);
        for (std::size_t k = 2; k < r + 2; ++k) {
            std::int64_t dot = 0;
            for (std::size_t i = 0; i < r; ++i) dot += m(r, i) * col[i];
            t[k] = -dot;
            std::vector<std::int64_t> next(r, 0);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) next[i] += m(i, j) * col[j];
            col = std::move(next);
        }
        std::vector<std::int64_t> w(r + 2, 0);
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= i && j < v.size(); ++j) w[i] += t[i - j] * v[j];
        v = std::move(w);
    }
    return {v.rbegin(), v.rend()};
}

Poly det_one_minus_u(const IntMatrix& m) {
    // det(I - uM) = u^n charpoly(1/u): reverse the coefficient order.
    const auto cp = characteristic_polynomial(m);
    std::vector<Rational> c(cp.size());
    for (std::size_t k = 0; k < cp.size(); ++k) c[cp.size() - 1 - k] = Rational(cp[k]);
    return Poly(std::move(c));
}

Poly det_u_minus(const IntMatrix& m) {
    const auto cp = characteristic_polynomial(m);
    std::vector<Rational> c(cp.begin(), cp.end());
    return Poly(std::move(c));
}

}  // namespace uniflip
