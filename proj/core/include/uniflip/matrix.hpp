#pragma once

#include "uniflip/poly.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace uniflip {

/// Dense integer matrix, row-major. Used for Weyl group elements acting on
/// root-lattice coordinates, where every entry is an exact small integer.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, 0) {}

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    std::int64_t& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

    std::vector<std::int64_t> apply(const std::vector<std::int64_t>& v) const;

    bool is_minus_identity() const;
    std::int64_t trace() const;

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<std::int64_t> a_;
};

/// Coefficients (lowest first) of det(x*I - M), computed division-free.
std::vector<std::int64_t> characteristic_polynomial(const IntMatrix& m);

/// det(I - u*M) as a polynomial in u.
Poly det_one_minus_u(const IntMatrix& m);

/// det(u*I - M) as a polynomial in u.
Poly det_u_minus(const IntMatrix& m);

}  // namespace uniflip
