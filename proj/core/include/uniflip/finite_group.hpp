#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace uniflip {

using Perm = std::vector<std::uint16_t>;

/// (a*b)(i) = a(b(i)): apply b first, matching matrix multiplication order.
Perm compose(const Perm& a, const Perm& b);
Perm invert(const Perm& p);

struct ConjugacyClass {
    std::uint32_t representative;        ///< smallest element index in the class
    std::vector<std::uint32_t> elements;  ///< sorted
    std::uint32_t element_order;
};

/// Finite group given by a full multiplication table over element indices
/// 0..n-1, with 0 the identity. Conjugacy classes are computed on
/// construction and ordered by their smallest element.
class FiniteGroup {
public:
    FiniteGroup() = default;
    /// table[a * n + b] = index of a*b.
    FiniteGroup(std::size_t n, std::vector<std::uint32_t> table);

    /// Elements generated by the given permutations, sorted lexicographically
    /// by image sequence; element 0 is the identity.
    static FiniteGroup from_permutations(const std::vector<Perm>& generators,
                                         std::vector<Perm>* elements_out = nullptr,
                                         std::size_t max_order = 100000);

    std::size_t size() const { return n_; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_[a * n_ + b]; }
    std::uint32_t inv(std::uint32_t a) const { return inverse_[a]; }
    std::uint32_t conj(std::uint32_t x, std::uint32_t g) const { return mul(mul(x, g), inv(x)); }
    std::uint32_t pow(std::uint32_t a, long k) const;
    std::uint32_t element_order(std::uint32_t a) const { return orders_[a]; }
    std::uint32_t exponent() const;

    const std::vector<ConjugacyClass>& classes() const { return classes_; }
    std::size_t class_of(std::uint32_t a) const { return class_of_[a]; }
    /// Class of the inverses of the class's elements.
    std::size_t inverse_class(std::size_t c) const;
    /// Class of g^k for g in class c.
    std::size_t power_class(std::size_t c, long k) const;

    std::vector<std::uint32_t> centralizer(std::uint32_t a) const;
    bool is_abelian() const;

private:
    std::size_t n_ = 0;
    std::vector<std::uint32_t> table_;
    std::vector<std::uint32_t> inverse_;
    std::vector<std::uint32_t> orders_;
    std::vector<ConjugacyClass> classes_;
    std::vector<std::size_t> class_of_;
};

/// The subgroup of `g` on the given (closed) element subset, re-indexed in the
/// order of `elements`, whose first entry must be the identity.
FiniteGroup subgroup(const FiniteGroup& g, const std::vector<std::uint32_t>& elements);

}  // namespace uniflip
