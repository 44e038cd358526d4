#pragma once

#include "uniflip/finite_group.hpp"
#include "uniflip/matrix.hpp"
#include "uniflip/rootsystem.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <vector>

namespace uniflip {

/// Sorted list of root indices.
using RootSubset = std::vector<std::size_t>;

struct WeylElement {
    Perm perm;         ///< action on root indices
    IntMatrix matrix;  ///< column j = coordinates of w(alpha_j)
    int length = 0;
};

/// The full Weyl group, enumerated. Elements are indexed in lexicographic
/// order of their root permutations, so index 0 is the identity.
class WeylGroup {
public:
    explicit WeylGroup(std::shared_ptr<const RootSystem> rs);

    const RootSystem& root_system() const { return *rs_; }
    std::shared_ptr<const RootSystem> root_system_ptr() const { return rs_; }
    const FiniteGroup& group() const { return group_; }
    std::size_t order() const { return perms_.size(); }

    const Perm& perm(std::uint32_t w) const { return perms_[w]; }
    const IntMatrix& matrix(std::uint32_t w) const { return matrices_[w]; }
    int length(std::uint32_t w) const { return lengths_[w]; }
    WeylElement element(std::uint32_t w) const { return {perms_[w], matrices_[w], lengths_[w]}; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return group_.mul(a, b); }
    std::uint32_t inv(std::uint32_t a) const { return group_.inv(a); }

    /// Index of a permutation; throws InvalidArgument if it is not in W.
    std::uint32_t index_of(const Perm& p) const;
    /// Index of the reflection in the given root.
    std::uint32_t reflection(std::size_t root) const { return reflections_[root]; }
    /// Product s_{i1} s_{i2} ... of simple reflections (0-based indices).
    std::uint32_t word(const std::vector<int>& simple) const;
    /// A reduced word (0-based simple indices) with word(reduced_word(w)) == w.
    std::vector<int> reduced_word(std::uint32_t w) const;
    /// Image of a root subset, sorted.
    RootSubset apply(std::uint32_t w, const RootSubset& s) const;

    std::uint32_t longest() const { return longest_; }
    bool longest_is_minus_one() const { return matrices_[longest_].is_minus_identity(); }

private:
    std::shared_ptr<const RootSystem> rs_;
    std::vector<Perm> perms_;
    std::map<Perm, std::uint32_t> index_;
    std::vector<IntMatrix> matrices_;
    std::vector<int> lengths_;
    std::vector<std::uint32_t> reflections_;
    FiniteGroup group_;
    std::uint32_t longest_ = 0;
};

/// A subgroup of W as a sorted list of element indices (identity first).
struct WeylSubgroup {
    const WeylGroup* ambient = nullptr;
    RootSubset generators;  ///< roots whose reflections generate, when built from a subsystem
    std::vector<std::uint32_t> elements;

    std::size_t order() const { return elements.size(); }
    bool contains(std::uint32_t w) const;
    /// The subgroup as an abstract group, indexed like `elements`.
    FiniteGroup as_group() const;
};

WeylSubgroup full_group(const WeylGroup& w);

struct LongestElement {
    WeylElement element;
    std::uint32_t index;
    bool is_minus_one;
};
LongestElement longest_element(const WeylGroup& w);

/// True if `s` is symmetric, stable under its own reflections and contains
/// every root of the ambient system that is a sum of two of its members.
bool is_closed_subsystem(const RootSystem& rs, const RootSubset& s);

/// Group generated by the reflections in `sigma`. Throws NotClosed.
WeylSubgroup reflection_subgroup(const WeylGroup& w, const RootSubset& sigma);

/// Elements of `g` mapping `sigma` onto itself.
WeylSubgroup setwise_stabilizer(const WeylSubgroup& g, const RootSubset& sigma);

/// N/K with cosets labelled by their least element index.
struct CosetQuotient {
    WeylSubgroup numerator;
    WeylSubgroup kernel;
    std::vector<std::uint32_t> representatives;  ///< sorted; coset 0 is K itself
    std::map<std::uint32_t, std::size_t> coset_of;  ///< element of N -> coset index
    FiniteGroup group;

    std::size_t order() const { return representatives.size(); }
    std::vector<std::uint32_t> coset(std::size_t c) const;
};

/// Throws NotNormal if K is not normal in N.
CosetQuotient quotient(const WeylSubgroup& n, const WeylSubgroup& k);

}  // namespace uniflip
