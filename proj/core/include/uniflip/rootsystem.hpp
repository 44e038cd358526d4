#pragma once

#include "uniflip/poly.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace uniflip {

/// One irreducible factor of a Cartan type, e.g. {'B', 3}.
struct SimpleFactor {
    char series;
    int rank;
    friend auto operator<=>(const SimpleFactor&, const SimpleFactor&) = default;
};

/// Cartan type: a multiset of simple factors, written "B3" or "A1xA1".
class CartanType {
public:
    CartanType() = default;
    explicit CartanType(std::vector<SimpleFactor> factors);

    /// Case-insensitive; factors separated by 'x' or '*'. Throws UnsupportedType.
    static CartanType parse(const std::string& text);

    const std::vector<SimpleFactor>& factors() const { return factors_; }
    int rank() const;
    bool is_irreducible() const { return factors_.size() == 1; }
    bool is_empty() const { return factors_.empty(); }
    /// "B3", "A1xA1"; the empty type prints as "T".
    std::string str() const;

    friend bool operator==(const CartanType&, const CartanType&) = default;

private:
    std::vector<SimpleFactor> factors_;
};

/// Degrees of the basic invariants of a simple factor (closed form, used for
/// subsystems; the ambient system's degrees are computed by factorization).
std::vector<int> degrees_of(const SimpleFactor& f);

using RootVec = std::vector<int>;

/// Root system with roots in simple-root coordinates and an exact integral
/// Gram matrix. Roots 0..N-1 are positive, ordered by height then descending
/// coordinates (so 0..rank-1 are the simple roots); root N+i is -(root i).
class RootSystem {
public:
    const CartanType& type() const { return type_; }
    int rank() const { return rank_; }
    std::size_t num_positive() const { return num_pos_; }
    std::size_t num_roots() const { return roots_.size(); }

    const RootVec& root(std::size_t i) const { return roots_[i]; }
    const std::vector<RootVec>& roots() const { return roots_; }
    std::size_t negate(std::size_t i) const { return i < num_pos_ ? i + num_pos_ : i - num_pos_; }
    bool is_positive(std::size_t i) const { return i < num_pos_; }
    /// Index of a coordinate vector, or -1 if it is not a root.
    long index_of(const RootVec& v) const;
    int height(std::size_t i) const;

    /// Exact symmetric form on simple-root coordinates (scaled to integers).
    std::int64_t form(const RootVec& a, const RootVec& b) const;
    std::int64_t norm(std::size_t i) const { return norms_[i]; }
    /// Cartan integer <a, b^vee> = 2(a,b)/(b,b).
    std::int64_t cartan_pairing(const RootVec& a, const RootVec& b) const;
    const std::vector<std::vector<std::int64_t>>& gram() const { return gram_; }
    std::vector<std::vector<std::int64_t>> cartan_matrix() const;

    /// s_a(v) = v - <v, a^vee> a.
    RootVec reflect(const RootVec& v, std::size_t root_index) const;
    /// Permutation of root indices induced by the reflection in root i.
    std::vector<std::uint16_t> reflection_permutation(std::size_t i) const;

    /// Connected components of the Dynkin diagram as lists of simple indices.
    const std::vector<std::vector<int>>& components() const { return components_; }
    /// Component index of a root (roots of a reducible system lie in one factor).
    int component_of(std::size_t root_index) const;
    /// Highest root of the given component.
    std::size_t highest_root(int component) const;
    /// Largest squared length in the given component.
    std::int64_t long_norm(int component) const;

    const std::vector<int>& degrees() const { return degrees_; }
    /// sum_w u^{l(w)} as obtained by enumerating W.
    const Poly& poincare_polynomial() const { return poincare_; }

private:
    friend RootSystem build_root_system(const CartanType& t);

    CartanType type_;
    int rank_ = 0;
    std::size_t num_pos_ = 0;
    std::vector<std::vector<std::int64_t>> gram_;
    std::vector<RootVec> roots_;
    std::vector<std::int64_t> norms_;
    std::map<RootVec, std::size_t> index_;
    std::vector<std::vector<int>> components_;
    std::vector<int> root_component_;
    std::vector<int> degrees_;
    Poly poincare_;
};

/// Builds the root system by closing the simple roots under simple
/// reflections; populates N, the degrees and the Poincare polynomial.
/// Throws UnsupportedType for series/ranks outside the implemented table.
RootSystem build_root_system(const CartanType& t);

/// Factors sum_w u^{l(w)} as prod (1 - u^{d_i}) / (1 - u)^rank.
/// Throws FactorizationFailure if no such factorization exists.
std::vector<int> reflection_degrees(const Poly& poincare, int rank);
std::vector<int> reflection_degrees(const RootSystem& rs);

struct ExtendedDiagramNode {
    std::size_t root;  ///< root index; the affine node is the lowest root -theta
    int mark;
    bool affine;
};

struct ExtendedDiagram {
    int component;
    std::vector<ExtendedDiagramNode> nodes;  ///< affine node first, then simple roots
    std::vector<std::vector<bool>> adjacent;
};

/// One extended (affine) diagram per irreducible component.
std::vector<ExtendedDiagram> extended_diagram(const RootSystem& rs);

}  // namespace uniflip
