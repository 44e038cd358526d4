#pragma once

#include "uniflip/character_table.hpp"
#include "uniflip/poly.hpp"
#include "uniflip/weyl.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

namespace uniflip {

/// The span V_H of a closed subsystem, with the subsystem's simple roots as
/// basis. Elements stabilizing the subsystem act on it by integer matrices.
class Restriction {
public:
    Restriction() = default;
    Restriction(const RootSystem& rs, const RootSubset& sigma);

    const RootSubset& sigma() const { return sigma_; }
    /// Simple roots of the subsystem for the positive system inherited from W.
    const RootSubset& simple() const { return simple_; }
    std::size_t dimension() const { return simple_.size(); }
    std::size_t num_positive() const { return sigma_.size() / 2; }
    /// Coordinates of a subsystem root in the simple basis of the subsystem.
    const std::vector<std::int64_t>& coordinates(std::size_t root) const { return coords_.at(root); }
    /// Matrix of a stabilizing permutation on V_H. Throws NotInStabilizer.
    IntMatrix restrict(const Perm& p) const;

private:
    RootSubset sigma_;
    RootSubset simple_;
    std::map<std::size_t, std::vector<std::int64_t>> coords_;
};

/// Character table of W with its (integer) values and per-class data.
struct WeylCharacters {
    const WeylGroup* weyl = nullptr;
    CharacterTable table;
    std::vector<std::vector<std::int64_t>> values;  ///< values[chi][class]

    std::size_t num_chars() const { return values.size(); }
    std::int64_t value(std::size_t chi, std::uint32_t w) const {
        return values[chi][weyl->group().class_of(w)];
    }
    std::int64_t dim(std::size_t chi) const { return values[chi][0]; }
    /// Index of the trivial and sign characters.
    std::size_t trivial() const;
    std::size_t sign() const;
    /// Index of chi tensor sign.
    std::size_t tensor_sign(std::size_t chi) const;
};

/// Throws TooLarge, LiftFailure, or DataIntegrity if a value is not a rational integer.
WeylCharacters character_table(const WeylGroup& w, std::size_t max_order = 2000);

/// sum_w u^{l(w)}.
Poly length_generating_function(const WeylGroup& w);

/// prod(1 - u^{d_i}) (1/|W|) sum_w chi(w) / det(1 - u w).
Poly fake_degree(const WeylCharacters& t, std::size_t chi);
/// Valuation of the fake degree.
int b_invariant(const WeylCharacters& t, std::size_t chi);

/// sum_j tr(g, coinvariants of W_H in degree j) u^j on V_H.
Poly coinvariant_graded_trace(const WeylGroup& w, std::uint32_t g, const Restriction& vh,
                              const WeylSubgroup& wh);

/// Precomputed series data for one coset n W_H: the twisted invariant Molien
/// series and, per conjugacy class of W, (1/|W_H|) sum over the coset elements
/// in that class of 1/det(1 - u x|V_H).
class CosetSeries {
public:
    CosetSeries(const WeylGroup& w, std::uint32_t n, const Restriction& vh, const WeylSubgroup& wh);

    std::uint32_t representative() const { return n_; }
    std::size_t expected_degree() const { return degree_; }
    const TruncatedSeries& molien() const { return molien_; }

    /// (1/|W_H|) sum_{x in nW_H} tr(x, coinvariants)(u) * chi(x).
    Poly tensor_invariant(const WeylCharacters& t, std::size_t chi) const;
    /// Same with an arbitrary class function of W.
    Poly class_function_invariant(const std::vector<Rational>& class_values) const;

private:
    std::uint32_t n_;
    std::size_t degree_;
    TruncatedSeries molien_;
    std::map<std::size_t, TruncatedSeries> by_class_;
};

Poly tensor_invariant_graded_trace(const WeylCharacters& t, std::uint32_t n, std::size_t chi,
                                   const Restriction& vh, const WeylSubgroup& wh);

}  // namespace uniflip
