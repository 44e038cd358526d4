#pragma once

#include "uniflip/cyclotomic.hpp"
#include "uniflip/finite_group.hpp"

#include <cstddef>
#include <vector>

namespace uniflip {

/// Irreducible characters of a finite group, valued in Q(zeta_e) where e is
/// the group exponent. Rows are characters, columns follow the group's class
/// order. Characters are sorted by degree, then by their value vectors.
struct CharacterTable {
    int field_order = 1;
    std::size_t group_order = 0;
    std::vector<std::size_t> class_sizes;
    std::vector<std::vector<Cyclotomic>> chars;

    std::size_t num_classes() const { return class_sizes.size(); }
    std::size_t num_chars() const { return chars.size(); }
    Rational degree(std::size_t chi) const { return chars[chi][0].rational_value(); }
    bool is_rational() const;

    /// <chi, psi> = (1/|G|) sum_c |c| chi(c) conj(psi(c)).
    Cyclotomic inner_product(const std::vector<Cyclotomic>& chi,
                             const std::vector<Cyclotomic>& psi) const;
};

/// Exact character table by the class-algebra method: common eigenvectors of
/// the class multiplication matrices over F_p with p = 1 mod exponent, lifted
/// to cyclotomic values through eigenvalue multiplicities on cyclic subgroups.
///
/// Throws TooLarge above `max_order` and LiftFailure if the modular data does
/// not lift to a table passing both orthogonality relations.
CharacterTable compute_character_table(const FiniteGroup& g, std::size_t max_order = 2000);

/// Checks row and column orthogonality exactly.
bool check_orthogonality(const CharacterTable& t, const FiniteGroup& g);

}  // namespace uniflip
