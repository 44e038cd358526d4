#pragma once

#include "uniflip/cyclotomic.hpp"
#include "uniflip/finite_group.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace uniflip {

/// Field in which all supported character values and pairings live.
inline constexpr int kGammaField = 12;

struct GammaCharacter {
    std::string name;
    /// Value at each group element; only centralizer entries are meaningful.
    std::vector<Cyclotomic> values;
    Rational degree() const;
};

struct GammaClass {
    std::string name;
    std::uint32_t representative = 0;
    std::size_t size = 0;
    std::vector<std::uint32_t> centralizer;  ///< sorted element indices
    std::vector<GammaCharacter> chars;       ///< irreducibles of the centralizer, canonical order
};

/// An element (x, sigma) of M(Gamma): a class index and a character index
/// of the centralizer of its representative.
struct MElement {
    std::size_t cls = 0;
    std::size_t chr = 0;
    friend auto operator<=>(const MElement&, const MElement&) = default;
};

/// One of the small groups attached to families: "1", "Z2", "Z2xZ2",
/// "Z2xZ2xZ2", "S3", "S4". Classes are ordered identity first, then by element
/// order with larger classes first.
class GammaGroup {
public:
    /// Throws UnsupportedType for any other name.
    static GammaGroup get(const std::string& name);

    const std::string& name() const { return name_; }
    const FiniteGroup& group() const { return group_; }
    std::size_t order() const { return group_.size(); }
    const std::vector<GammaClass>& classes() const { return classes_; }

    /// Looks up (class name, character name); throws UnknownLabel.
    MElement find(const std::string& cls, const std::string& chr) const;
    /// "(g2,eps)".
    std::string str(const MElement& m) const;
    const Cyclotomic& value(const MElement& m, std::uint32_t element) const {
        return classes_[m.cls].chars[m.chr].values[element];
    }

private:
    std::string name_;
    std::vector<Perm> elements_;
    FiniteGroup group_;
    std::vector<GammaClass> classes_;

    friend class GammaBuilder;
};

/// All (x, sigma) in class order, then character order.
std::vector<MElement> build_M(const GammaGroup& g);

/// (1/|Z(x)||Z(y)|) sum over g in Gamma with x commuting with g y g^-1 of
/// sigma(g y g^-1) conj(tau(g^-1 x g)), for m = (x, sigma), m' = (y, tau).
Cyclotomic fourier_pairing(const GammaGroup& g, const MElement& m, const MElement& mp);

struct FourierMatrix {
    std::vector<MElement> elements;
    std::vector<std::vector<Rational>> entries;

    std::size_t size() const { return elements.size(); }
    std::size_t index_of(const MElement& m) const;
    bool is_symmetric() const;
    bool is_involutive() const;
    /// Every entry's denominator divides n.
    bool denominators_divide(std::size_t n) const;
};

/// Throws DataIntegrity if an entry is not rational.
FourierMatrix fourier_matrix(const GammaGroup& g);

}  // namespace uniflip
