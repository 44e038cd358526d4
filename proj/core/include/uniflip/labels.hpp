#pragma once

#include "uniflip/reptheory.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace uniflip {

/// One curated record: a name with the data that pins down an irreducible.
/// Trace words are 1-based products of simple reflections.
struct LabelHint {
    std::string name;
    std::int64_t dim = 0;
    int b = 0;
    std::vector<std::pair<std::vector<int>, std::int64_t>> traces;
};

struct IrrLabel {
    std::string name;
    std::size_t chi = 0;  ///< row of the character table
    std::int64_t dim = 0;
    int b = 0;
    /// (class index, trace) pairs taken from the hint.
    std::vector<std::pair<std::size_t, std::int64_t>> disambiguator;
};

/// Loads data/labels/<type>.json. Throws DataIntegrity.
std::vector<LabelHint> load_label_hints(const std::string& path, const std::string& type);
std::vector<LabelHint> parse_label_hints(const std::string& text, const std::string& type);

/// Matches every hint to exactly one irreducible and vice versa. The result is
/// ordered like the rows of the table.
///
/// Throws AmbiguousLabel when a hint fits several irreducibles or two hints
/// fit the same one, and UnmatchedIrreducible when something is left over.
std::vector<IrrLabel> label_irreducibles(const WeylCharacters& t, const std::vector<int>& b,
                                         const std::vector<LabelHint>& hints);

}  // namespace uniflip
