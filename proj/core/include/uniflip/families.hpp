#pragma once

#include "uniflip/gamma.hpp"
#include "uniflip/labels.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace uniflip {

/// A family record as stored on disk, before validation.
struct FamilyRecord {
    std::vector<std::string> members;
    std::string gamma;
    std::map<std::string, std::pair<std::string, std::string>> embedding;  ///< label -> (class, character)
    std::vector<std::pair<std::pair<std::string, std::string>, int>> delta;  ///< overrides, default +1
};

std::vector<FamilyRecord> load_family_records(const std::string& path, const std::string& type);
std::vector<FamilyRecord> parse_family_records(const std::string& text, const std::string& type);

struct Family {
    std::size_t id = 0;
    std::shared_ptr<const GammaGroup> gamma;
    std::shared_ptr<const FourierMatrix> fourier;
    std::vector<std::size_t> members;    ///< character indices, in record order
    std::vector<std::size_t> embedding;  ///< per member, index into fourier->elements
    std::vector<int> delta;              ///< per element of M
    std::size_t special = 0;             ///< character index of the unique member with b = a
    int a = 0;
    int A = 0;

    std::size_t size_M() const { return fourier->size(); }
    const MElement& m(std::size_t i) const { return fourier->elements[i]; }
    std::string m_name(std::size_t i) const { return gamma->str(fourier->elements[i]); }
    /// <m_i, m_E> for the member with character index chi.
    const Rational& pairing(std::size_t i, std::size_t member) const {
        return fourier->entries[i][embedding[member]];
    }
};

struct FamilyData {
    std::vector<Family> families;
    std::vector<std::size_t> family_of;  ///< character index -> family index
};

/// Validates curated records against the labelled character table and
/// computes a_c and A_c.
///
/// Throws NotAPartition, EmbeddingNotInjective, SpecialNotUnique,
/// SignTwistNotAFamily, UnknownLabel, UnsupportedType (unknown group) and
/// DataIntegrity (irrational Fourier entries, malformed records).
FamilyData ingest_family_tables(const std::vector<FamilyRecord>& records, const WeylCharacters& t,
                                const std::vector<IrrLabel>& labels, const std::vector<int>& b);

/// (a_c, A_c) with a_c = min b over c and A_c = N - min b over c tensor sign.
/// Throws SignTwistNotAFamily.
std::pair<int, int> family_invariants(const FamilyData& data, std::size_t family,
                                      const WeylCharacters& t, const std::vector<int>& b);

/// Involution m -> m! on M(Gamma_c) from the relations
/// Delta(m!) = (-1)^{a+A} Delta(m) and <m!, m_E> = (-1)^{b_E + a} <m, m_E>.
struct BangMap {
    std::vector<std::size_t> image;
    std::vector<std::size_t> candidates;  ///< number of solutions per m; the least is taken
    bool involution = true;
    bool unique() const;
};

/// Throws NoSolution if some m has no partner.
BangMap solve_bang(const Family& f, const std::vector<int>& b);

}  // namespace uniflip
