#pragma once

#include "uniflip/families.hpp"
#include "uniflip/labels.hpp"
#include "uniflip/reptheory.hpp"
#include "uniflip/rootsystem.hpp"
#include "uniflip/weyl.hpp"

#include <memory>
#include <string>
#include <vector>

namespace uniflip {

/// Everything computed or loaded for one Cartan type: the Weyl group, its
/// labelled character table with fake degrees, and the family data.
class TypeContext {
public:
    /// Reads <data_dir>/labels/<type>.json and <data_dir>/families/<type>.json.
    static std::shared_ptr<const TypeContext> load(const CartanType& type, const std::string& data_dir);
    /// Same with hint and family records supplied directly.
    static std::shared_ptr<const TypeContext> build(const CartanType& type, const std::vector<LabelHint>& hints,
                                                    const std::vector<FamilyRecord>& families);

    const CartanType& type() const { return rs_->type(); }
    std::string name() const { return rs_->type().str(); }
    const RootSystem& root_system() const { return *rs_; }
    const WeylGroup& weyl() const { return *weyl_; }
    const WeylCharacters& characters() const { return chars_; }
    const std::vector<IrrLabel>& labels() const { return labels_; }
    const std::vector<Poly>& fake_degrees() const { return fake_; }
    const std::vector<int>& b() const { return b_; }
    const FamilyData& families() const { return families_; }

    /// Character index of a label; throws UnknownLabel.
    std::size_t char_index(const std::string& label) const;
    /// Display name of a family: "trivial", "sign" or its special member.
    std::string family_name(std::size_t family) const;

private:
    std::shared_ptr<const RootSystem> rs_;
    std::unique_ptr<WeylGroup> weyl_;
    WeylCharacters chars_;
    std::vector<Poly> fake_;
    std::vector<int> b_;
    std::vector<IrrLabel> labels_;
    FamilyData families_;
};

/// Computes the table, fake degrees and b-invariants of a type without
/// loading labels (used by the data tooling).
struct BareTables {
    std::shared_ptr<const RootSystem> rs;
    std::unique_ptr<WeylGroup> weyl;
    WeylCharacters chars;
    std::vector<Poly> fake;
    std::vector<int> b;
};
BareTables bare_tables(const CartanType& type);

}  // namespace uniflip
