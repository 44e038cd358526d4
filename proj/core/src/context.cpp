#include "uniflip/context.hpp"

#include "uniflip/error.hpp"

namespace uniflip {

BareTables bare_tables(const CartanType& type) {
    BareTables t;
    t.rs = std::make_shared<const RootSystem>(build_root_system(type));
    t.weyl = std::make_unique<WeylGroup>(t.rs);
    t.chars = character_table(*t.weyl);
    for (std::size_t chi = 0; chi < t.chars.num_chars(); ++chi) {
        t.fake.push_back(fake_degree(t.chars, chi));
        t.b.push_back(static_cast<int>(*t.fake.back().valuation()));
    }
    return t;
}

std::shared_ptr<const TypeContext> TypeContext::load(const CartanType& type, const std::string& data_dir) {
    const std::string name = type.str();
    return build(type, load_label_hints(data_dir + "/labels/" + name + ".json", name),
                 load_family_records(data_dir + "/families/" + name + ".json", name));
}

std::shared_ptr<const TypeContext> TypeContext::build(const CartanType& type, const std::vector<LabelHint>& hints,
                                                      const std::vector<FamilyRecord>& families) {
    auto ctx = std::shared_ptr<TypeContext>(new TypeContext());
    BareTables t = bare_tables(type);
    ctx->rs_ = std::move(t.rs);
    ctx->weyl_ = std::move(t.weyl);
    ctx->chars_ = std::move(t.chars);
    ctx->chars_.weyl = ctx->weyl_.get();
    ctx->fake_ = std::move(t.fake);
    ctx->b_ = std::move(t.b);
    ctx->labels_ = label_irreducibles(ctx->chars_, ctx->b_, hints);
    ctx->families_ = ingest_family_tables(families, ctx->chars_, ctx->labels_, ctx->b_);
    return ctx;
}

std::size_t TypeContext::char_index(const std::string& label) const {
    for (const auto& l : labels_)
        if (l.name == label) return l.chi;
    throw Error(ErrorCode::UnknownLabel, name() + " has no representation '" + label + "'");
}

std::string TypeContext::family_name(std::size_t family) const {
    const Family& f = families_.families[family];
    if (f.members.size() == 1 && f.members[0] == chars_.trivial()) return "trivial";
    if (f.members.size() == 1 && f.members[0] == chars_.sign()) return "sign";
    return labels_[f.special].name;
}

}  // namespace uniflip
