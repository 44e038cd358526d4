#include "uniflip/labels.hpp"

#include "internal/datafile.hpp"
#include "uniflip/error.hpp"

#include <algorithm>

namespace uniflip {

namespace {

std::vector<LabelHint> from_records(const nlohmann::json& records) {
    std::vector<LabelHint> out;
    try {
        for (const auto& r : records) {
            LabelHint h;
            h.name = r.at("name").get<std::string>();
            h.dim = r.at("dim").get<std::int64_t>();
            h.b = r.at("b").get<int>();
            for (const auto& t : r.at("traces"))
                h.traces.emplace_back(t.at("word").get<std::vector<int>>(), t.at("value").get<std::int64_t>());
            out.push_back(std::move(h));
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::DataIntegrity, std::string("malformed label record: ") + e.what());
    }
    return out;
}

}  // namespace

std::vector<LabelHint> load_label_hints(const std::string& path, const std::string& type) {
    return from_records(detail::load_records(path, type));
}

std::vector<LabelHint> parse_label_hints(const std::string& text, const std::string& type) {
    return from_records(detail::parse_records(text, type, "<label hints>"));
}

std::vector<IrrLabel> label_irreducibles(const WeylCharacters& t, const std::vector<int>& b,
                                         const std::vector<LabelHint>& hints) {
    const WeylGroup& w = *t.weyl;
    std::vector<IrrLabel> out(t.num_chars());
    std::vector<bool> taken(t.num_chars(), false);
    for (const auto& h : hints) {
        std::vector<std::pair<std::size_t, std::int64_t>> dis;
        for (const auto& [word, value] : h.traces) {
            std::vector<int> zero_based;
            for (int s : word) zero_based.push_back(s - 1);
            dis.emplace_back(w.group().class_of(w.word(zero_based)), value);
        }
        std::vector<std::size_t> hits;
        for (std::size_t chi = 0; chi < t.num_chars(); ++chi) {
            if (t.dim(chi) != h.dim || b[chi] != h.b) continue;
            if (std::all_of(dis.begin(), dis.end(),
                            [&](const auto& p) { return t.values[chi][p.first] == p.second; }))
                hits.push_back(chi);
        }
        if (hits.empty())
            throw Error(ErrorCode::UnmatchedIrreducible, "label " + h.name + " matches no irreducible");
        if (hits.size() > 1)
            throw Error(ErrorCode::AmbiguousLabel, "label " + h.name + " matches several irreducibles");
        const std::size_t chi = hits.front();
        if (taken[chi])
            throw Error(ErrorCode::AmbiguousLabel, "two labels match irreducible " + std::to_string(chi) +
                                                       " (second is " + h.name + ")");
        taken[chi] = true;
        out[chi] = IrrLabel{h.name, chi, h.dim, h.b, std::move(dis)};
    }
    for (std::size_t chi = 0; chi < taken.size(); ++chi)
        if (!taken[chi])
            throw Error(ErrorCode::UnmatchedIrreducible,
                        "irreducible " + std::to_string(chi) + " of dimension " + std::to_string(t.dim(chi)) +
                            " has no label");
    return out;
}

}  // namespace uniflip
