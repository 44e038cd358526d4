#include "uniflip/families.hpp"

#include "internal/datafile.hpp"
#include "uniflip/error.hpp"

#include <algorithm>
#include <set>

namespace uniflip {

namespace {

std::vector<FamilyRecord> from_records(const nlohmann::json& records) {
    std::vector<FamilyRecord> out;
    try {
        for (const auto& r : records) {
            FamilyRecord f;
            f.members = r.at("members").get<std::vector<std::string>>();
            f.gamma = r.at("gamma").get<std::string>();
            for (const auto& [name, pair] : r.at("embedding").items()) {
                if (!pair.is_array() || pair.size() != 2)
                    throw Error(ErrorCode::DataIntegrity, "embedding of " + name + " is not a pair");
                f.embedding[name] = {pair[0].get<std::string>(), pair[1].get<std::string>()};
            }
            if (r.contains("delta"))
                for (const auto& d : r.at("delta"))
                    f.delta.push_back({{d.at(0).get<std::string>(), d.at(1).get<std::string>()}, d.at(2).get<int>()});
            out.push_back(std::move(f));
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::DataIntegrity, std::string("malformed family record: ") + e.what());
    }
    return out;
}

}  // namespace

std::vector<FamilyRecord> load_family_records(const std::string& path, const std::string& type) {
    return from_records(detail::load_records(path, type));
}

std::vector<FamilyRecord> parse_family_records(const std::string& text, const std::string& type) {
    return from_records(detail::parse_records(text, type, "<family records>"));
}

bool BangMap::unique() const {
    return std::all_of(candidates.begin(), candidates.end(), [](std::size_t n) { return n == 1; });
}

FamilyData ingest_family_tables(const std::vector<FamilyRecord>& records, const WeylCharacters& t,
                                const std::vector<IrrLabel>& labels, const std::vector<int>& b) {
    std::map<std::string, std::size_t> by_name;
    for (const auto& l : labels) by_name.emplace(l.name, l.chi);
    auto lookup = [&](const std::string& name) {
        auto it = by_name.find(name);
        if (it == by_name.end()) throw Error(ErrorCode::UnknownLabel, "unknown representation '" + name + "'");
        return it->second;
    };

    std::map<std::string, std::pair<std::shared_ptr<const GammaGroup>, std::shared_ptr<const FourierMatrix>>> groups;
    FamilyData data;
    const std::size_t none = static_cast<std::size_t>(-1);
    data.family_of.assign(t.num_chars(), none);
    for (const auto& r : records) {
        Family f;
        f.id = data.families.size();
        auto it = groups.find(r.gamma);
        if (it == groups.end()) {
            auto g = std::make_shared<const GammaGroup>(GammaGroup::get(r.gamma));
            auto fm = std::make_shared<const FourierMatrix>(fourier_matrix(*g));
            it = groups.emplace(r.gamma, std::make_pair(g, fm)).first;
        }
        f.gamma = it->second.first;
        f.fourier = it->second.second;
        if (r.members.empty()) throw Error(ErrorCode::NotAPartition, "empty family");
        std::set<std::size_t> used;
        for (const auto& name : r.members) {
            const std::size_t chi = lookup(name);
            if (data.family_of[chi] != none)
                throw Error(ErrorCode::NotAPartition, name + " lies in two families");
            data.family_of[chi] = f.id;
            auto e = r.embedding.find(name);
            if (e == r.embedding.end())
                throw Error(ErrorCode::DataIntegrity, "no embedding given for " + name);
            const std::size_t idx = f.fourier->index_of(f.gamma->find(e->second.first, e->second.second));
            if (!used.insert(idx).second)
                throw Error(ErrorCode::EmbeddingNotInjective,
                            name + " shares its element " + f.gamma->str(f.fourier->elements[idx]));
            f.members.push_back(chi);
            f.embedding.push_back(idx);
        }
        for (const auto& [name, _] : r.embedding)
            if (std::find(r.members.begin(), r.members.end(), name) == r.members.end())
                throw Error(ErrorCode::UnknownLabel, "embedding names non-member " + name);
        f.delta.assign(f.size_M(), 1);
        for (const auto& [m, sign] : r.delta) {
            if (sign != 1 && sign != -1) throw Error(ErrorCode::DataIntegrity, "delta must be +1 or -1");
            f.delta[f.fourier->index_of(f.gamma->find(m.first, m.second))] = sign;
        }
        data.families.push_back(std::move(f));
    }
    for (std::size_t chi = 0; chi < data.family_of.size(); ++chi)
        if (data.family_of[chi] == none)
            throw Error(ErrorCode::NotAPartition, labels[chi].name + " is in no family");

    for (auto& f : data.families) {
        std::tie(f.a, f.A) = family_invariants(data, f.id, t, b);
        std::vector<std::size_t> lowest;
        for (auto chi : f.members)
            if (b[chi] == f.a) lowest.push_back(chi);
        if (lowest.size() != 1)
            throw Error(ErrorCode::SpecialNotUnique,
                        "family of " + labels[f.members.front()].name + " has " + std::to_string(lowest.size()) +
                            " members with b = a");
        f.special = lowest.front();
    }
    return data;
}

std::pair<int, int> family_invariants(const FamilyData& data, std::size_t family,
                                      const WeylCharacters& t, const std::vector<int>& b) {
    const Family& f = data.families[family];
    const int n = static_cast<int>(t.weyl->root_system().num_positive());
    int a = n, twisted_min = n;
    std::set<std::size_t> twisted;
    for (auto chi : f.members) {
        a = std::min(a, b[chi]);
        const std::size_t s = t.tensor_sign(chi);
        twisted.insert(data.family_of[s]);
        twisted_min = std::min(twisted_min, b[s]);
    }
    if (twisted.size() != 1)
        throw Error(ErrorCode::SignTwistNotAFamily, "sign twist of a family spreads over several families");
    const Family& g = data.families[*twisted.begin()];
    if (g.members.size() != f.members.size())
        throw Error(ErrorCode::SignTwistNotAFamily, "sign twist of a family is not a whole family");
    const int big_a = n - twisted_min;
    if (a > big_a) throw Error(ErrorCode::DataIntegrity, "a_c exceeds A_c");
    return {a, big_a};
}

BangMap solve_bang(const Family& f, const std::vector<int>& b) {
    const std::size_t n = f.size_M();
    const int global = (f.a + f.A) % 2 ? -1 : 1;
    BangMap out;
    out.image.resize(n);
    out.candidates.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> sols;
        for (std::size_t j = 0; j < n; ++j) {
            if (f.delta[j] != global * f.delta[i]) continue;
            bool ok = true;
            for (std::size_t k = 0; k < f.members.size() && ok; ++k) {
                const int s = (b[f.members[k]] + f.a) % 2 ? -1 : 1;
                ok = f.pairing(j, k) == f.pairing(i, k) * Rational(s);
            }
            if (ok) sols.push_back(j);
        }
        if (sols.empty())
            throw Error(ErrorCode::NoSolution, "no partner for " + f.m_name(i));
        out.image[i] = sols.front();
        out.candidates[i] = sols.size();
    }
    for (std::size_t i = 0; i < n; ++i)
        if (out.candidates[i] == 1 && out.image[out.image[i]] != i) out.involution = false;
    return out;
}

}  // namespace uniflip
