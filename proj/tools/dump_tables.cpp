// Dumps Weyl group classes and characters as JSON for the offline data generator.
#include "uniflip/error.hpp"
#include "uniflip/reptheory.hpp"

#include <nlohmann/json.hpp>

#include <iostream>
#include <memory>
#include <string>

using namespace uniflip;

int main(int argc, char** argv) {
    if (argc < 2 || std::string(argv[1]) == "--help" || std::string(argv[1]) == "-h") {
        std::cerr << "usage: uniflip_dump TYPE...\n";
        return argc < 2 ? 2 : 0;
    }
    nlohmann::json out = nlohmann::json::array();
    for (int a = 1; a < argc; ++a) try {
        auto rs = std::make_shared<const RootSystem>(build_root_system(CartanType::parse(argv[a])));
        WeylGroup w(rs);
        auto t = character_table(w);
        nlohmann::json j;
        j["type"] = rs->type().str();
        j["N"] = rs->num_positive();
        for (const auto& c : w.group().classes()) {
            auto word = w.reduced_word(c.representative);
            for (auto& s : word) ++s;
            j["classes"].push_back({{"word", word}, {"size", c.elements.size()}});
        }
        for (int i = 0; i < rs->rank(); ++i)
            j["simple_classes"].push_back(w.group().class_of(w.reflection(static_cast<std::size_t>(i))));
        for (int i = 0; i < rs->rank(); ++i)
            for (int k = i + 1; k < rs->rank(); ++k)
                j["pair_classes"][std::to_string(i + 1) + std::to_string(k + 1)] =
                    w.group().class_of(w.word({i, k}));
        for (std::size_t c = 0; c < t.num_chars(); ++c) {
            std::vector<std::string> fd;
            const Poly f = fake_degree(t, c);
            for (const auto& x : f.coeffs()) fd.push_back(x.str());
            j["chars"].push_back({{"values", t.values[c]}, {"b", b_invariant(t, c)}, {"fake_degree", fd}});
        }
        out.push_back(j);
    } catch (const Error& e) {
        std::cerr << "uniflip_dump: " << e.what() << "\n";
        return 2;
    }
    std::cout << out.dump(1) << "\n";
}
