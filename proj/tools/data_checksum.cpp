// Recomputes the checksum of curated data files; with --write, stores it.
#include "uniflip/checksum.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
    bool write = false;
    int status = 0;
    for (int a = 1; a < argc; ++a) {
        const std::string path = argv[a];
        if (path == "--write") {
            write = true;
            continue;
        }
        std::ifstream in(path);
        if (!in) {
            std::cerr << path << ": cannot open\n";
            status = 1;
            continue;
        }
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(in);
        } catch (const nlohmann::json::exception& e) {
            std::cerr << path << ": " << e.what() << '\n';
            status = 1;
            continue;
        }
        const std::string sum = uniflip::fnv1a64_hex(doc["records"].dump());
        const bool ok = doc.value("checksum", "") == sum;
        std::cout << path << ": " << sum << (ok ? " ok" : " mismatch") << '\n';
        if (!ok && write) {
            doc["checksum"] = sum;
            std::ofstream(path) << doc.dump(1) << '\n';
        } else if (!ok) {
            status = 1;
        }
    }
    if (argc < 2) std::cerr << "usage: uniflip_checksum [--write] FILE...\n";
    return argc < 2 ? 2 : status;
}
