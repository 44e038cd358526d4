#include "uniflip/checksum.hpp"

#include "internal/datafile.hpp"
#include "uniflip/error.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace uniflip {

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string fnv1a64_hex(std::string_view data) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(data)));
    return buf;
}

namespace detail {

nlohmann::json parse_records(const std::string& text, const std::string& type,
                             const std::string& origin) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::DataIntegrity, origin + ": " + e.what());
    }
    auto field = [&](const char* key) -> const nlohmann::json& {
        if (!doc.is_object() || !doc.contains(key))
            throw Error(ErrorCode::DataIntegrity, origin + ": missing field '" + key + "'");
        return doc.at(key);
    };
    if (field("type") != type)
        throw Error(ErrorCode::DataIntegrity,
                    origin + ": type tag " + field("type").dump() + " does not match " + type);
    if (field("version") != kDataVersion)
        throw Error(ErrorCode::DataIntegrity, origin + ": unsupported version " + field("version").dump());
    const auto& records = field("records");
    if (!records.is_array()) throw Error(ErrorCode::DataIntegrity, origin + ": records is not a list");
    const std::string sum = fnv1a64_hex(records.dump());
    if (field("checksum") != sum)
        throw Error(ErrorCode::DataIntegrity, origin + ": checksum mismatch (computed " + sum + ")");
    return records;
}

nlohmann::json load_records(const std::string& path, const std::string& type) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::DataIntegrity, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_records(ss.str(), type, path);
}

}  // namespace detail
}  // namespace uniflip
