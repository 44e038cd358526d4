#pragma once

#include <nlohmann/json.hpp>

#include <string>

namespace uniflip::detail {

inline constexpr int kDataVersion = 1;

/// Reads a curated data file and returns its "records" array after checking
/// the type tag, the version and the checksum of the compact sorted-key dump
/// of the records. Throws DataIntegrity.
nlohmann::json load_records(const std::string& path, const std::string& type);

/// Same, from an in-memory document.
nlohmann::json parse_records(const std::string& text, const std::string& type,
                             const std::string& origin);

}  // namespace uniflip::detail
