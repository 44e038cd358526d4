#pragma once

#include "uniflip/poly.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace uniflip::cli {

enum class Format { Table, Json, Csv };

/// Rows are JSON objects keyed by `columns`. A cell holding an array of
/// [num, den] pairs is a polynomial in ascending degree.
struct Report {
    std::string command;
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    std::vector<std::string> columns;
    std::vector<nlohmann::ordered_json> rows;
    std::vector<std::string> notes;  ///< trailing lines in table output
    bool pass = true;
};

nlohmann::ordered_json poly_json(const Poly& p);
std::string render(const Report& r, Format f);

}  // namespace uniflip::cli
