#include "report.hpp"

#include <algorithm>
#include <sstream>

namespace uniflip::cli {

namespace {

using nlohmann::ordered_json;

bool is_poly(const ordered_json& v) {
    return v.is_array() && std::all_of(v.begin(), v.end(), [](const ordered_json& c) {
               return c.is_array() && c.size() == 2 && c[0].is_number_integer() && c[1].is_number_integer();
           });
}

Poly to_poly(const ordered_json& v) {
    std::vector<Rational> c;
    for (const auto& x : v) c.emplace_back(x[0].get<long>(), x[1].get<long>());
    return Poly(std::move(c));
}

std::string scalar_text(const ordered_json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "pass" : "FAIL";
    if (v.is_null()) return "-";
    return v.dump();
}

std::string cell_text(const ordered_json& v, bool csv) {
    if (v.is_array() && !v.empty() && is_poly(v)) {
        if (!csv) return to_poly(v).str();
        std::string s;
        for (const auto& c : v) {
            if (!s.empty()) s += ';';
            s += std::to_string(c[0].get<long>()) + "/" + std::to_string(c[1].get<long>());
        }
        return s;
    }
    if (v.is_array()) {
        if (v.empty()) return csv ? "" : "-";
        std::string s;
        for (const auto& x : v) s += (s.empty() ? "" : " ") + scalar_text(x);
        return s;
    }
    return scalar_text(v);
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

std::string render_table(const Report& r) {
    std::vector<std::vector<std::string>> cells{r.columns};
    for (const auto& row : r.rows) {
        std::vector<std::string> line;
        for (const auto& c : r.columns) line.push_back(row.contains(c) ? cell_text(row[c], false) : "-");
        cells.push_back(std::move(line));
    }
    std::vector<std::size_t> width(r.columns.size(), 0);
    for (const auto& line : cells)
        for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
    std::ostringstream out;
    for (const auto& [k, v] : r.meta.items()) out << k << ": " << scalar_text(v) << '\n';
    for (std::size_t l = 0; l < cells.size(); ++l) {
        std::string text;
        for (std::size_t i = 0; i < cells[l].size(); ++i) {
            if (i) text += "  ";
            text += cells[l][i];
            if (i + 1 < cells[l].size()) text.append(width[i] - cells[l][i].size(), ' ');
        }
        out << text << '\n';
        if (l == 0) {
            std::size_t total = 0;
            for (std::size_t i = 0; i < width.size(); ++i) total += width[i] + (i ? 2 : 0);
            out << std::string(total, '-') << '\n';
        }
    }
    for (const auto& n : r.notes) out << n << '\n';
    return out.str();
}

std::string render_csv(const Report& r) {
    std::ostringstream out;
    for (std::size_t i = 0; i < r.columns.size(); ++i) out << (i ? "," : "") << csv_escape(r.columns[i]);
    out << '\n';
    for (const auto& row : r.rows) {
        for (std::size_t i = 0; i < r.columns.size(); ++i) {
            const auto& c = r.columns[i];
            out << (i ? "," : "") << csv_escape(row.contains(c) ? cell_text(row[c], true) : "");
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace

nlohmann::ordered_json poly_json(const Poly& p) {
    ordered_json a = ordered_json::array();
    for (const auto& c : p.coeffs())
        a.push_back({Rational(c.numerator()).to_int64(), Rational(c.denominator()).to_int64()});
    if (a.empty()) a.push_back({0, 1});
    return a;
}

std::string render(const Report& r, Format f) {
    switch (f) {
        case Format::Json: {
            ordered_json j;
            j["command"] = r.command;
            for (const auto& [k, v] : r.meta.items()) j[k] = v;
            j["rows"] = r.rows;
            j["pass"] = r.pass;
            return j.dump(2) + "\n";
        }
        case Format::Csv:
            return render_csv(r);
        case Format::Table:
            break;
    }
    return render_table(r);
}

}  // namespace uniflip::cli
