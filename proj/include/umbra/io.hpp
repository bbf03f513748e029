#pragma once

#include "umbra/core.hpp"
#include "umbra/poly.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace umbra {

namespace detail {

inline rational rational_from_json(const nlohmann::json& j, const std::string& where) {
    if (j.is_string())
        return rational::parse(j.get<std::string>());
    if (j.is_number_integer())
        return rational(static_cast<long long>(j.get<long long>()));
    throw parse_error(where + ": rationals must be strings like \"a/b\" or integers");
}

} // namespace detail

/// {"n_max": N, "rows": [["1"], ["0","1"], ...]} with every rational as its
/// exact string; integers never carry a "/1".
inline nlohmann::json triangle_to_json(const triangle& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (int n = 0; n <= t.n_max(); ++n) {
        nlohmann::json row = nlohmann::json::array();
        for (const rational& a : t.row(n))
            row.push_back(a.str());
        rows.push_back(std::move(row));
    }
    return nlohmann::json{{"n_max", t.n_max()}, {"rows", std::move(rows)}};
}

inline triangle triangle_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array() || j["rows"].empty())
        throw parse_error("triangle file: expected an object with a nonempty \"rows\" array");
    std::vector<std::vector<rational>> rows;
    rows.reserve(j["rows"].size());
    for (std::size_t n = 0; n < j["rows"].size(); ++n) {
        const auto& jrow = j["rows"][n];
        if (!jrow.is_array())
            throw parse_error("triangle file: row " + std::to_string(n) + " is not an array");
        std::vector<rational> row;
        row.reserve(jrow.size());
        for (std::size_t k = 0; k < jrow.size(); ++k)
            row.push_back(detail::rational_from_json(
                jrow[k], "triangle file: row " + std::to_string(n) + ", entry " +
                             std::to_string(k)));
        rows.push_back(std::move(row));
    }
    return triangle(std::move(rows));
}

/// One line per row, comma-joined exact rational strings, no header.
inline std::string triangle_to_csv(const triangle& t) {
    std::string out;
    for (int n = 0; n <= t.n_max(); ++n) {
        const auto& row = t.row(n);
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k != 0)
                out += ',';
            out += row[k].str();
        }
        out += '\n';
    }
    return out;
}

/// {"name": "...", "cumulants": ["1", "-1/2", ...]}; name is optional.
inline cumulant_seq cumulants_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("cumulants") || !j["cumulants"].is_array() ||
        j["cumulants"].empty())
        throw parse_error(
            "cumulant file: expected an object with a nonempty \"cumulants\" array");
    std::vector<rational> c;
    c.reserve(j["cumulants"].size());
    for (std::size_t k = 0; k < j["cumulants"].size(); ++k)
        c.push_back(detail::rational_from_json(
            j["cumulants"][k], "cumulant file: entry " + std::to_string(k)));
    return cumulant_seq(std::move(c));
}

/// Parses "1,-1,2" style inline lists; spaces around items are tolerated.
inline cumulant_seq parse_cumulant_list(std::string_view text) {
    std::vector<rational> c;
    std::size_t start = 0;
    std::size_t item = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view tok = text.substr(start, end - start);
        while (!tok.empty() && tok.front() == ' ')
            tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ')
            tok.remove_suffix(1);
        try {
            c.push_back(rational::parse(tok));
        } catch (const parse_error&) {
            throw parse_error("cumulant list: item " + std::to_string(item + 1) +
                              " (\"" + std::string(tok) + "\") is not a rational");
        }
        ++item;
        start = end + 1;
    }
    return cumulant_seq(std::move(c));
}

/// Human-readable polynomial like "x^3 - 3*x^2 + 2*x"; the zero polynomial
/// prints as "0".
inline std::string poly_to_string(const poly& p) {
    const int deg = p.degree();
    if (deg < 0)
        return "0";
    std::string out;
    for (int k = deg; k >= 0; --k) {
        const rational a = p.coeff(static_cast<std::size_t>(k));
        if (a.is_zero())
            continue;
        const bool negative = a.sign() < 0;
        if (out.empty()) {
            if (negative)
                out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        const rational mag = abs(a);
        const std::string mag_str = mag.str();
        if (k == 0) {
            out += mag_str;
        } else {
            if (mag_str != "1") {
                out += mag_str;
                out += '*';
            }
            out += 'x';
            if (k > 1) {
                out += '^';
                out += std::to_string(k);
            }
        }
    }
    return out;
}

} // namespace umbra
