// Copyright 2026 The repcheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "repcheck/character.hpp"
#include "repcheck/cyclo.hpp"

namespace repcheck {

using Json = nlohmann::ordered_json;

/// {"num": "...", "den": "..."} with decimal strings.
inline Json rational_json(const Rational &q) {
    return Json{{"num", boost::multiprecision::numerator(q).str()},
                {"den", boost::multiprecision::denominator(q).str()}};
}

inline Rational rational_from_json(const Json &j) {
    return Rational(BigInt(j.at("num").get<std::string>()), BigInt(j.at("den").get<std::string>()));
}

/// Coefficient 4-tuple in the zeta power basis.
inline Json cyclo_json(const CycloNum &x) {
    Json arr = Json::array();
    for (const auto &c : x.coeffs()) arr.push_back(rational_json(c));
    return arr;
}

inline CycloNum cyclo_from_json(const Json &j) {
    if (!j.is_array() || j.size() != 4) throw Error(ErrorKind::DimensionMismatch, "expected 4 coefficients");
    return {rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2]), rational_from_json(j[3])};
}

inline Json class_function_json(const ClassFunction &f) {
    Json arr = Json::array();
    for (const auto &v : f.values()) arr.push_back(cyclo_json(v));
    return arr;
}

inline Json char_table_json(const CharTable &t) {
    const auto &g = *t.group;
    Json reps = Json::array();
    for (Element r : g.classes().representatives) reps.push_back(g.word(r));
    Json rows = Json::array();
    for (const auto &chi : t.irreducibles) rows.push_back(class_function_json(chi));
    return Json{{"group", g.name()},
                {"representatives", reps},
                {"class_sizes", g.classes().sizes},
                {"labels", t.labels},
                {"values", rows}};
}

/// Number of code points; every glyph used here is single-width.
inline std::size_t display_width(const std::string &s) {
    std::size_t n = 0;
    for (unsigned char c : s) n += (c & 0xC0) != 0x80;
    // Combining overline in "χσ̄" takes no column.
    for (std::size_t p = s.find("\xCC\x84"); p != std::string::npos; p = s.find("\xCC\x84", p + 1)) n--;
    return n;
}

inline std::string pad(const std::string &s, std::size_t width) {
    std::size_t w = display_width(s);
    return s + std::string(width > w ? width - w : 0, ' ');
}

/// Aligned table with class representatives as column heads.
inline std::string format_char_table(const CharTable &t) {
    const auto &g = *t.group;
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> head{""};
    for (Element r : g.classes().representatives) head.push_back(g.word(r));
    cells.push_back(head);
    std::vector<std::string> sizes{"|K|"};
    for (auto s : g.classes().sizes) sizes.push_back(std::to_string(s));
    cells.push_back(sizes);
    for (std::size_t k = 0; k < t.size(); k++) {
        std::vector<std::string> row{t.labels[k]};
        for (const auto &v : t.irreducibles[k].values()) row.push_back(v.str());
        cells.push_back(row);
    }
    std::vector<std::size_t> width(head.size(), 0);
    for (const auto &row : cells) {
        for (std::size_t c = 0; c < row.size(); c++) width[c] = std::max(width[c], display_width(row[c]));
    }
    std::ostringstream os;
    os << "character table " << g.name() << "\n";
    for (const auto &row : cells) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); c++) line += (c ? "  " : "") + pad(row[c], width[c]);
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << "\n";
    }
    return os.str();
}

}  // namespace repcheck
