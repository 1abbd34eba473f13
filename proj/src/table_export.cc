// Copyright 2026 The mubgf Authors
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

#include <functional>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "mubgf/galois_field.h"
#include "mubgf/serialize.h"

namespace mubgf {

TableFormat parse_table_format(const std::string &name) {
    if (name == "csv") {
        return TableFormat::Csv;
    }
    if (name == "json") {
        return TableFormat::Json;
    }
    throw std::invalid_argument("unsupported table format '" + name + "' (expected csv or json)");
}

namespace {

using Table = std::vector<std::vector<uint32_t>>;

Table make_table(uint32_t n, const std::function<uint32_t(uint32_t, uint32_t)> &op) {
    Table t(n, std::vector<uint32_t>(n));
    for (uint32_t a = 0; a < n; a++) {
        for (uint32_t b = 0; b < n; b++) {
            t[a][b] = op(a, b);
        }
    }
    return t;
}

}  // namespace

std::string export_tables(const GaloisField &f, TableFormat format) {
    const uint32_t n = f.size();
    const std::pair<const char *, Table> tables[] = {
        {"field_mul", make_table(n, [&](uint32_t a, uint32_t b) { return f.mul(Element(a), Element(b)).label(); })},
        {"field_add", make_table(n, [&](uint32_t a, uint32_t b) { return f.add(Element(a), Element(b)).label(); })},
        {"mod_mul", make_table(n, [&](uint32_t a, uint32_t b) { return a * b % n; })},
        {"mod_add", make_table(n, [&](uint32_t a, uint32_t b) { return (a + b) % n; })},
    };

    if (format == TableFormat::Json) {
        nlohmann::ordered_json doc;
        doc["field"] = field_descriptor(f);
        for (const auto &[name, table] : tables) {
            doc["tables"][name] = table;
        }
        return doc.dump(2) + "\n";
    }

    // One block per table: the header row lists the right operands.
    std::ostringstream out;
    out << "table,row";
    for (uint32_t b = 0; b < n; b++) {
        out << "," << b;
    }
    out << "\n";
    for (const auto &[name, table] : tables) {
        for (uint32_t a = 0; a < n; a++) {
            out << name << "," << a;
            for (uint32_t b = 0; b < n; b++) {
                out << "," << table[a][b];
            }
            out << "\n";
        }
    }
    return out.str();
}

}  // namespace mubgf
