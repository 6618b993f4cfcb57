// Copyright (C) 2026 The fairgen authors
// SPDX-License-Identifier: Apache-2.0
#include "fairgen/core/token_table.hpp"

#include "fairgen/core/schema_io.hpp"
#include "fairgen/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>

namespace fairgen {

using nlohmann::json;

FairTokenTable FairTokenTable::zeros(const AttributeSet& attrs, int d_tok) {
    FairTokenTable t;
    t.entries.resize(attrs.size());
    for (std::size_t m = 0; m < attrs.size(); ++m) {
        const auto& spec = attrs.attributes[m];
        t.entries[m].resize(static_cast<std::size_t>(spec.category_count()));
        for (auto& slots : t.entries[m]) {
            slots.assign(static_cast<std::size_t>(spec.tokens_per_category), Vec::Zero(d_tok));
        }
    }
    return t;
}

int FairTokenTable::token_width() const {
    for (const auto& per_attr : entries) {
        for (const auto& slots : per_attr) {
            if (!slots.empty()) return static_cast<int>(slots.front().size());
        }
    }
    return 0;
}

void FairTokenTable::validate(const AttributeSet& attrs, int expected_d_tok) const {
    if (entries.size() != attrs.size()) {
        throw SchemaError("token table has " + std::to_string(entries.size()) +
                          " attributes, schema has " + std::to_string(attrs.size()));
    }
    const int d = expected_d_tok > 0 ? expected_d_tok : token_width();
    for (std::size_t m = 0; m < attrs.size(); ++m) {
        const auto& spec = attrs.attributes[m];
        if (entries[m].size() != spec.categories.size()) {
            throw SchemaError("token table category count mismatch for '" + spec.name + "'");
        }
        for (std::size_t i = 0; i < entries[m].size(); ++i) {
            const auto& slots = entries[m][i];
            if (static_cast<int>(slots.size()) != spec.tokens_per_category) {
                throw SchemaError("token table slot count mismatch for '" + spec.name +
                                  "' category '" + spec.categories[i] + "'");
            }
            for (const auto& v : slots) {
                if (v.size() != d) {
                    throw SchemaError("token width mismatch for '" + spec.name + "'");
                }
                if (!v.allFinite()) {
                    throw NumericError("non-finite token entry for '" + spec.name +
                                       "' category '" + spec.categories[i] + "'");
                }
            }
        }
    }
}

std::size_t FairTokenTable::parameter_count() const {
    std::size_t n = 0;
    for (const auto& per_attr : entries) {
        for (const auto& slots : per_attr) {
            for (const auto& v : slots) n += static_cast<std::size_t>(v.size());
        }
    }
    return n;
}

void save_token_table(const FairTokenTable& table, const AttributeSet& attrs,
                      const std::filesystem::path& file) {
    table.validate(attrs);
    json header;
    header["format"] = "fairgen-token-table-v1";
    header["schema_hash"] = schema_hash(attrs);
    header["encoder_id"] = table.encoder_id;
    header["source_prompt"] = table.source_prompt;
    header["config_hash"] = table.config_hash;
    header["d_tok"] = table.token_width();
    json shape = json::array();
    for (const auto& a : attrs.attributes) {
        shape.push_back({{"name", a.name},
                         {"categories", a.categories.size()},
                         {"tokens_per_category", a.tokens_per_category}});
    }
    header["shape"] = shape;

    std::ofstream out(file, std::ios::binary);
    if (!out) throw IngestionError("cannot write token table: " + file.string());
    out << header.dump() << "\n---\n";
    for (const auto& per_attr : table.entries) {
        for (const auto& slots : per_attr) {
            for (const auto& v : slots) {
                out.write(reinterpret_cast<const char*>(v.data()),
                          static_cast<std::streamsize>(sizeof(double) * static_cast<std::size_t>(v.size())));
            }
        }
    }
    if (!out) throw IngestionError("short write on token table: " + file.string());
}

FairTokenTable load_token_table(const std::filesystem::path& file, const AttributeSet& attrs) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw IngestionError("cannot open token table: " + file.string());
    std::string header_line, sep;
    std::getline(in, header_line);
    std::getline(in, sep);
    if (sep != "---") throw ValidationError("malformed token table header: " + file.string());
    json header;
    try {
        header = json::parse(header_line);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("token table header is not JSON: ") + e.what());
    }
    if (header.value("format", "") != "fairgen-token-table-v1") {
        throw ValidationError("unknown token table format in " + file.string());
    }
    if (header.value("schema_hash", "") != schema_hash(attrs)) {
        throw SchemaError("token table " + file.string() + " was trained for a different schema");
    }
    const int d_tok = header.at("d_tok").get<int>();

    FairTokenTable table = FairTokenTable::zeros(attrs, d_tok);
    table.encoder_id = header.value("encoder_id", "");
    table.source_prompt = header.value("source_prompt", "");
    table.schema_hash = header.value("schema_hash", "");
    table.config_hash = header.value("config_hash", "");
    for (auto& per_attr : table.entries) {
        for (auto& slots : per_attr) {
            for (auto& v : slots) {
                in.read(reinterpret_cast<char*>(v.data()),
                        static_cast<std::streamsize>(sizeof(double) * static_cast<std::size_t>(d_tok)));
                if (!in) throw ValidationError("token table blob truncated: " + file.string());
            }
        }
    }
    table.validate(attrs, d_tok);
    return table;
}

}  // namespace fairgen
