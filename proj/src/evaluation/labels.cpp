// Copyright (C) 2026 The fairgen authors
// SPDX-License-Identifier: Apache-2.0
#include "fairgen/evaluation/labels.hpp"

#include "fairgen/errors.hpp"

#include <fstream>
#include <sstream>

namespace fairgen {

namespace {

std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> fields;
    std::istringstream is(line);
    std::string field;
    while (std::getline(is, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

}  // namespace

std::vector<LabelRecord> parse_manual_labels(const std::string& csv_text,
                                             const AttributeSet& attrs) {
    std::istringstream in(csv_text);
    std::string line;
    if (!std::getline(in, line)) throw ValidationError("label file is empty (no header)");
    if (!line.empty() && line.back() == '\r') line.pop_back();

    const auto header = split_csv_row(line);
    if (header.size() != attrs.size() + 1 || header[0] != "path") {
        throw ValidationError("label header must be 'path,<attributes...>' in schema order");
    }
    for (std::size_t m = 0; m < attrs.size(); ++m) {
        if (header[m + 1] != attrs.attributes[m].name) {
            throw ValidationError("label header column " + std::to_string(m + 1) + " is '" +
                                  header[m + 1] + "', expected '" + attrs.attributes[m].name + "'");
        }
    }

    std::vector<LabelRecord> records;
    std::vector<std::string> bad_lines;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto fields = split_csv_row(line);
        if (fields.size() != attrs.size() + 1) {
            bad_lines.push_back("line " + std::to_string(line_no) + ": expected " +
                                std::to_string(attrs.size() + 1) + " fields, got " +
                                std::to_string(fields.size()));
            continue;
        }
        LabelRecord rec;
        rec.path = fields[0];
        rec.source = LabelSource::kManual;
        bool ok = true;
        for (std::size_t m = 0; m < attrs.size(); ++m) {
            try {
                rec.combination.indices.push_back(
                    attrs.attributes[m].category_index(fields[m + 1]));
            } catch (const SchemaError&) {
                bad_lines.push_back("line " + std::to_string(line_no) + ": unknown category '" +
                                    fields[m + 1] + "' for attribute '" +
                                    attrs.attributes[m].name + "'");
                ok = false;
                break;
            }
        }
        if (ok) records.push_back(std::move(rec));
    }
    if (!bad_lines.empty()) {
        std::ostringstream msg;
        msg << bad_lines.size() << " malformed label row(s):";
        for (const auto& b : bad_lines) msg << "\n  " << b;
        throw ValidationError(msg.str());
    }
    return records;
}

std::vector<LabelRecord> ingest_manual_labels(const std::filesystem::path& file,
                                              const AttributeSet& attrs) {
    std::ifstream in(file);
    if (!in) throw IngestionError("cannot open label file: " + file.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_manual_labels(buf.str(), attrs);
}

std::map<std::pair<std::string, std::string>, PreferenceRate> preference_tally(
    const std::vector<PairwiseChoice>& choices) {
    std::map<std::pair<std::string, std::string>, PreferenceRate> rates;
    for (std::size_t i = 0; i < choices.size(); ++i) {
        const auto& c = choices[i];
        if (c.winner != c.method_a && c.winner != c.method_b) {
            throw ValidationError("choice " + std::to_string(i + 1) + ": winner '" + c.winner +
                                  "' is neither '" + c.method_a + "' nor '" + c.method_b + "'");
        }
        auto& ab = rates[{c.method_a, c.method_b}];
        auto& ba = rates[{c.method_b, c.method_a}];
        ab.comparisons++;
        ba.comparisons++;
        (c.winner == c.method_a ? ab : ba).wins++;
    }
    return rates;
}

std::vector<PairwiseChoice> load_preference_csv(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw IngestionError("cannot open preference file: " + file.string());
    std::vector<PairwiseChoice> choices;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (first && line == "image_a_method,image_b_method,winner") {
            first = false;
            continue;
        }
        first = false;
        const auto fields = split_csv_row(line);
        if (fields.size() != 3) {
            throw ValidationError("preference rows need 3 fields: " + line);
        }
        choices.push_back({fields[0], fields[1], fields[2]});
    }
    return choices;
}

}  // namespace fairgen
