// Copyright (C) 2026 The fairgen authors
// SPDX-License-Identifier: Apache-2.0
#include "fairgen/core/schema_io.hpp"

#include "fairgen/hashing.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace fairgen {

using nlohmann::json;

namespace {

AttributeSpec parse_attribute(const json& j) {
    AttributeSpec spec;
    spec.name = j.at("name").get<std::string>();
    spec.categories = j.at("categories").get<std::vector<std::string>>();
    if (j.contains("tokens_per_category")) {
        spec.tokens_per_category = j.at("tokens_per_category").get<int>();
    }
    if (j.contains("phrases")) {
        for (const auto& [cat, p] : j.at("phrases").items()) {
            HpsPhrases phrases;
            if (p.contains("positive")) phrases.positive = p.at("positive").get<std::string>();
            if (p.contains("negation")) phrases.negation = p.at("negation").get<std::string>();
            spec.phrases[cat] = phrases;
        }
    }
    if (j.contains("label_prompts")) {
        for (const auto& [cat, lp] : j.at("label_prompts").items()) {
            spec.label_prompts[cat] = lp.get<std::vector<std::string>>();
        }
    }
    return spec;
}

}  // namespace

AttributeSet parse_schema(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("schema is not valid JSON: ") + e.what());
    }
    AttributeSet attrs;
    try {
        if (j.contains("label_prompt_template")) {
            attrs.label_prompt_template = j.at("label_prompt_template").get<std::string>();
        }
        for (const auto& a : j.at("attributes")) {
            attrs.attributes.push_back(parse_attribute(a));
        }
    } catch (const json::exception& e) {
        throw ValidationError(std::string("schema field error: ") + e.what());
    }
    attrs.validate();
    return attrs;
}

AttributeSet load_schema(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw IngestionError("cannot open schema file: " + file.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_schema(buf.str());
}

std::string schema_to_json(const AttributeSet& attrs) {
    json j;
    j["label_prompt_template"] = attrs.label_prompt_template;
    j["attributes"] = json::array();
    for (const auto& a : attrs.attributes) {
        json ja;
        ja["name"] = a.name;
        ja["categories"] = a.categories;
        ja["tokens_per_category"] = a.tokens_per_category;
        if (!a.phrases.empty()) {
            json jp;
            for (const auto& [cat, p] : a.phrases) {
                jp[cat] = {{"positive", p.positive}, {"negation", p.negation}};
            }
            ja["phrases"] = jp;
        }
        if (!a.label_prompts.empty()) {
            json jl;
            for (const auto& [cat, lp] : a.label_prompts) jl[cat] = lp;
            ja["label_prompts"] = jl;
        }
        j["attributes"].push_back(ja);
    }
    return j.dump(2);
}

void save_schema(const AttributeSet& attrs, const std::filesystem::path& file) {
    std::ofstream out(file);
    if (!out) throw IngestionError("cannot write schema file: " + file.string());
    out << schema_to_json(attrs) << "\n";
}

std::string schema_hash(const AttributeSet& attrs) {
    std::ostringstream os;
    for (const auto& a : attrs.attributes) {
        os << a.name << "\x1f";
        for (const auto& c : a.categories) os << c << "\x1e";
        os << a.tokens_per_category << "\x1d";
    }
    return to_hex(fnv1a64(os.str()));
}

}  // namespace fairgen
