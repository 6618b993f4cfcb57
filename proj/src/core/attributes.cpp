// Copyright (C) 2026 The fairgen authors
// SPDX-License-Identifier: Apache-2.0
#include "fairgen/core/attributes.hpp"

#include <set>
#include <sstream>

namespace fairgen {

int AttributeSpec::category_index(const std::string& category) const {
    for (std::size_t i = 0; i < categories.size(); ++i) {
        if (categories[i] == category) return static_cast<int>(i);
    }
    throw SchemaError("attribute '" + name + "' has no category '" + category + "'");
}

void AttributeSpec::validate() const {
    if (name.empty()) throw SchemaError("attribute with empty name");
    if (categories.size() < 2) {
        throw SchemaError("attribute '" + name + "' needs at least 2 categories");
    }
    std::set<std::string> seen;
    for (const auto& c : categories) {
        if (c.empty()) throw SchemaError("attribute '" + name + "' has an empty category name");
        if (!seen.insert(c).second) {
            throw SchemaError("attribute '" + name + "' has duplicate category '" + c + "'");
        }
    }
    if (tokens_per_category < 1) {
        throw SchemaError("attribute '" + name + "' needs tokens_per_category >= 1");
    }
    for (const auto& [cat, _] : phrases) {
        if (!seen.count(cat)) {
            throw SchemaError("attribute '" + name + "' has phrases for unknown category '" + cat + "'");
        }
    }
    for (const auto& [cat, _] : label_prompts) {
        if (!seen.count(cat)) {
            throw SchemaError("attribute '" + name + "' has label prompts for unknown category '" + cat + "'");
        }
    }
}

std::size_t AttributeSet::joint_size() const {
    std::size_t n = 1;
    for (const auto& a : attributes) n *= a.categories.size();
    return n;
}

int AttributeSet::attribute_index(const std::string& name) const {
    for (std::size_t i = 0; i < attributes.size(); ++i) {
        if (attributes[i].name == name) return static_cast<int>(i);
    }
    throw SchemaError("no attribute named '" + name + "'");
}

void AttributeSet::validate() const {
    std::set<std::string> names;
    for (const auto& a : attributes) {
        a.validate();
        if (!names.insert(a.name).second) {
            throw SchemaError("duplicate attribute name '" + a.name + "'");
        }
    }
}

std::vector<CategoryCombination> enumerate_combinations(const AttributeSet& attrs) {
    const std::size_t n = attrs.joint_size();
    std::vector<CategoryCombination> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        out.push_back(combination_from_index(attrs, k));
    }
    return out;
}

std::size_t combination_index(const AttributeSet& attrs, const CategoryCombination& combo) {
    if (combo.indices.size() != attrs.size()) {
        throw SchemaError("combination has " + std::to_string(combo.indices.size()) +
                          " entries for " + std::to_string(attrs.size()) + " attributes");
    }
    std::size_t idx = 0;
    for (std::size_t m = 0; m < attrs.size(); ++m) {
        const int k = attrs.attributes[m].category_count();
        const int c = combo.indices[m];
        if (c < 0 || c >= k) {
            throw SchemaError("category index " + std::to_string(c) +
                              " out of range for attribute '" + attrs.attributes[m].name + "'");
        }
        idx = idx * static_cast<std::size_t>(k) + static_cast<std::size_t>(c);
    }
    return idx;
}

CategoryCombination combination_from_index(const AttributeSet& attrs, std::size_t index) {
    if (index >= attrs.joint_size()) {
        throw SchemaError("combination index " + std::to_string(index) + " out of range");
    }
    CategoryCombination combo;
    combo.indices.assign(attrs.size(), 0);
    for (std::size_t m = attrs.size(); m-- > 0;) {
        const auto k = static_cast<std::size_t>(attrs.attributes[m].category_count());
        combo.indices[m] = static_cast<int>(index % k);
        index /= k;
    }
    return combo;
}

std::string combination_to_string(const AttributeSet& attrs, const CategoryCombination& combo) {
    std::ostringstream os;
    for (std::size_t m = 0; m < attrs.size(); ++m) {
        if (m) os << ",";
        os << attrs.attributes[m].name << "=";
        const int c = combo.indices.size() > m ? combo.indices[m] : -1;
        if (c >= 0 && c < attrs.attributes[m].category_count()) {
            os << attrs.attributes[m].categories[static_cast<std::size_t>(c)];
        } else {
            os << "<invalid:" << c << ">";
        }
    }
    return os.str();
}

}  // namespace fairgen
