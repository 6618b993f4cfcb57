// Copyright (C) 2026 The fairgen authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "fairgen/errors.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace fairgen {

// Text phrases used by hard-prompt construction. `positive` extends the
// positive prompt; it may contain the "{prompt}" placeholder, in which case
// it is a template applied to the current positive text, otherwise it
// replaces it outright. `negation` is the feature text to suppress through
// the negative conditioning channel.
struct HpsPhrases {
    std::string positive;
    std::string negation;
};

// One sensitive attribute: its ordered categories, the number of learnable
// token slots per category, and optional prompt phrases.
struct AttributeSpec {
    std::string name;
    std::vector<std::string> categories;
    int tokens_per_category = 3;
    std::map<std::string, HpsPhrases> phrases;
    std::map<std::string, std::vector<std::string>> label_prompts;

    int category_count() const { return static_cast<int>(categories.size()); }
    // Index of a category name, or throws SchemaError.
    int category_index(const std::string& category) const;
    void validate() const;
};

// Ordered list of attributes. Declaration order is the single source of
// truth for token concatenation and combination enumeration.
struct AttributeSet {
    std::vector<AttributeSpec> attributes;
    std::string label_prompt_template = "a headshot of a person with {category}";

    std::size_t size() const { return attributes.size(); }
    std::size_t joint_size() const;
    int attribute_index(const std::string& name) const;
    void validate() const;
};

// One choice of category per attribute, bijective with [0, joint_size)
// under mixed-radix encoding, attribute 0 most significant.
struct CategoryCombination {
    std::vector<int> indices;

    bool operator==(const CategoryCombination&) const = default;
};

std::vector<CategoryCombination> enumerate_combinations(const AttributeSet& attrs);
std::size_t combination_index(const AttributeSet& attrs, const CategoryCombination& combo);
CategoryCombination combination_from_index(const AttributeSet& attrs, std::size_t index);

// Human-readable "Gender=female,Eyeglasses=positive" form for diagnostics.
std::string combination_to_string(const AttributeSet& attrs, const CategoryCombination& combo);

}  // namespace fairgen
