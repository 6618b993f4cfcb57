// Copyright (C) 2026 The fairgen authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "fairgen/core/attributes.hpp"

#include <filesystem>
#include <string>

namespace fairgen {

// Attribute schema file format (JSON):
//   {
//     "label_prompt_template": "a headshot of a person with {category}",
//     "attributes": [
//       {"name": "...", "categories": ["...", ...],
//        "tokens_per_category": 3,
//        "phrases": {"<category>": {"positive": "...", "negation": "..."}},
//        "label_prompts": {"<category>": ["...", ...]}}
//     ]
//   }
AttributeSet load_schema(const std::filesystem::path& file);
AttributeSet parse_schema(const std::string& json_text);
std::string schema_to_json(const AttributeSet& attrs);
void save_schema(const AttributeSet& attrs, const std::filesystem::path& file);

// Stable hash over the structural fields (names, categories, token counts),
// used to tie token tables and metric reports to the schema they came from.
std::string schema_hash(const AttributeSet& attrs);

}  // namespace fairgen
