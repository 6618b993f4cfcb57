// Copyright (C) 2026 The fairgen authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "fairgen/core/attributes.hpp"
#include "fairgen/core/reference.hpp"
#include "fairgen/encoders/encoder.hpp"

#include <map>
#include <string>
#include <vector>

namespace fairgen {

// Resolved label prompts per attribute and category: the schema's explicit
// lists where present, otherwise the schema's template with "{category}"
// substituted. Zero-shot classification is known to be unreliable, so the
// exact texts are recorded in every metric report.
std::vector<std::vector<std::vector<std::string>>> resolve_label_prompts(const AttributeSet& attrs);

// Per attribute independently: argmax over categories of the mean inner
// product between the image feature and the category's label-prompt
// embeddings. Ties break to the lowest category index.
CategoryCombination classify(const ImageRecord& image, const AttributeSet& attrs,
                             const std::vector<std::vector<std::vector<std::string>>>& label_prompts,
                             const Encoder& encoder);

// Batch variant sharing one set of label-prompt embeddings across images.
std::vector<CategoryCombination> classify_batch(
    const std::vector<ImageRecord>& images, const AttributeSet& attrs,
    const std::vector<std::vector<std::vector<std::string>>>& label_prompts,
    const Encoder& encoder);

}  // namespace fairgen
