// Copyright (C) 2026 The fairgen authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "fairgen/core/prompt.hpp"
#include "fairgen/encoders/encoder.hpp"

#include <string>

namespace fairgen {

// Tokenized base prompt with the combination's fair tokens appended. Never
// consults the training prompt: swapping T changes only the base tokens,
// which is what makes trained tokens plug-and-play.
InclusivePrompt assemble_prompt(const std::string& prompt, const FairTokenTable& table,
                                const AttributeSet& attrs, const CategoryCombination& combination,
                                const Encoder& encoder);

struct HardPrompt {
    std::string positive;
    std::string negative;
};

// Hard Prompt Search text construction. Each selected category's positive
// phrase extends the running positive text ("{prompt}" substitutes the
// current text; a phrase without the placeholder replaces it). Under
// negative prompting, categories with a negation phrase contribute it to the
// negative text instead and leave the positive text alone.
HardPrompt build_hard_prompt(const std::string& prompt, const AttributeSet& attrs,
                             const CategoryCombination& combination, bool negative_prompting);

struct HybridConditioning {
    TokenSeq positive_tokens;  // hard-prompt positive text tokens ++ fair tokens
    std::string negative_text;
};

// Fair tokens for the attributes that need image guidance, hard negative
// prompts for the rest; the two attribute subsets must be disjoint.
HybridConditioning hybrid_conditioning(const std::string& prompt, const FairTokenTable& table,
                                       const AttributeSet& itigen_attrs,
                                       const CategoryCombination& itigen_combination,
                                       const AttributeSet& hpsn_attrs,
                                       const CategoryCombination& hpsn_combination,
                                       const Encoder& encoder);

}  // namespace fairgen
