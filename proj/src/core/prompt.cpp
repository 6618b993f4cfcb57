// Copyright (C) 2026 The fairgen authors
// SPDX-License-Identifier: Apache-2.0
#include "fairgen/core/prompt.hpp"

#include "fairgen/errors.hpp"

namespace fairgen {

InclusivePrompt build_inclusive_prompt(const TokenSeq& base_tokens,
                                       const FairTokenTable& table,
                                       const AttributeSet& attrs,
                                       const CategoryCombination& combination,
                                       int max_sequence_length) {
    // Validates category ranges as a side effect.
    combination_index(attrs, combination);

    InclusivePrompt p;
    p.base_tokens = base_tokens;
    p.combination = combination;
    p.assembled_tokens = base_tokens;
    for (std::size_t m = 0; m < attrs.size(); ++m) {
        const auto& slots = table.entries.at(m).at(static_cast<std::size_t>(combination.indices[m]));
        p.assembled_tokens.insert(p.assembled_tokens.end(), slots.begin(), slots.end());
    }
    if (max_sequence_length > 0 &&
        p.assembled_tokens.size() > static_cast<std::size_t>(max_sequence_length)) {
        throw SequenceLengthError("assembled prompt has " + std::to_string(p.assembled_tokens.size()) +
                                  " tokens, encoder limit is " + std::to_string(max_sequence_length));
    }
    return p;
}

}  // namespace fairgen
