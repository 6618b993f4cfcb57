// Copyright (C) 2026 The fairgen authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "fairgen/common.hpp"
#include "fairgen/core/attributes.hpp"
#include "fairgen/core/token_table.hpp"

namespace fairgen {

// Base text tokens with the fair tokens of one category combination
// appended, in attribute order.
struct InclusivePrompt {
    TokenSeq base_tokens;
    CategoryCombination combination;
    TokenSeq assembled_tokens;
};

// assembled = base ++ tokens(attr 0, combo) ++ ... ++ tokens(attr M-1, combo).
// length(assembled) == length(base) + sum_m q_m by construction; callers that
// know the encoder limit pass max_sequence_length to get the overflow check.
InclusivePrompt build_inclusive_prompt(const TokenSeq& base_tokens,
                                       const FairTokenTable& table,
                                       const AttributeSet& attrs,
                                       const CategoryCombination& combination,
                                       int max_sequence_length = -1);

}  // namespace fairgen
