// Copyright (C) 2026 The fairgen authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "fairgen/common.hpp"
#include "fairgen/core/attributes.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace fairgen {

// The learnable per-(attribute, category) token embeddings: the optimization
// variable. entries[m][i] holds exactly q_m vectors of width d_tok.
struct FairTokenTable {
    std::vector<std::vector<std::vector<Vec>>> entries;
    std::string source_prompt;
    std::string encoder_id;
    std::string schema_hash;
    std::string config_hash;

    static FairTokenTable zeros(const AttributeSet& attrs, int d_tok);

    int token_width() const;
    // Exact shape against a schema plus all-finite check.
    void validate(const AttributeSet& attrs, int expected_d_tok = -1) const;
    std::size_t parameter_count() const;
};

// Token-table file: plaintext JSON header line, a "---" separator line, then
// the raw little-endian doubles in (attribute, category, slot) order.
void save_token_table(const FairTokenTable& table, const AttributeSet& attrs,
                      const std::filesystem::path& file);
FairTokenTable load_token_table(const std::filesystem::path& file, const AttributeSet& attrs);

}  // namespace fairgen
