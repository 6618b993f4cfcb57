// Copyright (C) 2026 The fairgen authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "fairgen/core/attributes.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace fairgen {

enum class LabelSource { kClassifier, kManual };

struct LabelRecord {
    std::string path;
    CategoryCombination combination;
    LabelSource source = LabelSource::kClassifier;
};

// Manual label CSV: header "path,<attr_1>,...,<attr_M>" in schema order, one
// category name per cell. Malformed rows are reported together, with line
// numbers.
std::vector<LabelRecord> ingest_manual_labels(const std::filesystem::path& file,
                                              const AttributeSet& attrs);
std::vector<LabelRecord> parse_manual_labels(const std::string& csv_text,
                                             const AttributeSet& attrs);

struct PairwiseChoice {
    std::string method_a;
    std::string method_b;
    std::string winner;
};

struct PreferenceRate {
    std::int64_t wins = 0;
    std::int64_t comparisons = 0;
    double rate() const { return static_cast<double>(wins) / static_cast<double>(comparisons); }
};

// Preference CSV rows: image_a_method,image_b_method,winner. Returns
// rates keyed by ordered (method, other) pairs; empty input yields an
// empty report.
std::map<std::pair<std::string, std::string>, PreferenceRate> preference_tally(
    const std::vector<PairwiseChoice>& choices);

std::vector<PairwiseChoice> load_preference_csv(const std::filesystem::path& file);

}  // namespace fairgen
