// Copyright (C) 2026 The fairgen authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "fairgen/core/attributes.hpp"

#include <cstdint>
#include <vector>

namespace fairgen {

// Counts over category combinations, indexed in enumeration order.
struct EmpiricalDistribution {
    std::vector<std::int64_t> counts;
    std::int64_t total = 0;
};

EmpiricalDistribution empirical_distribution(const std::vector<CategoryCombination>& labels,
                                             const AttributeSet& attrs);

// D(empirical || uniform) in nats: sum_k p_k ln(p_k * K) with 0 ln 0 = 0.
// Zero iff uniform; at most ln(K). This direction stays finite with zero
// counts, which is what pins it down.
double kl_to_uniform(const EmpiricalDistribution& dist);

// Marginal distribution of one attribute (counts over its categories).
EmpiricalDistribution marginal_distribution(const EmpiricalDistribution& dist,
                                            const AttributeSet& attrs, int attribute);

}  // namespace fairgen
