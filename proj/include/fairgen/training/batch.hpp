// Copyright (C) 2026 The fairgen authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "fairgen/common.hpp"
#include "fairgen/core/attributes.hpp"
#include "fairgen/core/reference.hpp"
#include "fairgen/rng.hpp"
#include "fairgen/training/config.hpp"

#include <vector>

namespace fairgen {

struct BatchSample {
    Vec feature;   // unit-norm image feature
    int category;  // category index within the owning attribute
};

// One optimization step's worth of reference samples, grouped per attribute.
// A sub-batch may lack whole categories; that is what gates the fallback.
struct Batch {
    std::vector<std::vector<BatchSample>> per_attribute;

    std::size_t sample_count() const;
    // "Gender: 3/0, Eyeglasses: 2/2" style summary for diagnostics.
    std::string composition(const AttributeSet& attrs) const;
};

// Splits one epoch into batches such that every reference image is visited
// exactly once per attribute. Stratified interleaving (near-equal per-category
// counts per batch) is used when batch_size >= sum_m K_m, otherwise plain
// shuffling, which can produce category-free batches.
std::vector<Batch> plan_epoch_batches(const ReferenceSet& refs,
                                      const AttributeSet& attrs,
                                      const TrainingConfig& config,
                                      SeededRng& rng);

}  // namespace fairgen
