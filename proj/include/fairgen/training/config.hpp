// Copyright (C) 2026 The fairgen authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>

namespace fairgen {

// Two readings of the semantic-consistency hinge over the prompt union: a
// single max over prompts (the default), or a per-prompt sum.
enum class SemanticReading { kMaxOverPrompts, kSumOverPrompts };

// Joint: one run over the full attribute set, prompt set = all combinations.
// PerAttribute: train each attribute alone and merge tables (for
// plug-and-play composition at inference).
enum class TrainingMode { kJoint, kPerAttribute };

// When attributes have unequal pool sizes: run until the largest pool is
// exhausted (smaller attributes go empty, exercising the fallback loss), or
// stop at the smallest.
enum class StepsPolicy { kMaxOverAttributes, kMinOverAttributes };

struct TrainingConfig {
    int epochs = 30;
    int batch_size = 8;
    double learning_rate = 0.01;
    double lambda_sem = 0.8;  // hinge margin against an inner product of unit vectors
    std::uint64_t seed = 0;
    bool delta_normalization = true;
    SemanticReading semantic_reading = SemanticReading::kMaxOverPrompts;
    TrainingMode mode = TrainingMode::kJoint;
    StepsPolicy steps_policy = StepsPolicy::kMaxOverAttributes;
    double init_scale = 0.02;  // times the typical base-token norm

    void validate() const;
    std::string hash() const;
};

}  // namespace fairgen
