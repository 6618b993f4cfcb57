// Copyright (C) 2026 The fairgen authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "fairgen/core/prompt.hpp"
#include "fairgen/encoders/encoder.hpp"
#include "fairgen/training/batch.hpp"
#include "fairgen/training/config.hpp"

#include <optional>

namespace fairgen {

// All inclusive prompts of a token table, encoded once and shared by every
// loss term of a step. members[m][i] lists the combinations whose category
// at attribute m is i (the prompt set P_i^m).
struct EncodedPromptSet {
    std::vector<CategoryCombination> combinations;
    std::vector<TokenSeq> tokens;
    std::vector<Vec> embeddings;
    Vec base_embedding;
    std::size_t base_length = 0;
    std::vector<std::vector<std::vector<std::size_t>>> members;
};

EncodedPromptSet encode_prompt_set(const FairTokenTable& table,
                                   const AttributeSet& attrs,
                                   const TokenSeq& base_tokens,
                                   const Vec& base_embedding,
                                   const Encoder& encoder);
// Convenience: tokenizes and encodes the base prompt too.
EncodedPromptSet encode_prompt_set(const FairTokenTable& table,
                                   const AttributeSet& attrs,
                                   const std::string& prompt,
                                   const Encoder& encoder);

// Difference of per-category mean image features within the batch, or
// nullopt when either category has no samples.
std::optional<Vec> delta_image(const Batch& batch, int m, int i, int j, bool normalize);

// Difference of mean inclusive-prompt embeddings between P_i^m and P_j^m.
Vec delta_prompt(const EncodedPromptSet& prompts, int m, int i, int j, bool normalize);
Vec delta_prompt(const FairTokenTable& table, const AttributeSet& attrs,
                 const std::string& prompt, int m, int i, int j,
                 const Encoder& encoder, bool normalize);

// sum_m sum_{i<j} (1 - <delta_image, delta_prompt>); nullopt if any required
// image delta is undefined. With normalized deltas each term lies in [0, 2].
std::optional<double> directional_loss(const Batch& batch, const EncodedPromptSet& prompts,
                                       const AttributeSet& attrs, bool normalize);

// Mean over batch images of the mean over matching prompts of
// (1 - <feature, prompt embedding>). Replaces the directional loss when a
// batch lacks some category.
double cosine_fallback_loss(const Batch& batch, const EncodedPromptSet& prompts,
                            const AttributeSet& attrs);

// Hinge keeping inclusive prompts near the base prompt: per (m, i<j), a max
// (or sum, per reading) over the prompt union of max(0, lambda - <e_P, e_T>).
double semantic_loss(const EncodedPromptSet& prompts, const AttributeSet& attrs,
                     double lambda_sem, SemanticReading reading);

struct LossReport {
    std::optional<double> l_dir;
    double l_cos = 0.0;
    double l_sem = 0.0;
    double l_total = 0.0;
    bool dir_defined = false;
};

LossReport total_loss(const Batch& batch, const EncodedPromptSet& prompts,
                      const AttributeSet& attrs, const TrainingConfig& config);

// Loss plus d(l_total)/d(e_c) for every prompt embedding, following the
// active branch (directional or fallback) plus the semantic term.
struct LossGradients {
    LossReport report;
    std::vector<Vec> d_embedding;
};

LossGradients total_loss_gradients(const Batch& batch, const EncodedPromptSet& prompts,
                                   const AttributeSet& attrs, const TrainingConfig& config);

// Chains embedding gradients through the encoder into fair-token gradients.
FairTokenTable table_gradient(const LossGradients& grads, const EncodedPromptSet& prompts,
                              const AttributeSet& attrs, const Encoder& encoder, int d_tok);

}  // namespace fairgen
