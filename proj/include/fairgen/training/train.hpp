// Copyright (C) 2026 The fairgen authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "fairgen/training/losses.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

namespace fairgen {

struct TraceRow {
    int epoch = 0;
    int step = 0;
    std::optional<double> l_dir;
    double l_cos = 0.0;
    double l_sem = 0.0;
    double l_total = 0.0;
    bool dir_defined = false;
};

struct TrainResult {
    FairTokenTable table;
    std::vector<TraceRow> trace;
    // Text-encoder invocations during the epoch loop (excludes the one-time
    // base-prompt encoding); drives the complexity benchmark.
    std::uint64_t prompt_encodings = 0;
};

// The full optimization: deterministic given config.seed, one visit per
// reference image per epoch, Adam on the fair-token entries only.
// Preconditions: every category has at least one reference image and all
// features are cached.
TrainResult train(const AttributeSet& attrs, const ReferenceSet& refs,
                  const std::string& prompt, const Encoder& encoder,
                  const TrainingConfig& config);

void save_loss_trace(const std::vector<TraceRow>& trace, const std::filesystem::path& file);
std::vector<TraceRow> load_loss_trace(const std::filesystem::path& file);

// First-order adaptive gradient method over a flat parameter vector.
class AdamOptimizer {
public:
    AdamOptimizer(double learning_rate, std::size_t dim)
        : lr_(learning_rate), m_(Vec::Zero(static_cast<Eigen::Index>(dim))),
          v_(Vec::Zero(static_cast<Eigen::Index>(dim))) {}

    void step(Vec& params, const Vec& grads);

private:
    double lr_;
    double beta1_ = 0.9;
    double beta2_ = 0.999;
    double eps_ = 1e-8;
    int t_ = 0;
    Vec m_, v_;
};

// Flat views used by the optimizer; ordering is (attribute, category, slot).
Vec flatten_table(const FairTokenTable& table);
void unflatten_table(const Vec& flat, FairTokenTable& table);

}  // namespace fairgen
