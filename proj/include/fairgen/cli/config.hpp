// Copyright (C) 2026 The fairgen authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "fairgen/encoders/registry.hpp"
#include "fairgen/training/config.hpp"

#include <filesystem>
#include <memory>
#include <string>

namespace fairgen {

// Everything configurable across commands. All randomness fans out from
// `seed` through labeled sub-streams (train/generate/benchmark), so a run is
// pinned by one number.
struct CliConfig {
    std::uint64_t seed = 0;
    std::string encoder_id = "toy";
    std::string backend_id = "stub";
    ToyEncoderSpec toy;
    StubBackendSpec stub;
    TrainingConfig training;
    double guidance_scale = 7.5;
    int generation_batch_size = 8;

    // Sub-seeds derived before constructing components.
    std::unique_ptr<Encoder> build_encoder() const;
    std::unique_ptr<DiffusionBackend> build_backend() const;
    TrainingConfig training_config() const;
    std::uint64_t generation_seed() const;
    std::uint64_t benchmark_seed() const;
};

CliConfig load_cli_config(const std::filesystem::path& file);
void merge_config_json(CliConfig& config, const std::string& json_text);

}  // namespace fairgen
