// Copyright (C) 2026 The fairgen authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "fairgen/generation/prompts.hpp"
#include "fairgen/generation/sampler.hpp"

#include <filesystem>
#include <optional>
#include <vector>

namespace fairgen {

inline const std::vector<std::string> kMethodTags = {"SD", "HPS", "HPSn", "ITI-GEN", "HYBRID"};

struct GenerationJob {
    std::string job_id = "job";
    std::string backend_id = "stub";
    std::string method = "SD";
    std::string prompt;
    AttributeSet attrs;
    std::optional<FairTokenTable> table;          // ITI-GEN and HYBRID
    std::vector<std::string> itigen_attributes;   // HYBRID: fair-token subset
    int images_per_combination = 1;
    int batch_size = 8;
    double guidance_scale = 7.5;
    std::uint64_t seed = 0;
    int steps = 0;  // 0 = backend default
    std::optional<std::vector<unsigned char>> spatial_condition;

    void validate() const;
    // SD conditions on the bare prompt; all other methods cover the joint space.
    std::size_t scheduled_combinations() const;
};

struct GenerationRecord {
    std::string method;
    std::size_t combination_index = 0;
    std::uint64_t seed = 0;  // job seed + sequential offset
    std::string path;        // relative to the run directory
};

// Generates images_per_combination images for every combination (exact
// uniform schedule), batched at batch_size, writing
// <out_dir>/<method>/<combination_index>/<seed_offset>.<ext> plus
// manifest.tsv rows (method, combination, seed, path). Reruns skip images
// already present in the manifest, so interrupted jobs resume.
std::vector<GenerationRecord> generate(const GenerationJob& job, const Encoder& encoder,
                                       const DiffusionBackend& backend,
                                       const std::filesystem::path& out_dir);

std::vector<GenerationRecord> load_manifest(const std::filesystem::path& out_dir);

}  // namespace fairgen
