// Copyright (C) 2026 The fairgen authors
// SPDX-License-Identifier: Apache-2.0
#include "fairgen/cli/config.hpp"

#include "fairgen/errors.hpp"
#include "fairgen/rng.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace fairgen {

using nlohmann::json;

std::unique_ptr<Encoder> CliConfig::build_encoder() const {
    ToyEncoderSpec spec = toy;
    spec.seed = hash_mix(seed, fnv1a64("encoder"));
    return make_encoder(encoder_id, spec);
}

std::unique_ptr<DiffusionBackend> CliConfig::build_backend() const {
    StubBackendSpec spec = stub;
    spec.seed = hash_mix(seed, fnv1a64("backend"));
    spec.latent_dim = toy.d_emb;
    return make_backend(backend_id, spec);
}

TrainingConfig CliConfig::training_config() const {
    TrainingConfig cfg = training;
    cfg.seed = hash_mix(seed, fnv1a64("train"));
    return cfg;
}

std::uint64_t CliConfig::generation_seed() const { return hash_mix(seed, fnv1a64("generate")); }
std::uint64_t CliConfig::benchmark_seed() const { return hash_mix(seed, fnv1a64("benchmark")); }

void merge_config_json(CliConfig& config, const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ValidationError("config is not valid JSON: " + std::string(e.what()));
    }
    try {
        config.seed = j.value("seed", config.seed);
        config.encoder_id = j.value("encoder", config.encoder_id);
        config.backend_id = j.value("backend", config.backend_id);
        if (j.contains("toy")) {
            const auto& t = j.at("toy");
            config.toy.d_tok = t.value("d_tok", config.toy.d_tok);
            config.toy.d_emb = t.value("d_emb", config.toy.d_emb);
            config.toy.max_sequence_length =
                t.value("max_sequence_length", config.toy.max_sequence_length);
        }
        if (j.contains("stub")) {
            const auto& s = j.at("stub");
            config.stub.steps = s.value("steps", config.stub.steps);
            config.stub.noise_scale = s.value("noise_scale", config.stub.noise_scale);
        }
        if (j.contains("training")) {
            const auto& t = j.at("training");
            auto& cfg = config.training;
            cfg.epochs = t.value("epochs", cfg.epochs);
            cfg.batch_size = t.value("batch_size", cfg.batch_size);
            cfg.learning_rate = t.value("learning_rate", cfg.learning_rate);
            cfg.lambda_sem = t.value("lambda_sem", cfg.lambda_sem);
            cfg.delta_normalization = t.value("delta_normalization", cfg.delta_normalization);
            cfg.init_scale = t.value("init_scale", cfg.init_scale);
            if (t.contains("semantic_reading")) {
                const auto r = t.at("semantic_reading").get<std::string>();
                if (r == "max") {
                    cfg.semantic_reading = SemanticReading::kMaxOverPrompts;
                } else if (r == "sum") {
                    cfg.semantic_reading = SemanticReading::kSumOverPrompts;
                } else {
                    throw ValidationError("semantic_reading must be 'max' or 'sum'");
                }
            }
            if (t.contains("mode")) {
                const auto m = t.at("mode").get<std::string>();
                if (m == "joint") {
                    cfg.mode = TrainingMode::kJoint;
                } else if (m == "per-attribute") {
                    cfg.mode = TrainingMode::kPerAttribute;
                } else {
                    throw ValidationError("training mode must be 'joint' or 'per-attribute'");
                }
            }
        }
        if (j.contains("generation")) {
            const auto& g = j.at("generation");
            config.guidance_scale = g.value("guidance_scale", config.guidance_scale);
            config.generation_batch_size = g.value("batch_size", config.generation_batch_size);
        }
    } catch (const json::exception& e) {
        throw ValidationError("config field error: " + std::string(e.what()));
    }
}

CliConfig load_cli_config(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw IngestionError("cannot open config file: " + file.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    CliConfig config;
    merge_config_json(config, buf.str());
    return config;
}

}  // namespace fairgen
