// Copyright (C) 2026 The fairgen authors
// SPDX-License-Identifier: Apache-2.0
#include "fairgen/training/train.hpp"

#include "fairgen/core/schema_io.hpp"
#include "fairgen/errors.hpp"
#include "fairgen/hashing.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace fairgen {

void TrainingConfig::validate() const {
    if (epochs < 1) throw ValidationError("epochs must be >= 1");
    if (batch_size < 2) throw ValidationError("batch_size must be >= 2");
    if (!(learning_rate > 0.0)) throw ValidationError("learning_rate must be positive");
    if (!(lambda_sem > 0.0) || lambda_sem > 1.0) {
        throw ValidationError("lambda_sem must lie in (0, 1]");
    }
    if (!(init_scale > 0.0)) throw ValidationError("init_scale must be positive");
}

std::string TrainingConfig::hash() const {
    std::ostringstream os;
    os << epochs << "|" << batch_size << "|" << learning_rate << "|" << lambda_sem << "|"
       << seed << "|" << delta_normalization << "|" << static_cast<int>(semantic_reading)
       << "|" << static_cast<int>(mode) << "|" << static_cast<int>(steps_policy)
       << "|" << init_scale;
    return to_hex(fnv1a64(os.str()));
}

void AdamOptimizer::step(Vec& params, const Vec& grads) {
    ++t_;
    m_ = beta1_ * m_ + (1.0 - beta1_) * grads;
    v_ = beta2_ * v_.array().matrix() + (1.0 - beta2_) * grads.array().square().matrix();
    const double bc1 = 1.0 - std::pow(beta1_, t_);
    const double bc2 = 1.0 - std::pow(beta2_, t_);
    params.array() -= lr_ * (m_.array() / bc1) / ((v_.array() / bc2).sqrt() + eps_);
}

Vec flatten_table(const FairTokenTable& table) {
    Vec flat(static_cast<Eigen::Index>(table.parameter_count()));
    Eigen::Index pos = 0;
    for (const auto& per_attr : table.entries) {
        for (const auto& slots : per_attr) {
            for (const auto& v : slots) {
                flat.segment(pos, v.size()) = v;
                pos += v.size();
            }
        }
    }
    return flat;
}

void unflatten_table(const Vec& flat, FairTokenTable& table) {
    Eigen::Index pos = 0;
    for (auto& per_attr : table.entries) {
        for (auto& slots : per_attr) {
            for (auto& v : slots) {
                v = flat.segment(pos, v.size());
                pos += v.size();
            }
        }
    }
}

namespace {

FairTokenTable init_table(const AttributeSet& attrs, const TokenSeq& base_tokens,
                          const TrainingConfig& config, int d_tok) {
    double typical_norm = 0.0;
    for (const auto& t : base_tokens) typical_norm += t.norm();
    typical_norm /= static_cast<double>(base_tokens.size());
    const double scale = config.init_scale * typical_norm;

    auto rng = derive_rng(config.seed, "token-init");
    FairTokenTable table = FairTokenTable::zeros(attrs, d_tok);
    for (auto& per_attr : table.entries) {
        for (auto& slots : per_attr) {
            for (auto& v : slots) v = rng.normal_vector(d_tok, scale);
        }
    }
    return table;
}

TrainResult train_joint(const AttributeSet& attrs, const ReferenceSet& refs,
                        const std::string& prompt, const Encoder& encoder,
                        const TrainingConfig& config) {
    refs.require_nonempty_categories(attrs);
    refs.require_features(attrs);

    const TokenSeq base_tokens = encoder.tokenize(prompt);
    const Vec base_embedding = encoder.encode_text(base_tokens);
    const int d_tok = encoder.info().d_tok;

    TrainResult result;
    result.table = init_table(attrs, base_tokens, config, d_tok);
    result.table.source_prompt = prompt;
    result.table.encoder_id = encoder.info().identifier;
    result.table.schema_hash = schema_hash(attrs);
    result.table.config_hash = config.hash();

    Vec flat = flatten_table(result.table);
    AdamOptimizer adam(config.learning_rate, static_cast<std::size_t>(flat.size()));

    const std::uint64_t calls_before = encoder.counters().text_calls.load();
    for (int epoch = 1; epoch <= config.epochs; ++epoch) {
        auto rng = derive_rng(config.seed, "epoch-" + std::to_string(epoch));
        const auto batches = plan_epoch_batches(refs, attrs, config, rng);
        for (std::size_t step = 0; step < batches.size(); ++step) {
            const auto prompts =
                encode_prompt_set(result.table, attrs, base_tokens, base_embedding, encoder);
            const auto grads = total_loss_gradients(batches[step], prompts, attrs, config);
            if (!std::isfinite(grads.report.l_total)) {
                throw NumericError("non-finite loss at epoch " + std::to_string(epoch) +
                                   " step " + std::to_string(step) + "; batch composition: " +
                                   batches[step].composition(attrs));
            }
            const auto tg = table_gradient(grads, prompts, attrs, encoder, d_tok);
            adam.step(flat, flatten_table(tg));
            unflatten_table(flat, result.table);

            result.trace.push_back({epoch, static_cast<int>(step), grads.report.l_dir,
                                    grads.report.l_cos, grads.report.l_sem,
                                    grads.report.l_total, grads.report.dir_defined});
        }
    }
    result.prompt_encodings = encoder.counters().text_calls.load() - calls_before;
    result.table.validate(attrs, d_tok);
    return result;
}

}  // namespace

TrainResult train(const AttributeSet& attrs, const ReferenceSet& refs,
                  const std::string& prompt, const Encoder& encoder,
                  const TrainingConfig& config) {
    config.validate();
    attrs.validate();
    if (config.mode == TrainingMode::kJoint) {
        return train_joint(attrs, refs, prompt, encoder, config);
    }

    // Per-attribute mode: independent single-attribute runs, merged. Fair
    // tokens are concatenated across attributes only at inference time.
    TrainResult merged;
    merged.table = FairTokenTable::zeros(attrs, encoder.info().d_tok);
    merged.table.source_prompt = prompt;
    merged.table.encoder_id = encoder.info().identifier;
    merged.table.schema_hash = schema_hash(attrs);
    merged.table.config_hash = config.hash();
    for (std::size_t m = 0; m < attrs.size(); ++m) {
        AttributeSet single;
        single.attributes = {attrs.attributes[m]};
        single.label_prompt_template = attrs.label_prompt_template;
        ReferenceSet sub;
        sub.images = {refs.images[m]};
        TrainingConfig sub_config = config;
        sub_config.seed = hash_mix(config.seed, fnv1a64(attrs.attributes[m].name));
        auto res = train_joint(single, sub, prompt, encoder, sub_config);
        merged.table.entries[m] = std::move(res.table.entries[0]);
        merged.trace.insert(merged.trace.end(), res.trace.begin(), res.trace.end());
        merged.prompt_encodings += res.prompt_encodings;
    }
    merged.table.validate(attrs, encoder.info().d_tok);
    return merged;
}

void save_loss_trace(const std::vector<TraceRow>& trace, const std::filesystem::path& file) {
    std::ofstream out(file);
    if (!out) throw IngestionError("cannot write loss trace: " + file.string());
    out << "epoch,step,l_dir,l_cos,l_sem,l_total,dir_defined\n";
    out.precision(17);
    for (const auto& row : trace) {
        out << row.epoch << "," << row.step << ",";
        if (row.l_dir) out << *row.l_dir;
        out << "," << row.l_cos << "," << row.l_sem << "," << row.l_total << ","
            << (row.dir_defined ? 1 : 0) << "\n";
    }
}

std::vector<TraceRow> load_loss_trace(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw IngestionError("cannot open loss trace: " + file.string());
    std::vector<TraceRow> trace;
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream is(line);
        std::string field;
        TraceRow row;
        std::getline(is, field, ',');
        row.epoch = std::stoi(field);
        std::getline(is, field, ',');
        row.step = std::stoi(field);
        std::getline(is, field, ',');
        if (!field.empty()) row.l_dir = std::stod(field);
        std::getline(is, field, ',');
        row.l_cos = std::stod(field);
        std::getline(is, field, ',');
        row.l_sem = std::stod(field);
        std::getline(is, field, ',');
        row.l_total = std::stod(field);
        std::getline(is, field, ',');
        row.dir_defined = field == "1";
        trace.push_back(row);
    }
    return trace;
}

}  // namespace fairgen
