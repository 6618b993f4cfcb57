// Copyright (C) 2026 The fairgen authors
// SPDX-License-Identifier: Apache-2.0
#include "fairgen/training/losses.hpp"

#include "fairgen/errors.hpp"
#include "fairgen/kernels/batch_ops.hpp"

#include <cmath>

namespace fairgen {

EncodedPromptSet encode_prompt_set(const FairTokenTable& table,
                                   const AttributeSet& attrs,
                                   const TokenSeq& base_tokens,
                                   const Vec& base_embedding,
                                   const Encoder& encoder) {
    EncodedPromptSet out;
    out.combinations = enumerate_combinations(attrs);
    out.base_embedding = base_embedding;
    out.base_length = base_tokens.size();
    out.tokens.reserve(out.combinations.size());
    for (const auto& combo : out.combinations) {
        out.tokens.push_back(build_inclusive_prompt(base_tokens, table, attrs, combo,
                                                    encoder.info().max_sequence_length)
                                 .assembled_tokens);
    }
    out.embeddings = kernels::encode_text_batch(encoder, out.tokens);

    out.members.resize(attrs.size());
    for (std::size_t m = 0; m < attrs.size(); ++m) {
        out.members[m].resize(static_cast<std::size_t>(attrs.attributes[m].category_count()));
    }
    for (std::size_t c = 0; c < out.combinations.size(); ++c) {
        for (std::size_t m = 0; m < attrs.size(); ++m) {
            out.members[m][static_cast<std::size_t>(out.combinations[c].indices[m])].push_back(c);
        }
    }
    return out;
}

EncodedPromptSet encode_prompt_set(const FairTokenTable& table,
                                   const AttributeSet& attrs,
                                   const std::string& prompt,
                                   const Encoder& encoder) {
    const TokenSeq base = encoder.tokenize(prompt);
    return encode_prompt_set(table, attrs, base, encoder.encode_text(base), encoder);
}

namespace {

Vec mean_of(const std::vector<Vec>& vectors, const std::vector<std::size_t>& indices) {
    Vec sum = Vec::Zero(vectors.front().size());
    for (auto idx : indices) sum += vectors[idx];
    return sum / static_cast<double>(indices.size());
}

struct PairDelta {
    Vec raw;         // unnormalized prompt-mean difference
    Vec effective;   // what enters the inner product
    double raw_norm; // |raw|
};

PairDelta prompt_pair_delta(const EncodedPromptSet& prompts, int m, int i, int j, bool normalize) {
    const auto& mi = prompts.members[static_cast<std::size_t>(m)][static_cast<std::size_t>(i)];
    const auto& mj = prompts.members[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)];
    PairDelta d;
    d.raw = mean_of(prompts.embeddings, mi) - mean_of(prompts.embeddings, mj);
    d.raw_norm = d.raw.norm();
    d.effective = normalize ? safe_normalize(d.raw) : d.raw;
    return d;
}

}  // namespace

std::optional<Vec> delta_image(const Batch& batch, int m, int i, int j, bool normalize) {
    if (i >= j) throw PreconditionError("delta_image requires i < j");
    const auto& samples = batch.per_attribute.at(static_cast<std::size_t>(m));
    Vec sum_i, sum_j;
    std::size_t n_i = 0, n_j = 0;
    for (const auto& s : samples) {
        if (s.category == i) {
            if (n_i++ == 0) sum_i = s.feature; else sum_i += s.feature;
        } else if (s.category == j) {
            if (n_j++ == 0) sum_j = s.feature; else sum_j += s.feature;
        }
    }
    if (n_i == 0 || n_j == 0) return std::nullopt;
    const Vec d = sum_i / static_cast<double>(n_i) - sum_j / static_cast<double>(n_j);
    return normalize ? safe_normalize(d) : d;
}

Vec delta_prompt(const EncodedPromptSet& prompts, int m, int i, int j, bool normalize) {
    return prompt_pair_delta(prompts, m, i, j, normalize).effective;
}

Vec delta_prompt(const FairTokenTable& table, const AttributeSet& attrs,
                 const std::string& prompt, int m, int i, int j,
                 const Encoder& encoder, bool normalize) {
    return delta_prompt(encode_prompt_set(table, attrs, prompt, encoder), m, i, j, normalize);
}

std::optional<double> directional_loss(const Batch& batch, const EncodedPromptSet& prompts,
                                       const AttributeSet& attrs, bool normalize) {
    double loss = 0.0;
    for (std::size_t m = 0; m < attrs.size(); ++m) {
        const int k = attrs.attributes[m].category_count();
        for (int i = 0; i < k; ++i) {
            for (int j = i + 1; j < k; ++j) {
                const auto d_img = delta_image(batch, static_cast<int>(m), i, j, normalize);
                if (!d_img) return std::nullopt;
                const Vec d_prm = delta_prompt(prompts, static_cast<int>(m), i, j, normalize);
                loss += 1.0 - d_img->dot(d_prm);
            }
        }
    }
    return loss;
}

double cosine_fallback_loss(const Batch& batch, const EncodedPromptSet& prompts,
                            const AttributeSet& attrs) {
    const std::size_t n = batch.sample_count();
    if (n == 0) throw PreconditionError("cosine fallback loss needs a non-empty batch");
    double loss = 0.0;
    for (std::size_t m = 0; m < attrs.size(); ++m) {
        // Per-category mean prompt embedding, shared by every image of the category.
        std::vector<Vec> cat_mean(prompts.members[m].size());
        for (std::size_t i = 0; i < cat_mean.size(); ++i) {
            cat_mean[i] = mean_of(prompts.embeddings, prompts.members[m][i]);
        }
        for (const auto& s : batch.per_attribute[m]) {
            loss += 1.0 - s.feature.dot(cat_mean[static_cast<std::size_t>(s.category)]);
        }
    }
    return loss / static_cast<double>(n);
}

double semantic_loss(const EncodedPromptSet& prompts, const AttributeSet& attrs,
                     double lambda_sem, SemanticReading reading) {
    double loss = 0.0;
    for (std::size_t m = 0; m < attrs.size(); ++m) {
        const int k = attrs.attributes[m].category_count();
        for (int i = 0; i < k; ++i) {
            for (int j = i + 1; j < k; ++j) {
                double pair_max = 0.0, pair_sum = 0.0;
                for (int cat : {i, j}) {
                    for (auto c : prompts.members[m][static_cast<std::size_t>(cat)]) {
                        const double h =
                            lambda_sem - prompts.embeddings[c].dot(prompts.base_embedding);
                        pair_max = std::max(pair_max, h);
                        pair_sum += std::max(0.0, h);
                    }
                }
                loss += reading == SemanticReading::kMaxOverPrompts ? pair_max : pair_sum;
            }
        }
    }
    return loss;
}

LossReport total_loss(const Batch& batch, const EncodedPromptSet& prompts,
                      const AttributeSet& attrs, const TrainingConfig& config) {
    LossReport r;
    const auto dir = directional_loss(batch, prompts, attrs, config.delta_normalization);
    r.dir_defined = dir.has_value();
    r.l_dir = dir;
    r.l_cos = cosine_fallback_loss(batch, prompts, attrs);
    r.l_sem = semantic_loss(prompts, attrs, config.lambda_sem, config.semantic_reading);
    r.l_total = (r.dir_defined ? *r.l_dir : r.l_cos) + r.l_sem;
    return r;
}

LossGradients total_loss_gradients(const Batch& batch, const EncodedPromptSet& prompts,
                                   const AttributeSet& attrs, const TrainingConfig& config) {
    LossGradients out;
    out.report = total_loss(batch, prompts, attrs, config);
    const auto d_emb = prompts.embeddings.front().size();
    out.d_embedding.assign(prompts.embeddings.size(), Vec::Zero(d_emb));

    if (out.report.dir_defined) {
        // d/dD of (1 - <d_img, D/|D|>) = -(d_img - <d_img, D_hat> D_hat)/|D|,
        // then split across the two prompt-set means. Zero deltas contribute
        // a constant 1 and no gradient.
        for (std::size_t m = 0; m < attrs.size(); ++m) {
            const int k = attrs.attributes[m].category_count();
            for (int i = 0; i < k; ++i) {
                for (int j = i + 1; j < k; ++j) {
                    const auto d_img =
                        delta_image(batch, static_cast<int>(m), i, j, config.delta_normalization);
                    const auto pd =
                        prompt_pair_delta(prompts, static_cast<int>(m), i, j, config.delta_normalization);
                    Vec d_loss_dD;
                    if (config.delta_normalization) {
                        if (pd.raw_norm < 1e-12) continue;
                        d_loss_dD = -(*d_img - d_img->dot(pd.effective) * pd.effective) / pd.raw_norm;
                    } else {
                        d_loss_dD = -*d_img;
                    }
                    const auto& mi = prompts.members[m][static_cast<std::size_t>(i)];
                    const auto& mj = prompts.members[m][static_cast<std::size_t>(j)];
                    for (auto c : mi) out.d_embedding[c] += d_loss_dD / static_cast<double>(mi.size());
                    for (auto c : mj) out.d_embedding[c] -= d_loss_dD / static_cast<double>(mj.size());
                }
            }
        }
    } else {
        const double n = static_cast<double>(batch.sample_count());
        for (std::size_t m = 0; m < attrs.size(); ++m) {
            std::vector<Vec> feat_sum(prompts.members[m].size());
            for (const auto& s : batch.per_attribute[m]) {
                auto& sum = feat_sum[static_cast<std::size_t>(s.category)];
                if (sum.size() == 0) sum = s.feature; else sum += s.feature;
            }
            for (std::size_t i = 0; i < feat_sum.size(); ++i) {
                if (feat_sum[i].size() == 0) continue;
                const auto& mi = prompts.members[m][i];
                const Vec g = -feat_sum[i] / (n * static_cast<double>(mi.size()));
                for (auto c : mi) out.d_embedding[c] += g;
            }
        }
    }

    for (std::size_t m = 0; m < attrs.size(); ++m) {
        const int k = attrs.attributes[m].category_count();
        for (int i = 0; i < k; ++i) {
            for (int j = i + 1; j < k; ++j) {
                if (config.semantic_reading == SemanticReading::kMaxOverPrompts) {
                    // Subgradient flows to the first prompt attaining the max.
                    double pair_max = 0.0;
                    std::size_t arg = SIZE_MAX;
                    for (int cat : {i, j}) {
                        for (auto c : prompts.members[m][static_cast<std::size_t>(cat)]) {
                            const double h =
                                config.lambda_sem - prompts.embeddings[c].dot(prompts.base_embedding);
                            if (h > pair_max) {
                                pair_max = h;
                                arg = c;
                            }
                        }
                    }
                    if (arg != SIZE_MAX) out.d_embedding[arg] -= prompts.base_embedding;
                } else {
                    for (int cat : {i, j}) {
                        for (auto c : prompts.members[m][static_cast<std::size_t>(cat)]) {
                            const double h =
                                config.lambda_sem - prompts.embeddings[c].dot(prompts.base_embedding);
                            if (h > 0.0) out.d_embedding[c] -= prompts.base_embedding;
                        }
                    }
                }
            }
        }
    }
    return out;
}

FairTokenTable table_gradient(const LossGradients& grads, const EncodedPromptSet& prompts,
                              const AttributeSet& attrs, const Encoder& encoder, int d_tok) {
    FairTokenTable g = FairTokenTable::zeros(attrs, d_tok);
    for (std::size_t c = 0; c < prompts.combinations.size(); ++c) {
        if (grads.d_embedding[c].isZero(0.0)) continue;
        const auto per_position = encoder.backprop_text(prompts.tokens[c], grads.d_embedding[c]);
        std::size_t pos = prompts.base_length;
        for (std::size_t m = 0; m < attrs.size(); ++m) {
            const auto cat = static_cast<std::size_t>(prompts.combinations[c].indices[m]);
            for (auto& slot_grad : g.entries[m][cat]) {
                slot_grad += per_position[pos++];
            }
        }
    }
    return g;
}

}  // namespace fairgen
