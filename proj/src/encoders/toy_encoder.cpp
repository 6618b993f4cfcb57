// Copyright (C) 2026 The fairgen authors
// SPDX-License-Identifier: Apache-2.0
#include "fairgen/encoders/toy_encoder.hpp"

#include "fairgen/errors.hpp"
#include "fairgen/hashing.hpp"
#include "fairgen/io/png_io.hpp"
#include "fairgen/rng.hpp"

#include <cmath>
#include <sstream>

namespace fairgen {

std::vector<Vec> Encoder::backprop_text(const TokenSeq&, const Vec&) const {
    throw ValidationError("encoder '" + info().identifier + "' is not differentiable");
}

ToyEncoder::ToyEncoder(ToyEncoderSpec spec) : spec_(std::move(spec)) {
    if (spec_.d_tok < 1 || spec_.d_emb < 1 || spec_.max_sequence_length < 1) {
        throw ValidationError("toy encoder dimensions must be positive");
    }
    if (spec_.d_emb > spec_.d_tok) {
        throw ValidationError("toy encoder requires d_emb <= d_tok");
    }
    std::ostringstream id;
    id << "toy-s" << spec_.seed << "-t" << spec_.d_tok << "-e" << spec_.d_emb;
    info_ = {id.str(), spec_.d_tok, spec_.d_emb, spec_.max_sequence_length};

    // Seeded Gaussian rows, orthonormalized. Orthonormal rows make the map
    // exactly invertible on its range: projection * projection^T == I.
    auto rng = derive_rng(spec_.seed, "toy-projection");
    projection_.resize(spec_.d_emb, spec_.d_tok);
    for (int r = 0; r < spec_.d_emb; ++r) {
        Vec row = rng.normal_vector(spec_.d_tok);
        for (int p = 0; p < r; ++p) {
            row -= projection_.row(p).dot(row) * projection_.row(p).transpose();
        }
        const double n = row.norm();
        if (n < 1e-9) throw NumericError("degenerate toy projection row");
        projection_.row(r) = row.transpose() / n;
    }

    for (const auto& [word, vec] : spec_.vocabulary) {
        if (vec.size() != spec_.d_tok) {
            throw ValidationError("vocabulary vector for '" + word + "' has wrong width");
        }
    }
}

Vec ToyEncoder::token_for_word(const std::string& word) const {
    auto it = spec_.vocabulary.find(word);
    if (it != spec_.vocabulary.end()) return it->second;
    auto rng = derive_rng(hash_mix(spec_.seed, fnv1a64("toy-word")), word);
    return rng.normal_vector(spec_.d_tok, 1.0 / std::sqrt(static_cast<double>(spec_.d_tok)));
}

TokenSeq ToyEncoder::tokenize(const std::string& text) const {
    counters_.tokenize_calls++;
    TokenSeq out;
    std::istringstream is(text);
    std::string word;
    while (is >> word) out.push_back(token_for_word(word));
    if (out.empty()) throw ValidationError("cannot tokenize empty text");
    return out;
}

Vec ToyEncoder::project_mean(const TokenSeq& tokens, Vec* pre_norm) const {
    if (tokens.empty()) throw ValidationError("cannot encode an empty token sequence");
    if (tokens.size() > static_cast<std::size_t>(spec_.max_sequence_length)) {
        throw SequenceLengthError("sequence of " + std::to_string(tokens.size()) +
                                  " tokens exceeds limit " + std::to_string(spec_.max_sequence_length));
    }
    Vec mean = Vec::Zero(spec_.d_tok);
    for (const auto& t : tokens) {
        if (t.size() != spec_.d_tok) throw ValidationError("token vector width mismatch");
        mean += t;
    }
    mean /= static_cast<double>(tokens.size());
    Vec v = projection_ * mean;
    if (pre_norm) *pre_norm = v;
    const double n = v.norm();
    if (n < 1e-12) throw NumericError("toy text embedding collapsed to zero");
    return v / n;
}

Vec ToyEncoder::encode_text(const TokenSeq& tokens) const {
    counters_.text_calls++;
    return project_mean(tokens);
}

std::vector<Vec> ToyEncoder::backprop_text(const TokenSeq& tokens, const Vec& grad_embedding) const {
    Vec v;
    const Vec e = project_mean(tokens, &v);
    // e = v/|v|, v = W * mean(tokens): every position shares the gradient
    // (1/L) W^T (g - <g,e>e)/|v|.
    const Vec g_v = (grad_embedding - grad_embedding.dot(e) * e) / v.norm();
    const Vec g_tok = (projection_.transpose() * g_v) / static_cast<double>(tokens.size());
    return std::vector<Vec>(tokens.size(), g_tok);
}

Vec ToyEncoder::encode_image(const ImageRecord& record) const {
    counters_.image_calls++;
    if (record.latent) {
        if (record.latent->size() != spec_.d_emb) {
            throw IngestionError("latent width mismatch for '" + record.path + "'");
        }
        const Vec e = safe_normalize(*record.latent);
        if (e.isZero()) throw NumericError("zero latent for '" + record.path + "'");
        return e;
    }
    const auto bytes = read_file_bytes(record.path);
    if (auto latent = latent_from_png(bytes)) {
        if (latent->size() != spec_.d_emb) {
            throw IngestionError("latent png width mismatch for '" + record.path + "'");
        }
        const Vec e = safe_normalize(*latent);
        if (e.isZero()) throw NumericError("zero latent png for '" + record.path + "'");
        return e;
    }
    // Arbitrary file contents: a deterministic embedding seeded by the bytes.
    auto rng = derive_rng(hash_mix(spec_.seed, fnv1a64("toy-image")),
                          content_hash(bytes));
    return safe_normalize(rng.normal_vector(spec_.d_emb));
}

Vec ToyEncoder::unconditional_embedding() const {
    counters_.text_calls++;
    auto rng = derive_rng(spec_.seed, "toy-uncond");
    Vec v = projection_ * rng.normal_vector(spec_.d_tok, 1.0 / std::sqrt(static_cast<double>(spec_.d_tok)));
    return safe_normalize(v);
}

Vec ToyEncoder::preimage_token(const Vec& target_embedding) const {
    if (target_embedding.size() != spec_.d_emb) {
        throw ValidationError("preimage target has wrong width");
    }
    return projection_.transpose() * target_embedding;
}

}  // namespace fairgen
