// Copyright (C) 2026 The fairgen authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "fairgen/encoders/encoder.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace fairgen {

struct ToyEncoderSpec {
    std::uint64_t seed = 0;
    int d_tok = 64;
    int d_emb = 32;
    int max_sequence_length = 77;
    // Planted token vectors, overriding the seeded derivation per word.
    std::map<std::string, Vec> vocabulary;
};

// Deterministic differentiable encoder for desk-scale tests. Text embedding
// is the L2-normalized image of the mean token vector under one fixed seeded
// linear map with orthonormal rows; image embedding is the normalized latent
// attribute vector of a synthetic record. Same seed + vocabulary means
// bitwise-identical embeddings, with no model weights involved.
class ToyEncoder : public Encoder {
public:
    explicit ToyEncoder(ToyEncoderSpec spec);

    const EncoderInfo& info() const override { return info_; }
    Vec encode_text(const TokenSeq& tokens) const override;
    Vec encode_image(const ImageRecord& record) const override;
    TokenSeq tokenize(const std::string& text) const override;
    std::vector<Vec> backprop_text(const TokenSeq& tokens, const Vec& grad_embedding) const override;
    Vec unconditional_embedding() const override;

    // Stateless derivation: a fixed random vector per word under this seed.
    Vec token_for_word(const std::string& word) const;
    const Mat& projection() const { return projection_; }

    // Token vector t with projection() * t == target (rows are orthonormal),
    // used by tests to plant words whose embeddings are chosen directions.
    Vec preimage_token(const Vec& target_embedding) const;

private:
    Vec project_mean(const TokenSeq& tokens, Vec* pre_norm = nullptr) const;

    ToyEncoderSpec spec_;
    EncoderInfo info_;
    Mat projection_;  // d_emb x d_tok, orthonormal rows
};

}  // namespace fairgen
