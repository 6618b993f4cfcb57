// Copyright (C) 2026 The fairgen authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "fairgen/common.hpp"
#include "fairgen/core/reference.hpp"

#include <atomic>
#include <cstdint>
#include <string>

namespace fairgen {

struct EncoderInfo {
    std::string identifier;
    int d_tok = 0;
    int d_emb = 0;
    int max_sequence_length = 0;
};

// Invocation counters. Instrumentation for cache-idempotence tests and the
// complexity benchmark, which counts text encodings per epoch.
struct EncoderCallCounters {
    std::atomic<std::uint64_t> text_calls{0};
    std::atomic<std::uint64_t> image_calls{0};
    std::atomic<std::uint64_t> tokenize_calls{0};

    void reset() {
        text_calls = 0;
        image_calls = 0;
        tokenize_calls = 0;
    }
};

// Joint vision-language encoder: text and images map into one embedding
// space of width d_emb. Every embedding it returns has unit L2 norm.
// Implementations must be safe to call concurrently over distinct inputs.
class Encoder {
public:
    virtual ~Encoder() = default;

    virtual const EncoderInfo& info() const = 0;

    // Unit-norm d_emb vector; throws SequenceLengthError past the limit.
    virtual Vec encode_text(const TokenSeq& tokens) const = 0;

    // Unit-norm d_emb vector; throws IngestionError for unreadable images.
    virtual Vec encode_image(const ImageRecord& record) const = 0;

    // d_tok vectors, one per token; throws ValidationError on empty text.
    virtual TokenSeq tokenize(const std::string& text) const = 0;

    // Per-position gradients of <grad_embedding, encode_text(tokens)> with
    // respect to each input token vector. Only differentiable encoders
    // (the toy encoder) support this.
    virtual std::vector<Vec> backprop_text(const TokenSeq& tokens, const Vec& grad_embedding) const;

    // Embedding used when a negative prompt is empty (the unconditional
    // conditioning slot of classifier-free guidance).
    virtual Vec unconditional_embedding() const = 0;

    EncoderCallCounters& counters() const { return counters_; }

protected:
    mutable EncoderCallCounters counters_;
};

}  // namespace fairgen
