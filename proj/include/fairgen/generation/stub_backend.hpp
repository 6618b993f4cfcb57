// Copyright (C) 2026 The fairgen authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "fairgen/generation/backend.hpp"

#include <cstdint>

namespace fairgen {

struct StubBackendSpec {
    std::uint64_t seed = 0;
    int latent_dim = 32;
    int steps = 5;
    // Weight of the hash-derived pseudo-noise relative to the conditioning
    // signal in each denoise output.
    double noise_scale = 1.0;
};

// Deterministic desk-scale backend: f(x, t, c) is a hash-derived pseudo-noise
// vector of (x, t) plus the pooled conditioning, so every guidance identity
// can be asserted element-exactly and the conditioning provably reaches the
// output. Decoded images are real PNGs carrying the final latent losslessly.
class StubBackend : public DiffusionBackend {
public:
    explicit StubBackend(StubBackendSpec spec);

    const BackendInfo& info() const override { return info_; }
    Vec initial_latent(std::uint64_t seed) const override;
    Vec denoise(const Vec& latent, int timestep, const Conditioning& c) const override;
    std::vector<unsigned char> decode(const Vec& latent) const override;

private:
    StubBackendSpec spec_;
    BackendInfo info_;
};

}  // namespace fairgen
