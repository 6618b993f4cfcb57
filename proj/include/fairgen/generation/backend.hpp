// Copyright (C) 2026 The fairgen authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "fairgen/common.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fairgen {

// Conditioning fed to a denoising step: one or more embedding vectors of the
// joint space width (plain-text and inclusive-prompt encodings are
// interchangeable) plus an optional opaque spatial condition, passed through
// untouched for backends that accept one.
struct Conditioning {
    std::vector<Vec> vectors;
    std::optional<std::vector<unsigned char>> spatial;

    static Conditioning from_embedding(Vec e) {
        Conditioning c;
        c.vectors.push_back(std::move(e));
        return c;
    }
};

struct BackendInfo {
    std::string identifier;
    int latent_dim = 0;
    int default_steps = 0;
    std::string image_extension = "png";
};

// Abstract diffusion backend: a deterministic denoise function f(x, t, c),
// a seeded initial latent, and a decoder from the final latent to image
// bytes. Guidance composes f calls outside the backend.
class DiffusionBackend {
public:
    virtual ~DiffusionBackend() = default;

    virtual const BackendInfo& info() const = 0;
    virtual Vec initial_latent(std::uint64_t seed) const = 0;
    virtual Vec denoise(const Vec& latent, int timestep, const Conditioning& c) const = 0;
    virtual std::vector<unsigned char> decode(const Vec& latent) const = 0;
};

}  // namespace fairgen
