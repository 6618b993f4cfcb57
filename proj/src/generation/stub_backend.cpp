// Copyright (C) 2026 The fairgen authors
// SPDX-License-Identifier: Apache-2.0
#include "fairgen/generation/stub_backend.hpp"

#include "fairgen/errors.hpp"
#include "fairgen/hashing.hpp"
#include "fairgen/io/png_io.hpp"
#include "fairgen/rng.hpp"

#include <cmath>
#include <sstream>

namespace fairgen {

StubBackend::StubBackend(StubBackendSpec spec) : spec_(spec) {
    if (spec_.latent_dim < 1 || spec_.steps < 1) {
        throw ValidationError("stub backend needs positive latent_dim and steps");
    }
    std::ostringstream id;
    id << "stub-s" << spec_.seed << "-d" << spec_.latent_dim;
    info_ = {id.str(), spec_.latent_dim, spec_.steps, "png"};
}

Vec StubBackend::initial_latent(std::uint64_t seed) const {
    auto rng = derive_rng(hash_mix(spec_.seed, seed), "stub-init");
    return rng.normal_vector(spec_.latent_dim, 1.0 / std::sqrt(static_cast<double>(spec_.latent_dim)));
}

Vec StubBackend::denoise(const Vec& latent, int timestep, const Conditioning& c) const {
    if (latent.size() != spec_.latent_dim) {
        throw ValidationError("stub backend latent width mismatch");
    }
    std::uint64_t h = fnv1a64(latent.data(), sizeof(double) * static_cast<std::size_t>(latent.size()));
    h = hash_mix(h, static_cast<std::uint64_t>(timestep));
    if (c.spatial) h = hash_mix(h, fnv1a64(c.spatial->data(), c.spatial->size()));
    auto rng = derive_rng(hash_mix(spec_.seed, h), "stub-denoise");
    Vec out = rng.normal_vector(spec_.latent_dim,
                                spec_.noise_scale / std::sqrt(static_cast<double>(spec_.latent_dim)));
    if (!c.vectors.empty()) {
        Vec pooled = Vec::Zero(spec_.latent_dim);
        for (const auto& v : c.vectors) {
            if (v.size() != spec_.latent_dim) {
                throw ValidationError("stub backend conditioning width mismatch");
            }
            pooled += v;
        }
        out += pooled / static_cast<double>(c.vectors.size());
    }
    return out;
}

std::vector<unsigned char> StubBackend::decode(const Vec& latent) const {
    return latent_to_png(latent);
}

}  // namespace fairgen
