// Copyright (C) 2026 The fairgen authors
// SPDX-License-Identifier: Apache-2.0
#include "fairgen/generation/sampler.hpp"

#include "fairgen/errors.hpp"

namespace fairgen {

Vec guided_step(const DiffusionBackend& backend, const Vec& latent, int timestep,
                const Conditioning& positive, const Conditioning& negative, double scale) {
    if (!(scale > 0.0)) throw ValidationError("guidance scale must be positive");
    try {
        const Vec f_neg = backend.denoise(latent, timestep, negative);
        const Vec f_pos = backend.denoise(latent, timestep, positive);
        return scale * (f_pos - f_neg) + f_neg;
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw NumericError("backend '" + backend.info().identifier + "' failed at timestep " +
                           std::to_string(timestep) + ": " + e.what());
    }
}

Vec sample_latent(const DiffusionBackend& backend, std::uint64_t seed, int steps,
                  const Conditioning& positive, const Conditioning& negative, double scale) {
    if (steps < 1) throw ValidationError("sampler needs at least one step");
    Vec x = backend.initial_latent(seed);
    for (int k = 0; k < steps; ++k) {
        x = guided_step(backend, x, steps - 1 - k, positive, negative, scale);
    }
    return x;
}

}  // namespace fairgen
