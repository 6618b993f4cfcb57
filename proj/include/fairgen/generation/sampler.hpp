// Copyright (C) 2026 The fairgen authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "fairgen/generation/backend.hpp"

namespace fairgen {

// Classifier-free guidance with a negative conditioning slot:
//   scale * (f(x,t,pos) - f(x,t,neg)) + f(x,t,neg)
// computed exactly as written. Backend failures are rethrown with the step
// context attached.
Vec guided_step(const DiffusionBackend& backend, const Vec& latent, int timestep,
                const Conditioning& positive, const Conditioning& negative, double scale);

// Runs the full denoising loop from the seeded initial latent.
Vec sample_latent(const DiffusionBackend& backend, std::uint64_t seed, int steps,
                  const Conditioning& positive, const Conditioning& negative, double scale);

}  // namespace fairgen
