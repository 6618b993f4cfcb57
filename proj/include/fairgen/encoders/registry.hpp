// Copyright (C) 2026 The fairgen authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "fairgen/encoders/toy_encoder.hpp"
#include "fairgen/generation/stub_backend.hpp"

#include <memory>
#include <string>

namespace fairgen {

// Encoder ids: "toy" (desk tier). Real joint encoders ("clip-vit-l14") are
// recognized but need model weights that are not shipped, so requesting one
// raises BackendUnavailableError.
std::unique_ptr<Encoder> make_encoder(const std::string& id, const ToyEncoderSpec& toy_spec);

// Backend ids: "stub" (desk tier); "sd" and "controlnet" are recognized but
// unavailable without weights.
std::unique_ptr<DiffusionBackend> make_backend(const std::string& id,
                                               const StubBackendSpec& stub_spec);

}  // namespace fairgen
