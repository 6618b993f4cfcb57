// Copyright (C) 2026 The fairgen authors
// SPDX-License-Identifier: Apache-2.0
#include "fairgen/encoders/registry.hpp"

#include "fairgen/errors.hpp"

namespace fairgen {

std::unique_ptr<Encoder> make_encoder(const std::string& id, const ToyEncoderSpec& toy_spec) {
    if (id == "toy") return std::make_unique<ToyEncoder>(toy_spec);
    if (id == "clip-vit-l14") {
        throw BackendUnavailableError(
            "encoder 'clip-vit-l14' needs model weights; point a backend adapter at them "
            "or use --encoder toy");
    }
    throw ValidationError("unknown encoder id '" + id + "'");
}

std::unique_ptr<DiffusionBackend> make_backend(const std::string& id,
                                               const StubBackendSpec& stub_spec) {
    if (id == "stub") return std::make_unique<StubBackend>(stub_spec);
    if (id == "sd" || id == "controlnet") {
        throw BackendUnavailableError("backend '" + id +
                                      "' needs model weights; use --backend stub for desk runs");
    }
    throw ValidationError("unknown backend id '" + id + "'");
}

}  // namespace fairgen
