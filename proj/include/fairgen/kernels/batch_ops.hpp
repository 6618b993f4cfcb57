// Copyright (C) 2026 The fairgen authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "fairgen/common.hpp"
#include "fairgen/encoders/encoder.hpp"

#include <string>
#include <vector>

namespace fairgen::kernels {

// OpenMP-parallel batch kernels. Each output slot is computed independently
// with identical arithmetic, so results are bitwise equal to the serial
// reference for any thread count. The reduction kernels use a fixed block
// decomposition for the same reason.

// One embedding per token sequence.
std::vector<Vec> encode_text_batch(const Encoder& encoder, const std::vector<TokenSeq>& prompts);

// One feature per record. Failed records yield empty vectors and an entry in
// `failures` ("path (reason)"); the batch never throws from worker threads.
std::vector<Vec> encode_image_batch(const Encoder& encoder,
                                    const std::vector<const ImageRecord*>& records,
                                    std::vector<std::string>* failures);

// scores(i, j) = <features[i], label_embeddings[j]>.
Mat score_matrix(const std::vector<Vec>& features, const std::vector<Vec>& label_embeddings);

struct Moments {
    Vec mean;
    Mat covariance;  // unbiased, symmetrized
    std::size_t count = 0;
};

// Two-pass mean/covariance over feature vectors with a fixed 64-way block
// reduction (deterministic for any thread count).
Moments gaussian_moments(const std::vector<Vec>& features);

// Plain single-threaded implementations kept as the reference the parallel
// kernels are tested and benchmarked against.
namespace serial_ref {
std::vector<Vec> encode_text_batch(const Encoder& encoder, const std::vector<TokenSeq>& prompts);
std::vector<Vec> encode_image_batch(const Encoder& encoder,
                                    const std::vector<const ImageRecord*>& records,
                                    std::vector<std::string>* failures);
Mat score_matrix(const std::vector<Vec>& features, const std::vector<Vec>& label_embeddings);
Moments gaussian_moments(const std::vector<Vec>& features);
}  // namespace serial_ref

}  // namespace fairgen::kernels
