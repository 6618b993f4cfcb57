// Copyright (C) 2026 The fairgen authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "fairgen/common.hpp"

#include <cstdint>
#include <filesystem>
#include <vector>

namespace fairgen {

// Gaussian fit of image features: sample mean, unbiased covariance.
struct GaussianStats {
    Vec mean;
    Mat covariance;
    std::int64_t sample_count = 0;

    void validate() const;  // symmetry within 1e-8, sample_count >= 2
};

GaussianStats fit_gaussian(const std::vector<Vec>& features);

// Frechet distance between two Gaussians:
//   |mu_a - mu_b|^2 + Tr(Sa + Sb - 2 (Sa Sb)^{1/2}).
// Tr (Sa Sb)^{1/2} is computed from the eigenvalues of the symmetrized
// product Sb^{1/2} Sa Sb^{1/2}, clipping eigenvalues below 1e-10 to zero
// before the root.
double fid(const GaussianStats& a, const GaussianStats& b);

void save_gaussian_stats(const GaussianStats& stats, const std::filesystem::path& file);
GaussianStats load_gaussian_stats(const std::filesystem::path& file);

}  // namespace fairgen
