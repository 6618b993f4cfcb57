// Copyright (C) 2026 The fairgen authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

namespace fairgen {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// A tokenized text: one embedding vector of width d_tok per token position.
using TokenSeq = std::vector<Vec>;

// L2-normalize, mapping (near-)zero vectors to the zero vector instead of
// dividing by zero. Degenerate deltas stay zero and contribute no gradient.
inline Vec safe_normalize(const Vec& v) {
    const double n = v.norm();
    if (n < 1e-12) return Vec::Zero(v.size());
    return v / n;
}

}  // namespace fairgen
