// Copyright (C) 2026 The fairgen authors
// SPDX-License-Identifier: Apache-2.0
#include "fairgen/evaluation/distribution.hpp"

#include "fairgen/errors.hpp"

#include <cmath>

namespace fairgen {

EmpiricalDistribution empirical_distribution(const std::vector<CategoryCombination>& labels,
                                             const AttributeSet& attrs) {
    if (labels.empty()) throw PreconditionError("need at least one label");
    EmpiricalDistribution dist;
    dist.counts.assign(attrs.joint_size(), 0);
    for (const auto& combo : labels) {
        std::size_t idx;
        try {
            idx = combination_index(attrs, combo);
        } catch (const SchemaError& e) {
            throw ValidationError(std::string("invalid label: ") + e.what());
        }
        dist.counts[idx]++;
        dist.total++;
    }
    return dist;
}

double kl_to_uniform(const EmpiricalDistribution& dist) {
    if (dist.total < 1) throw PreconditionError("empty distribution has no KL divergence");
    const double k = static_cast<double>(dist.counts.size());
    double d = 0.0;
    for (const auto count : dist.counts) {
        if (count <= 0) continue;
        const double p = static_cast<double>(count) / static_cast<double>(dist.total);
        d += p * std::log(p * k);
    }
    return d;
}

EmpiricalDistribution marginal_distribution(const EmpiricalDistribution& dist,
                                            const AttributeSet& attrs, int attribute) {
    if (attribute < 0 || static_cast<std::size_t>(attribute) >= attrs.size()) {
        throw ValidationError("attribute index out of range");
    }
    if (dist.counts.size() != attrs.joint_size()) {
        throw ValidationError("distribution size does not match attribute set");
    }
    EmpiricalDistribution marg;
    marg.counts.assign(
        static_cast<std::size_t>(attrs.attributes[static_cast<std::size_t>(attribute)].category_count()), 0);
    for (std::size_t idx = 0; idx < dist.counts.size(); ++idx) {
        const auto combo = combination_from_index(attrs, idx);
        marg.counts[static_cast<std::size_t>(combo.indices[static_cast<std::size_t>(attribute)])] +=
            dist.counts[idx];
    }
    marg.total = dist.total;
    return marg;
}

}  // namespace fairgen
