// Copyright (C) 2026 The fairgen authors
// SPDX-License-Identifier: Apache-2.0
#include "fairgen/training/batch.hpp"

#include "fairgen/errors.hpp"

#include <algorithm>
#include <sstream>

namespace fairgen {

std::size_t Batch::sample_count() const {
    std::size_t n = 0;
    for (const auto& samples : per_attribute) n += samples.size();
    return n;
}

std::string Batch::composition(const AttributeSet& attrs) const {
    std::ostringstream os;
    for (std::size_t m = 0; m < per_attribute.size(); ++m) {
        if (m) os << ", ";
        os << (m < attrs.size() ? attrs.attributes[m].name : "attr" + std::to_string(m)) << ":";
        const int k = m < attrs.size() ? attrs.attributes[m].category_count() : 0;
        std::vector<int> counts(static_cast<std::size_t>(std::max(k, 1)), 0);
        for (const auto& s : per_attribute[m]) {
            if (s.category >= 0 && s.category < static_cast<int>(counts.size())) {
                counts[static_cast<std::size_t>(s.category)]++;
            }
        }
        for (std::size_t i = 0; i < counts.size(); ++i) os << (i ? "/" : " ") << counts[i];
    }
    return os.str();
}

namespace {

// (category, record) visit order for one attribute and one epoch.
std::vector<std::pair<int, std::size_t>> attribute_visit_order(
    const std::vector<std::vector<ImageRecord>>& categories, bool stratified, SeededRng& rng) {
    std::vector<std::pair<int, std::size_t>> order;
    if (stratified) {
        // Shuffle within each category, then weave round-robin so every
        // batch-sized prefix has near-equal per-category counts.
        std::vector<std::vector<std::size_t>> per_cat(categories.size());
        for (std::size_t i = 0; i < categories.size(); ++i) {
            per_cat[i].resize(categories[i].size());
            for (std::size_t r = 0; r < per_cat[i].size(); ++r) per_cat[i][r] = r;
            rng.shuffle(per_cat[i]);
        }
        std::vector<std::size_t> cursor(categories.size(), 0);
        bool remaining = true;
        while (remaining) {
            remaining = false;
            for (std::size_t i = 0; i < per_cat.size(); ++i) {
                if (cursor[i] < per_cat[i].size()) {
                    order.emplace_back(static_cast<int>(i), per_cat[i][cursor[i]++]);
                    remaining = remaining || cursor[i] < per_cat[i].size();
                }
            }
        }
    } else {
        for (std::size_t i = 0; i < categories.size(); ++i) {
            for (std::size_t r = 0; r < categories[i].size(); ++r) {
                order.emplace_back(static_cast<int>(i), r);
            }
        }
        rng.shuffle(order);
    }
    return order;
}

}  // namespace

std::vector<Batch> plan_epoch_batches(const ReferenceSet& refs,
                                      const AttributeSet& attrs,
                                      const TrainingConfig& config,
                                      SeededRng& rng) {
    const std::size_t batch_size = static_cast<std::size_t>(config.batch_size);
    std::size_t sum_k = 0;
    for (const auto& a : attrs.attributes) sum_k += static_cast<std::size_t>(a.category_count());
    const bool stratified = batch_size >= sum_k;

    std::vector<std::vector<std::pair<int, std::size_t>>> orders(attrs.size());
    std::size_t max_steps = 0, min_steps = SIZE_MAX;
    for (std::size_t m = 0; m < attrs.size(); ++m) {
        orders[m] = attribute_visit_order(refs.images[m], stratified, rng);
        const std::size_t steps = (orders[m].size() + batch_size - 1) / batch_size;
        max_steps = std::max(max_steps, steps);
        min_steps = std::min(min_steps, steps);
    }
    const std::size_t steps =
        config.steps_policy == StepsPolicy::kMaxOverAttributes ? max_steps : min_steps;

    std::vector<Batch> batches(steps);
    for (auto& b : batches) b.per_attribute.resize(attrs.size());
    for (std::size_t m = 0; m < attrs.size(); ++m) {
        for (std::size_t pos = 0; pos < orders[m].size(); ++pos) {
            const std::size_t step = pos / batch_size;
            if (step >= steps) break;
            const auto [cat, rec_idx] = orders[m][pos];
            const auto& rec = refs.images[m][static_cast<std::size_t>(cat)][rec_idx];
            if (!rec.feature) {
                throw PreconditionError("reference image '" + rec.path + "' has no cached feature");
            }
            batches[step].per_attribute[m].push_back({*rec.feature, cat});
        }
    }
    return batches;
}

}  // namespace fairgen
