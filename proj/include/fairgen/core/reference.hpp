// Copyright (C) 2026 The fairgen authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "fairgen/common.hpp"
#include "fairgen/core/attributes.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fairgen {

// One reference image. Synthetic records carry a latent attribute vector
// instead of file contents; `feature` is the cached unit-norm joint
// embedding once computed.
struct ImageRecord {
    std::string path;
    std::optional<Vec> latent;
    std::optional<Vec> feature;
    std::map<std::string, std::string> aux_labels;
};

// Reference images indexed [attribute][category].
struct ReferenceSet {
    std::vector<std::vector<std::vector<ImageRecord>>> images;

    static ReferenceSet empty_for(const AttributeSet& attrs);
    // Throws PreconditionError naming the first empty (attribute, category).
    void require_nonempty_categories(const AttributeSet& attrs) const;
    // Throws PreconditionError if any record has no cached feature.
    void require_features(const AttributeSet& attrs) const;
    std::size_t record_count() const;
};

}  // namespace fairgen
