// Copyright (C) 2026 The fairgen authors
// SPDX-License-Identifier: Apache-2.0
#include "fairgen/core/reference.hpp"

#include "fairgen/errors.hpp"

namespace fairgen {

ReferenceSet ReferenceSet::empty_for(const AttributeSet& attrs) {
    ReferenceSet rs;
    rs.images.resize(attrs.size());
    for (std::size_t m = 0; m < attrs.size(); ++m) {
        rs.images[m].resize(static_cast<std::size_t>(attrs.attributes[m].category_count()));
    }
    return rs;
}

void ReferenceSet::require_nonempty_categories(const AttributeSet& attrs) const {
    if (images.size() != attrs.size()) {
        throw PreconditionError("reference set shape does not match attribute set");
    }
    for (std::size_t m = 0; m < attrs.size(); ++m) {
        const auto& spec = attrs.attributes[m];
        if (images[m].size() != spec.categories.size()) {
            throw PreconditionError("reference set categories do not match attribute '" + spec.name + "'");
        }
        for (std::size_t i = 0; i < images[m].size(); ++i) {
            if (images[m][i].empty()) {
                throw PreconditionError("no reference images for attribute '" + spec.name +
                                        "' category '" + spec.categories[i] + "'");
            }
        }
    }
}

void ReferenceSet::require_features(const AttributeSet& attrs) const {
    for (std::size_t m = 0; m < images.size(); ++m) {
        for (std::size_t i = 0; i < images[m].size(); ++i) {
            for (const auto& rec : images[m][i]) {
                if (!rec.feature) {
                    throw PreconditionError("reference image '" + rec.path +
                                            "' of attribute '" + attrs.attributes[m].name +
                                            "' has no cached feature");
                }
            }
        }
    }
}

std::size_t ReferenceSet::record_count() const {
    std::size_t n = 0;
    for (const auto& per_attr : images) {
        for (const auto& per_cat : per_attr) n += per_cat.size();
    }
    return n;
}

}  // namespace fairgen
