// Copyright (C) 2026 The fairgen authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "fairgen/core/attributes.hpp"
#include "fairgen/core/reference.hpp"

#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace fairgen {

struct ManifestImage {
    std::string path;  // relative to the manifest root
    std::map<std::string, std::string> aux;
};

struct ManifestCategory {
    std::string name;
    std::vector<ManifestImage> images;
};

struct ManifestAttribute {
    std::string name;
    std::vector<ManifestCategory> categories;
};

// Reference-image layout: per attribute, per category, relative image paths
// with optional auxiliary labels (the handle for the bias-ablation filters
// that raw folders cannot express).
struct DatasetManifest {
    std::filesystem::path root;
    std::vector<ManifestAttribute> attributes;
    std::string variant = "original";

    const ManifestAttribute* find_attribute(const std::string& name) const;
    std::size_t image_count() const;
};

// Loads a manifest JSON file, or scans a directory laid out as
// <root>/<attribute>/<category>/<images>, with optional aux labels in
// <root>/aux_labels.tsv (path, key, value). Scans sort paths for
// determinism.
DatasetManifest load_dataset(const std::filesystem::path& path);
void save_manifest(const DatasetManifest& manifest, const std::filesystem::path& file);

// Empty string when consistent; otherwise a human-readable diff of what the
// schema expects versus what the dataset provides.
std::string dataset_schema_diff(const DatasetManifest& manifest, const AttributeSet& attrs);

ReferenceSet to_reference_set(const DatasetManifest& manifest, const AttributeSet& attrs);

// Variant spec: per-category required aux equalities; categories not listed
// keep all images.
struct VariantSpec {
    std::string name;
    std::map<std::string, std::map<std::string, std::string>> filters;
};

VariantSpec load_variant_spec(const std::filesystem::path& file);

// Filters one attribute's images by the spec. The input is untouched; the
// result records the variant name. Throws ValidationError if a category
// would end up empty (training could not start).
DatasetManifest apply_variant(const DatasetManifest& manifest, const std::string& attribute,
                              const VariantSpec& spec);

// Orthonormal planted direction per (attribute, category); index 0 of the
// embedding basis is reserved for the base prompt. Needs
// d_emb >= 1 + sum_m K_m.
std::vector<std::vector<Vec>> planted_directions(const AttributeSet& attrs, int d_emb);

// Synthetic reference set with latent vectors planted along those
// directions plus Gaussian noise; used by the complexity benchmark and the
// desk-scale pipeline tests.
ReferenceSet make_planted_reference_set(const AttributeSet& attrs, int per_category, int d_emb,
                                        std::uint64_t seed, double noise_scale);

// Same latents written to disk as latent PNGs under
// <dir>/<attribute>/<category>/<index>.png, with a manifest.json. The
// optional labeler attaches aux labels per (attribute, category, index).
using AuxLabeler =
    std::function<std::map<std::string, std::string>(std::size_t, std::size_t, int)>;
DatasetManifest write_planted_dataset(const AttributeSet& attrs, int per_category, int d_emb,
                                      std::uint64_t seed, double noise_scale,
                                      const std::filesystem::path& dir,
                                      const AuxLabeler& labeler = nullptr);

}  // namespace fairgen
