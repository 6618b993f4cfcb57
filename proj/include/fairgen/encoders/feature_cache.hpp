// Copyright (C) 2026 The fairgen authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "fairgen/core/reference.hpp"
#include "fairgen/encoders/encoder.hpp"

#include <filesystem>

namespace fairgen {

// Populates every record's unit-norm feature, reading from and writing to a
// content-addressed cache at <cache_root>/<encoder_id>/<content_hash>.feat
// with a plaintext index.tsv (hash, source path, d_emb). Keying by content
// hash survives dataset re-ordering and renaming. Idempotent: a warm cache
// costs zero encoder invocations. Unreadable files abort with an
// IngestionError listing every offending path; features computed before the
// failure stay cached.
ReferenceSet cache_reference_features(const Encoder& encoder,
                                      const ReferenceSet& refs,
                                      const std::filesystem::path& cache_root);

// Feature computation without a cache directory (in-memory only).
ReferenceSet compute_reference_features(const Encoder& encoder, const ReferenceSet& refs);

}  // namespace fairgen
