// Copyright (C) 2026 The fairgen authors
// SPDX-License-Identifier: Apache-2.0
#include "fairgen/encoders/feature_cache.hpp"

#include "fairgen/errors.hpp"
#include "fairgen/hashing.hpp"
#include "fairgen/io/png_io.hpp"
#include "fairgen/kernels/batch_ops.hpp"

#include <cstring>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace fairgen {

namespace {

constexpr char kFeatMagic[4] = {'F', 'G', 'F', '1'};

std::string record_content_hash(const ImageRecord& rec) {
    if (rec.latent) {
        return to_hex(fnv1a64(rec.latent->data(),
                              sizeof(double) * static_cast<std::size_t>(rec.latent->size())));
    }
    return content_hash(read_file_bytes(rec.path));
}

void write_feature_file(const std::filesystem::path& file, const Vec& feature) {
    const auto tmp = file.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw IngestionError("cannot write cache record: " + tmp);
        out.write(kFeatMagic, 4);
        const std::uint32_t d = static_cast<std::uint32_t>(feature.size());
        out.write(reinterpret_cast<const char*>(&d), 4);
        out.write(reinterpret_cast<const char*>(feature.data()),
                  static_cast<std::streamsize>(sizeof(double) * d));
        if (!out) throw IngestionError("short write on cache record: " + tmp);
    }
    std::filesystem::rename(tmp, file);
}

std::optional<Vec> read_feature_file(const std::filesystem::path& file, int d_emb) {
    std::ifstream in(file, std::ios::binary);
    if (!in) return std::nullopt;
    char magic[4];
    std::uint32_t d = 0;
    in.read(magic, 4);
    in.read(reinterpret_cast<char*>(&d), 4);
    if (!in || std::memcmp(magic, kFeatMagic, 4) != 0 || d != static_cast<std::uint32_t>(d_emb)) {
        return std::nullopt;
    }
    Vec feature(d);
    in.read(reinterpret_cast<char*>(feature.data()), static_cast<std::streamsize>(sizeof(double) * d));
    if (!in) return std::nullopt;
    return feature;
}

}  // namespace

ReferenceSet compute_reference_features(const Encoder& encoder, const ReferenceSet& refs) {
    ReferenceSet out = refs;
    std::vector<ImageRecord*> pending;
    for (auto& per_attr : out.images) {
        for (auto& per_cat : per_attr) {
            for (auto& rec : per_cat) {
                if (!rec.feature) pending.push_back(&rec);
            }
        }
    }
    std::vector<const ImageRecord*> inputs(pending.begin(), pending.end());
    std::vector<std::string> failures;
    const auto features = kernels::encode_image_batch(encoder, inputs, &failures);
    if (!failures.empty()) {
        std::ostringstream msg;
        msg << "failed to encode " << failures.size() << " image(s):";
        for (const auto& f : failures) msg << "\n  " << f;
        throw IngestionError(msg.str());
    }
    for (std::size_t i = 0; i < pending.size(); ++i) pending[i]->feature = features[i];
    return out;
}

ReferenceSet cache_reference_features(const Encoder& encoder,
                                      const ReferenceSet& refs,
                                      const std::filesystem::path& cache_root) {
    const auto dir = cache_root / encoder.info().identifier;
    std::filesystem::create_directories(dir);
    const int d_emb = encoder.info().d_emb;

    ReferenceSet out = refs;
    std::vector<ImageRecord*> pending;
    std::vector<std::string> pending_hashes;
    std::vector<std::string> failures;
    std::map<std::string, std::string> index_rows;  // hash -> source path

    // Resolve cache hits first; hashing reads file bytes but never the encoder.
    for (auto& per_attr : out.images) {
        for (auto& per_cat : per_attr) {
            for (auto& rec : per_cat) {
                if (rec.feature) continue;
                std::string hash;
                try {
                    hash = record_content_hash(rec);
                } catch (const Error& e) {
                    failures.push_back(rec.path + " (" + e.what() + ")");
                    continue;
                }
                index_rows[hash] = rec.path;
                if (auto cached = read_feature_file(dir / (hash + ".feat"), d_emb)) {
                    rec.feature = std::move(*cached);
                } else {
                    pending.push_back(&rec);
                    pending_hashes.push_back(hash);
                }
            }
        }
    }

    std::vector<const ImageRecord*> inputs(pending.begin(), pending.end());
    std::vector<std::string> encode_failures;
    const auto features = kernels::encode_image_batch(encoder, inputs, &encode_failures);

    // Persist whatever succeeded before reporting failures.
    for (std::size_t i = 0; i < pending.size(); ++i) {
        if (features[i].size() == 0) continue;
        pending[i]->feature = features[i];
        write_feature_file(dir / (pending_hashes[i] + ".feat"), features[i]);
    }

    {
        std::ofstream index(dir / "index.tsv");
        for (const auto& [hash, path] : index_rows) {
            if (std::filesystem::exists(dir / (hash + ".feat"))) {
                index << hash << "\t" << path << "\t" << d_emb << "\n";
            }
        }
    }

    failures.insert(failures.end(), encode_failures.begin(), encode_failures.end());
    if (!failures.empty()) {
        std::ostringstream msg;
        msg << "failed to ingest " << failures.size() << " image(s):";
        for (const auto& f : failures) msg << "\n  " << f;
        throw IngestionError(msg.str());
    }
    return out;
}

}  // namespace fairgen
