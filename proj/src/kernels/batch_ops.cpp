// Copyright (C) 2026 The fairgen authors
// SPDX-License-Identifier: Apache-2.0
#include "fairgen/kernels/batch_ops.hpp"

#include "fairgen/errors.hpp"

#include <cstdint>

namespace fairgen::kernels {

namespace {
constexpr int kReductionBlocks = 64;
}

std::vector<Vec> encode_text_batch(const Encoder& encoder, const std::vector<TokenSeq>& prompts) {
    std::vector<Vec> out(prompts.size());
    std::string first_error;
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(prompts.size()); ++i) {
        try {
            out[static_cast<std::size_t>(i)] = encoder.encode_text(prompts[static_cast<std::size_t>(i)]);
        } catch (const std::exception& e) {
#pragma omp critical
            if (first_error.empty()) first_error = e.what();
        }
    }
    if (!first_error.empty()) throw ValidationError("text batch failed: " + first_error);
    return out;
}

std::vector<Vec> encode_image_batch(const Encoder& encoder,
                                    const std::vector<const ImageRecord*>& records,
                                    std::vector<std::string>* failures) {
    std::vector<Vec> out(records.size());
    std::vector<std::string> errors(records.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(records.size()); ++i) {
        const auto idx = static_cast<std::size_t>(i);
        try {
            out[idx] = encoder.encode_image(*records[idx]);
        } catch (const std::exception& e) {
            errors[idx] = records[idx]->path + " (" + e.what() + ")";
        }
    }
    for (auto& e : errors) {
        if (!e.empty()) {
            if (!failures) throw IngestionError(e);
            failures->push_back(std::move(e));
        }
    }
    return out;
}

Mat score_matrix(const std::vector<Vec>& features, const std::vector<Vec>& label_embeddings) {
    Mat scores(features.size(), label_embeddings.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(features.size()); ++i) {
        for (std::size_t j = 0; j < label_embeddings.size(); ++j) {
            scores(i, static_cast<Eigen::Index>(j)) =
                features[static_cast<std::size_t>(i)].dot(label_embeddings[j]);
        }
    }
    return scores;
}

Moments gaussian_moments(const std::vector<Vec>& features) {
    const std::size_t n = features.size();
    if (n < 2) throw PreconditionError("need at least 2 feature vectors to fit a Gaussian");
    const auto d = features.front().size();
    for (const auto& f : features) {
        if (f.size() != d) throw ValidationError("feature width mismatch in Gaussian fit");
    }

    const int blocks = static_cast<int>(std::min<std::size_t>(kReductionBlocks, n));
    const auto block_range = [&](int b) {
        const std::size_t lo = n * static_cast<std::size_t>(b) / static_cast<std::size_t>(blocks);
        const std::size_t hi = n * static_cast<std::size_t>(b + 1) / static_cast<std::size_t>(blocks);
        return std::pair{lo, hi};
    };

    std::vector<Vec> partial_sums(static_cast<std::size_t>(blocks), Vec::Zero(d));
#pragma omp parallel for schedule(static)
    for (int b = 0; b < blocks; ++b) {
        const auto [lo, hi] = block_range(b);
        for (std::size_t i = lo; i < hi; ++i) partial_sums[static_cast<std::size_t>(b)] += features[i];
    }
    Vec mean = Vec::Zero(d);
    for (const auto& s : partial_sums) mean += s;
    mean /= static_cast<double>(n);

    std::vector<Mat> partial_cov(static_cast<std::size_t>(blocks), Mat::Zero(d, d));
#pragma omp parallel for schedule(static)
    for (int b = 0; b < blocks; ++b) {
        const auto [lo, hi] = block_range(b);
        for (std::size_t i = lo; i < hi; ++i) {
            const Vec c = features[i] - mean;
            partial_cov[static_cast<std::size_t>(b)].noalias() += c * c.transpose();
        }
    }
    Mat cov = Mat::Zero(d, d);
    for (const auto& p : partial_cov) cov += p;
    cov /= static_cast<double>(n - 1);
    cov = ((cov + cov.transpose()) / 2.0).eval();
    return {std::move(mean), std::move(cov), n};
}

namespace serial_ref {

std::vector<Vec> encode_text_batch(const Encoder& encoder, const std::vector<TokenSeq>& prompts) {
    std::vector<Vec> out;
    out.reserve(prompts.size());
    for (const auto& p : prompts) out.push_back(encoder.encode_text(p));
    return out;
}

std::vector<Vec> encode_image_batch(const Encoder& encoder,
                                    const std::vector<const ImageRecord*>& records,
                                    std::vector<std::string>* failures) {
    std::vector<Vec> out(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        try {
            out[i] = encoder.encode_image(*records[i]);
        } catch (const std::exception& e) {
            const std::string msg = records[i]->path + " (" + e.what() + ")";
            if (!failures) throw IngestionError(msg);
            failures->push_back(msg);
        }
    }
    return out;
}

Mat score_matrix(const std::vector<Vec>& features, const std::vector<Vec>& label_embeddings) {
    Mat scores(features.size(), label_embeddings.size());
    for (std::size_t i = 0; i < features.size(); ++i) {
        for (std::size_t j = 0; j < label_embeddings.size(); ++j) {
            scores(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                features[i].dot(label_embeddings[j]);
        }
    }
    return scores;
}

Moments gaussian_moments(const std::vector<Vec>& features) {
    const std::size_t n = features.size();
    if (n < 2) throw PreconditionError("need at least 2 feature vectors to fit a Gaussian");
    const auto d = features.front().size();
    for (const auto& f : features) {
        if (f.size() != d) throw ValidationError("feature width mismatch in Gaussian fit");
    }
    Vec mean = Vec::Zero(d);
    for (const auto& f : features) mean += f;
    mean /= static_cast<double>(n);
    Mat cov = Mat::Zero(d, d);
    for (const auto& f : features) {
        const Vec c = f - mean;
        cov.noalias() += c * c.transpose();
    }
    cov /= static_cast<double>(n - 1);
    cov = ((cov + cov.transpose()) / 2.0).eval();
    return {std::move(mean), std::move(cov), n};
}

}  // namespace serial_ref

}  // namespace fairgen::kernels
