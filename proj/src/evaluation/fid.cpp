// Copyright (C) 2026 The fairgen authors
// SPDX-License-Identifier: Apache-2.0
#include "fairgen/evaluation/fid.hpp"

#include "fairgen/errors.hpp"
#include "fairgen/kernels/batch_ops.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>

namespace fairgen {

namespace {
constexpr double kEigenClip = 1e-10;
}

void GaussianStats::validate() const {
    if (sample_count < 2) throw PreconditionError("Gaussian stats need sample_count >= 2");
    if (covariance.rows() != covariance.cols() || covariance.rows() != mean.size()) {
        throw ValidationError("Gaussian stats shape mismatch");
    }
    const double asym = (covariance - covariance.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-8) {
        throw ValidationError("covariance is not symmetric (max asymmetry " + std::to_string(asym) + ")");
    }
}

GaussianStats fit_gaussian(const std::vector<Vec>& features) {
    auto moments = kernels::gaussian_moments(features);
    GaussianStats stats{std::move(moments.mean), std::move(moments.covariance),
                        static_cast<std::int64_t>(moments.count)};
    stats.validate();
    return stats;
}

double fid(const GaussianStats& a, const GaussianStats& b) {
    a.validate();
    b.validate();
    if (a.mean.size() != b.mean.size()) {
        throw ValidationError("FID inputs have different feature widths");
    }

    const Mat sa = ((a.covariance + a.covariance.transpose()) / 2.0).eval();
    const Mat sb = ((b.covariance + b.covariance.transpose()) / 2.0).eval();

    // sqrt(Sb) via eigendecomposition, negative eigenvalues clipped.
    Eigen::SelfAdjointEigenSolver<Mat> es_b(sb);
    if (es_b.info() != Eigen::Success) {
        throw NumericError("eigendecomposition of second covariance failed");
    }
    Vec root_vals = es_b.eigenvalues();
    for (Eigen::Index i = 0; i < root_vals.size(); ++i) {
        root_vals[i] = root_vals[i] < kEigenClip ? 0.0 : std::sqrt(root_vals[i]);
    }
    const Mat sqrt_b =
        es_b.eigenvectors() * root_vals.asDiagonal() * es_b.eigenvectors().transpose();

    // Tr (Sa Sb)^{1/2} equals the trace root of the symmetric product
    // sqrt(Sb) Sa sqrt(Sb), which a self-adjoint solver handles stably.
    Mat sym_prod = sqrt_b * sa * sqrt_b;
    sym_prod = ((sym_prod + sym_prod.transpose()) / 2.0).eval();
    Eigen::SelfAdjointEigenSolver<Mat> es_p(sym_prod);
    if (es_p.info() != Eigen::Success) {
        throw NumericError("eigendecomposition of covariance product failed");
    }
    double trace_root = 0.0;
    for (Eigen::Index i = 0; i < es_p.eigenvalues().size(); ++i) {
        const double v = es_p.eigenvalues()[i];
        if (v > kEigenClip) trace_root += std::sqrt(v);
    }

    const double value =
        (a.mean - b.mean).squaredNorm() + sa.trace() + sb.trace() - 2.0 * trace_root;
    if (!std::isfinite(value)) {
        std::ostringstream diag;
        diag << "non-finite FID (trace_root=" << trace_root
             << ", eig range=[" << es_p.eigenvalues().minCoeff() << ", "
             << es_p.eigenvalues().maxCoeff() << "])";
        throw NumericError(diag.str());
    }
    return value;
}

namespace {
constexpr char kStatsMagic[4] = {'F', 'G', 'S', 'T'};
}

void save_gaussian_stats(const GaussianStats& stats, const std::filesystem::path& file) {
    stats.validate();
    std::ofstream out(file, std::ios::binary);
    if (!out) throw IngestionError("cannot write stats file: " + file.string());
    out.write(kStatsMagic, 4);
    const std::uint32_t d = static_cast<std::uint32_t>(stats.mean.size());
    out.write(reinterpret_cast<const char*>(&d), 4);
    out.write(reinterpret_cast<const char*>(&stats.sample_count), 8);
    out.write(reinterpret_cast<const char*>(stats.mean.data()),
              static_cast<std::streamsize>(sizeof(double) * d));
    out.write(reinterpret_cast<const char*>(stats.covariance.data()),
              static_cast<std::streamsize>(sizeof(double) * d * d));
    if (!out) throw IngestionError("short write on stats file: " + file.string());
}

GaussianStats load_gaussian_stats(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw IngestionError("cannot open stats file: " + file.string());
    char magic[4];
    std::uint32_t d = 0;
    GaussianStats stats;
    in.read(magic, 4);
    in.read(reinterpret_cast<char*>(&d), 4);
    in.read(reinterpret_cast<char*>(&stats.sample_count), 8);
    if (!in || std::memcmp(magic, kStatsMagic, 4) != 0) {
        throw ValidationError("not a stats file: " + file.string());
    }
    stats.mean.resize(d);
    stats.covariance.resize(d, d);
    in.read(reinterpret_cast<char*>(stats.mean.data()),
            static_cast<std::streamsize>(sizeof(double) * d));
    in.read(reinterpret_cast<char*>(stats.covariance.data()),
            static_cast<std::streamsize>(sizeof(double) * d * d));
    if (!in) throw ValidationError("stats file truncated: " + file.string());
    stats.validate();
    return stats;
}

}  // namespace fairgen
