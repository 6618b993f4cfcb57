// Copyright (C) 2026 The fairgen authors
// SPDX-License-Identifier: Apache-2.0
#include "fairgen/evaluation/classify.hpp"

#include "fairgen/errors.hpp"
#include "fairgen/kernels/batch_ops.hpp"

namespace fairgen {

std::vector<std::vector<std::vector<std::string>>> resolve_label_prompts(const AttributeSet& attrs) {
    std::vector<std::vector<std::vector<std::string>>> out(attrs.size());
    for (std::size_t m = 0; m < attrs.size(); ++m) {
        const auto& spec = attrs.attributes[m];
        out[m].resize(spec.categories.size());
        for (std::size_t i = 0; i < spec.categories.size(); ++i) {
            const auto it = spec.label_prompts.find(spec.categories[i]);
            if (it != spec.label_prompts.end() && !it->second.empty()) {
                out[m][i] = it->second;
                continue;
            }
            std::string text = attrs.label_prompt_template;
            const std::string placeholder = "{category}";
            auto pos = text.find(placeholder);
            while (pos != std::string::npos) {
                text.replace(pos, placeholder.size(), spec.categories[i]);
                pos = text.find(placeholder, pos + spec.categories[i].size());
            }
            out[m][i] = {text};
        }
    }
    return out;
}

namespace {

// Mean label-prompt embedding per (attribute, category).
std::vector<std::vector<Vec>> label_embeddings(
    const AttributeSet& attrs,
    const std::vector<std::vector<std::vector<std::string>>>& label_prompts,
    const Encoder& encoder) {
    if (label_prompts.size() != attrs.size()) {
        throw SchemaError("label prompts do not cover every attribute");
    }
    std::vector<std::vector<Vec>> out(attrs.size());
    for (std::size_t m = 0; m < attrs.size(); ++m) {
        const auto& spec = attrs.attributes[m];
        if (label_prompts[m].size() != spec.categories.size()) {
            throw SchemaError("label prompts do not cover every category of '" + spec.name + "'");
        }
        out[m].resize(spec.categories.size());
        for (std::size_t i = 0; i < spec.categories.size(); ++i) {
            if (label_prompts[m][i].empty()) {
                throw SchemaError("no label prompt for attribute '" + spec.name +
                                  "' category '" + spec.categories[i] + "'");
            }
            Vec mean = Vec::Zero(encoder.info().d_emb);
            for (const auto& text : label_prompts[m][i]) {
                mean += encoder.encode_text(encoder.tokenize(text));
            }
            out[m][i] = mean / static_cast<double>(label_prompts[m][i].size());
        }
    }
    return out;
}

CategoryCombination argmax_combination(const Vec& feature, const AttributeSet& attrs,
                                       const std::vector<std::vector<Vec>>& labels) {
    CategoryCombination combo;
    combo.indices.reserve(attrs.size());
    for (std::size_t m = 0; m < attrs.size(); ++m) {
        int best = 0;
        double best_score = feature.dot(labels[m][0]);
        for (std::size_t i = 1; i < labels[m].size(); ++i) {
            const double s = feature.dot(labels[m][i]);
            if (s > best_score) {  // strict: ties keep the lowest index
                best_score = s;
                best = static_cast<int>(i);
            }
        }
        combo.indices.push_back(best);
    }
    return combo;
}

}  // namespace

CategoryCombination classify(const ImageRecord& image, const AttributeSet& attrs,
                             const std::vector<std::vector<std::vector<std::string>>>& label_prompts,
                             const Encoder& encoder) {
    const auto labels = label_embeddings(attrs, label_prompts, encoder);
    const Vec feature = image.feature ? *image.feature : encoder.encode_image(image);
    return argmax_combination(feature, attrs, labels);
}

std::vector<CategoryCombination> classify_batch(
    const std::vector<ImageRecord>& images, const AttributeSet& attrs,
    const std::vector<std::vector<std::vector<std::string>>>& label_prompts,
    const Encoder& encoder) {
    const auto labels = label_embeddings(attrs, label_prompts, encoder);

    std::vector<const ImageRecord*> pending;
    for (const auto& img : images) {
        if (!img.feature) pending.push_back(&img);
    }
    const auto encoded = kernels::encode_image_batch(encoder, pending, nullptr);

    std::vector<CategoryCombination> out;
    out.reserve(images.size());
    std::size_t next = 0;
    for (const auto& img : images) {
        const Vec& feature = img.feature ? *img.feature : encoded[next++];
        out.push_back(argmax_combination(feature, attrs, labels));
    }
    return out;
}

}  // namespace fairgen
