// Copyright (C) 2026 The fairgen authors
// SPDX-License-Identifier: Apache-2.0
#include "fairgen/generation/prompts.hpp"

#include "fairgen/errors.hpp"

#include <set>

namespace fairgen {

InclusivePrompt assemble_prompt(const std::string& prompt, const FairTokenTable& table,
                                const AttributeSet& attrs, const CategoryCombination& combination,
                                const Encoder& encoder) {
    table.validate(attrs, encoder.info().d_tok);
    return build_inclusive_prompt(encoder.tokenize(prompt), table, attrs, combination,
                                  encoder.info().max_sequence_length);
}

namespace {

std::string apply_positive_phrase(const std::string& current, const std::string& phrase) {
    const std::string placeholder = "{prompt}";
    if (phrase.empty()) return current;
    auto pos = phrase.find(placeholder);
    if (pos == std::string::npos) return phrase;
    std::string out = phrase;
    do {
        out.replace(pos, placeholder.size(), current);
        pos = out.find(placeholder, pos + current.size());
    } while (pos != std::string::npos);
    return out;
}

}  // namespace

HardPrompt build_hard_prompt(const std::string& prompt, const AttributeSet& attrs,
                             const CategoryCombination& combination, bool negative_prompting) {
    combination_index(attrs, combination);  // range check
    HardPrompt hp;
    hp.positive = prompt;
    for (std::size_t m = 0; m < attrs.size(); ++m) {
        const auto& spec = attrs.attributes[m];
        const auto& category = spec.categories[static_cast<std::size_t>(combination.indices[m])];
        const auto it = spec.phrases.find(category);
        const HpsPhrases* phrases = it == spec.phrases.end() ? nullptr : &it->second;

        if (negative_prompting && phrases && !phrases->negation.empty()) {
            if (!hp.negative.empty()) hp.negative += ", ";
            hp.negative += phrases->negation;
            continue;
        }
        if (!phrases || phrases->positive.empty()) {
            throw SchemaError("attribute '" + spec.name + "' category '" + category +
                              "' has no " + (negative_prompting ? "positive or negation" : "positive") +
                              " phrase for hard prompting");
        }
        hp.positive = apply_positive_phrase(hp.positive, phrases->positive);
    }
    return hp;
}

HybridConditioning hybrid_conditioning(const std::string& prompt, const FairTokenTable& table,
                                       const AttributeSet& itigen_attrs,
                                       const CategoryCombination& itigen_combination,
                                       const AttributeSet& hpsn_attrs,
                                       const CategoryCombination& hpsn_combination,
                                       const Encoder& encoder) {
    std::set<std::string> names;
    for (const auto& a : itigen_attrs.attributes) names.insert(a.name);
    for (const auto& a : hpsn_attrs.attributes) {
        if (names.count(a.name)) {
            throw ValidationError("attribute '" + a.name +
                                  "' appears in both the fair-token and hard-prompt sets");
        }
    }

    const HardPrompt hard =
        build_hard_prompt(prompt, hpsn_attrs, hpsn_combination, /*negative_prompting=*/true);

    HybridConditioning out;
    out.negative_text = hard.negative;
    if (itigen_attrs.attributes.empty()) {
        out.positive_tokens = encoder.tokenize(hard.positive);
        return out;
    }
    table.validate(itigen_attrs, encoder.info().d_tok);
    out.positive_tokens =
        build_inclusive_prompt(encoder.tokenize(hard.positive), table, itigen_attrs,
                               itigen_combination, encoder.info().max_sequence_length)
            .assembled_tokens;
    return out;
}

}  // namespace fairgen
