// Copyright (C) 2026 The fairgen authors
// SPDX-License-Identifier: Apache-2.0
#include "fairgen/generation/generate.hpp"

#include "fairgen/errors.hpp"
#include "fairgen/io/png_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace fairgen {

void GenerationJob::validate() const {
    if (std::find(kMethodTags.begin(), kMethodTags.end(), method) == kMethodTags.end()) {
        throw ValidationError("unknown method tag '" + method + "'");
    }
    if (prompt.empty()) throw ValidationError("job prompt is empty");
    if (images_per_combination < 1) throw ValidationError("images_per_combination must be >= 1");
    if (batch_size < 1) throw ValidationError("batch_size must be >= 1");
    if (!(guidance_scale > 0.0)) throw ValidationError("guidance_scale must be positive");
    attrs.validate();
    if (method == "ITI-GEN" && !table) {
        throw ValidationError("method ITI-GEN requires a token table");
    }
    if (method == "HYBRID") {
        if (!itigen_attributes.empty() && !table) {
            throw ValidationError("HYBRID with fair-token attributes requires a token table");
        }
        std::set<std::string> known;
        for (const auto& a : attrs.attributes) known.insert(a.name);
        for (const auto& n : itigen_attributes) {
            if (!known.count(n)) throw ValidationError("HYBRID names unknown attribute '" + n + "'");
        }
    }
}

std::size_t GenerationJob::scheduled_combinations() const {
    return method == "SD" ? 1 : attrs.joint_size();
}

namespace {

struct MethodConditionings {
    std::vector<Conditioning> positive;  // per scheduled combination
    std::vector<Conditioning> negative;
};

Conditioning with_spatial(Conditioning c, const GenerationJob& job) {
    c.spatial = job.spatial_condition;
    return c;
}

// Splits the job's attribute set into the fair-token subset and the
// hard-prompt remainder, preserving declaration order.
std::pair<AttributeSet, AttributeSet> split_hybrid(const GenerationJob& job) {
    AttributeSet iti, hpsn;
    iti.label_prompt_template = hpsn.label_prompt_template = job.attrs.label_prompt_template;
    const std::set<std::string> iti_names(job.itigen_attributes.begin(),
                                          job.itigen_attributes.end());
    for (const auto& a : job.attrs.attributes) {
        (iti_names.count(a.name) ? iti : hpsn).attributes.push_back(a);
    }
    return {iti, hpsn};
}

MethodConditionings build_conditionings(const GenerationJob& job, const Encoder& encoder) {
    MethodConditionings out;
    const Vec uncond = encoder.unconditional_embedding();

    const auto encode_text_of = [&](const std::string& text) {
        return encoder.encode_text(encoder.tokenize(text));
    };

    if (job.method == "SD") {
        out.positive.push_back(with_spatial(Conditioning::from_embedding(encode_text_of(job.prompt)), job));
        out.negative.push_back(with_spatial(Conditioning::from_embedding(uncond), job));
        return out;
    }

    const auto combos = enumerate_combinations(job.attrs);
    auto hybrid_split = split_hybrid(job);

    for (const auto& combo : combos) {
        if (job.method == "HPS" || job.method == "HPSn") {
            const auto hard =
                build_hard_prompt(job.prompt, job.attrs, combo, job.method == "HPSn");
            out.positive.push_back(
                with_spatial(Conditioning::from_embedding(encode_text_of(hard.positive)), job));
            out.negative.push_back(with_spatial(
                Conditioning::from_embedding(
                    hard.negative.empty() ? uncond : encode_text_of(hard.negative)),
                job));
        } else if (job.method == "ITI-GEN") {
            const auto ip = assemble_prompt(job.prompt, *job.table, job.attrs, combo, encoder);
            out.positive.push_back(with_spatial(
                Conditioning::from_embedding(encoder.encode_text(ip.assembled_tokens)), job));
            out.negative.push_back(with_spatial(Conditioning::from_embedding(uncond), job));
        } else {  // HYBRID
            auto& [iti_attrs, hpsn_attrs] = hybrid_split;
            CategoryCombination iti_combo, hpsn_combo;
            const std::set<std::string> iti_names(job.itigen_attributes.begin(),
                                                  job.itigen_attributes.end());
            for (std::size_t m = 0; m < job.attrs.size(); ++m) {
                (iti_names.count(job.attrs.attributes[m].name) ? iti_combo : hpsn_combo)
                    .indices.push_back(combo.indices[m]);
            }
            static const FairTokenTable kEmptyTable;
            const auto hc = hybrid_conditioning(job.prompt, job.table ? *job.table : kEmptyTable,
                                                iti_attrs, iti_combo, hpsn_attrs, hpsn_combo,
                                                encoder);
            out.positive.push_back(with_spatial(
                Conditioning::from_embedding(encoder.encode_text(hc.positive_tokens)), job));
            out.negative.push_back(with_spatial(
                Conditioning::from_embedding(
                    hc.negative_text.empty() ? uncond : encode_text_of(hc.negative_text)),
                job));
        }
    }
    return out;
}

}  // namespace

std::vector<GenerationRecord> generate(const GenerationJob& job, const Encoder& encoder,
                                       const DiffusionBackend& backend,
                                       const std::filesystem::path& out_dir) {
    job.validate();
    if (backend.info().latent_dim != encoder.info().d_emb) {
        throw ValidationError("backend latent width " + std::to_string(backend.info().latent_dim) +
                              " does not match encoder d_emb " +
                              std::to_string(encoder.info().d_emb));
    }
    const int steps = job.steps > 0 ? job.steps : backend.info().default_steps;
    const auto conditionings = build_conditionings(job, encoder);
    const std::size_t n_combos = job.scheduled_combinations();
    const auto count = static_cast<std::size_t>(job.images_per_combination);

    std::filesystem::create_directories(out_dir);
    std::set<std::pair<std::size_t, std::uint64_t>> done;
    for (const auto& rec : load_manifest(out_dir)) {
        if (rec.method == job.method && std::filesystem::exists(out_dir / rec.path)) {
            done.insert({rec.combination_index, rec.seed - job.seed});
        }
    }

    std::ofstream manifest(out_dir / "manifest.tsv", std::ios::app);
    if (!manifest) throw IngestionError("cannot open manifest in " + out_dir.string());

    std::vector<GenerationRecord> records;
    for (std::size_t c = 0; c < n_combos; ++c) {
        const auto combo_dir = out_dir / job.method / std::to_string(c);
        std::filesystem::create_directories(combo_dir);
        // Batches only group work; per-image seeds come from the global
        // offset, so results are independent of batch_size.
        for (std::size_t first = 0; first < count; first += static_cast<std::size_t>(job.batch_size)) {
            const std::size_t last = std::min(count, first + static_cast<std::size_t>(job.batch_size));
            for (std::size_t i = first; i < last; ++i) {
                const std::uint64_t offset = static_cast<std::uint64_t>(c) * count + i;
                GenerationRecord rec;
                rec.method = job.method;
                rec.combination_index = c;
                rec.seed = job.seed + offset;
                rec.path = job.method + "/" + std::to_string(c) + "/" + std::to_string(offset) +
                           "." + backend.info().image_extension;
                records.push_back(rec);
                if (done.count({c, offset})) continue;

                const Vec latent = sample_latent(backend, rec.seed, steps,
                                                 conditionings.positive[c], conditionings.negative[c],
                                                 job.guidance_scale);
                write_file_bytes(out_dir / rec.path, backend.decode(latent));
                manifest << rec.method << "\t" << rec.combination_index << "\t" << rec.seed
                         << "\t" << rec.path << "\n";
                manifest.flush();
            }
        }
    }
    return records;
}

std::vector<GenerationRecord> load_manifest(const std::filesystem::path& out_dir) {
    std::vector<GenerationRecord> records;
    std::ifstream in(out_dir / "manifest.tsv");
    if (!in) return records;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream is(line);
        GenerationRecord rec;
        std::string combo, seed;
        if (std::getline(is, rec.method, '\t') && std::getline(is, combo, '\t') &&
            std::getline(is, seed, '\t') && std::getline(is, rec.path)) {
            rec.combination_index = std::stoul(combo);
            rec.seed = std::stoull(seed);
            records.push_back(rec);
        }
    }
    return records;
}

}  // namespace fairgen
