// Copyright (C) 2026 The fairgen authors
// SPDX-License-Identifier: Apache-2.0
#include "fairgen/cli/dataset.hpp"

#include "fairgen/errors.hpp"
#include "fairgen/rng.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace fairgen {

using nlohmann::json;

const ManifestAttribute* DatasetManifest::find_attribute(const std::string& name) const {
    for (const auto& a : attributes) {
        if (a.name == name) return &a;
    }
    return nullptr;
}

std::size_t DatasetManifest::image_count() const {
    std::size_t n = 0;
    for (const auto& a : attributes) {
        for (const auto& c : a.categories) n += c.images.size();
    }
    return n;
}

namespace {

DatasetManifest parse_manifest_json(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw IngestionError("cannot open manifest: " + file.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ValidationError("manifest is not valid JSON: " + std::string(e.what()));
    }
    DatasetManifest m;
    try {
        std::filesystem::path root = j.value("root", ".");
        m.root = root.is_absolute() ? root : file.parent_path() / root;
        m.variant = j.value("variant", "original");
        for (const auto& ja : j.at("attributes")) {
            ManifestAttribute attr;
            attr.name = ja.at("name").get<std::string>();
            for (const auto& jc : ja.at("categories")) {
                ManifestCategory cat;
                cat.name = jc.at("name").get<std::string>();
                for (const auto& ji : jc.at("images")) {
                    ManifestImage img;
                    img.path = ji.at("path").get<std::string>();
                    if (ji.contains("aux")) {
                        for (const auto& [k, v] : ji.at("aux").items()) {
                            img.aux[k] = v.get<std::string>();
                        }
                    }
                    cat.images.push_back(std::move(img));
                }
                attr.categories.push_back(std::move(cat));
            }
            m.attributes.push_back(std::move(attr));
        }
    } catch (const json::exception& e) {
        throw ValidationError("manifest field error: " + std::string(e.what()));
    }
    return m;
}

DatasetManifest scan_dataset_dir(const std::filesystem::path& root) {
    DatasetManifest m;
    m.root = root;

    std::map<std::string, std::map<std::string, std::string>> aux;  // path -> labels
    const auto aux_file = root / "aux_labels.tsv";
    if (std::filesystem::exists(aux_file)) {
        std::ifstream in(aux_file);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            std::istringstream is(line);
            std::string path, key, value;
            if (std::getline(is, path, '\t') && std::getline(is, key, '\t') &&
                std::getline(is, value)) {
                aux[path][key] = value;
            }
        }
    }

    std::vector<std::filesystem::path> attr_dirs;
    for (const auto& e : std::filesystem::directory_iterator(root)) {
        if (e.is_directory()) attr_dirs.push_back(e.path());
    }
    std::sort(attr_dirs.begin(), attr_dirs.end());
    for (const auto& attr_dir : attr_dirs) {
        ManifestAttribute attr;
        attr.name = attr_dir.filename().string();
        std::vector<std::filesystem::path> cat_dirs;
        for (const auto& e : std::filesystem::directory_iterator(attr_dir)) {
            if (e.is_directory()) cat_dirs.push_back(e.path());
        }
        std::sort(cat_dirs.begin(), cat_dirs.end());
        for (const auto& cat_dir : cat_dirs) {
            ManifestCategory cat;
            cat.name = cat_dir.filename().string();
            std::vector<std::filesystem::path> files;
            for (const auto& e : std::filesystem::directory_iterator(cat_dir)) {
                if (e.is_regular_file()) files.push_back(e.path());
            }
            std::sort(files.begin(), files.end());
            for (const auto& f : files) {
                ManifestImage img;
                img.path = std::filesystem::relative(f, root).generic_string();
                if (auto it = aux.find(img.path); it != aux.end()) img.aux = it->second;
                cat.images.push_back(std::move(img));
            }
            attr.categories.push_back(std::move(cat));
        }
        m.attributes.push_back(std::move(attr));
    }
    return m;
}

}  // namespace

DatasetManifest load_dataset(const std::filesystem::path& path) {
    if (std::filesystem::is_directory(path)) return scan_dataset_dir(path);
    if (std::filesystem::exists(path)) return parse_manifest_json(path);
    throw IngestionError("dataset path does not exist: " + path.string());
}

void save_manifest(const DatasetManifest& manifest, const std::filesystem::path& file) {
    json j;
    j["root"] = manifest.root.generic_string();
    j["variant"] = manifest.variant;
    j["attributes"] = json::array();
    for (const auto& a : manifest.attributes) {
        json ja;
        ja["name"] = a.name;
        ja["categories"] = json::array();
        for (const auto& c : a.categories) {
            json jc;
            jc["name"] = c.name;
            jc["images"] = json::array();
            for (const auto& img : c.images) {
                json ji;
                ji["path"] = img.path;
                if (!img.aux.empty()) ji["aux"] = img.aux;
                jc["images"].push_back(ji);
            }
            ja["categories"].push_back(jc);
        }
        j["attributes"].push_back(ja);
    }
    std::ofstream out(file);
    if (!out) throw IngestionError("cannot write manifest: " + file.string());
    out << j.dump(2) << "\n";
}

std::string dataset_schema_diff(const DatasetManifest& manifest, const AttributeSet& attrs) {
    std::ostringstream diff;
    for (const auto& spec : attrs.attributes) {
        const auto* attr = manifest.find_attribute(spec.name);
        if (!attr) {
            diff << "missing attribute directory/entry: " << spec.name << "\n";
            continue;
        }
        for (const auto& cat : spec.categories) {
            const auto it = std::find_if(attr->categories.begin(), attr->categories.end(),
                                         [&](const auto& c) { return c.name == cat; });
            if (it == attr->categories.end()) {
                diff << "missing category: " << spec.name << "/" << cat << "\n";
            } else if (it->images.empty()) {
                diff << "empty category: " << spec.name << "/" << cat << "\n";
            }
        }
    }
    return diff.str();
}

ReferenceSet to_reference_set(const DatasetManifest& manifest, const AttributeSet& attrs) {
    const auto diff = dataset_schema_diff(manifest, attrs);
    if (!diff.empty()) {
        throw ValidationError("dataset does not match schema:\n" + diff);
    }
    ReferenceSet refs = ReferenceSet::empty_for(attrs);
    for (std::size_t m = 0; m < attrs.size(); ++m) {
        const auto* attr = manifest.find_attribute(attrs.attributes[m].name);
        for (std::size_t i = 0; i < attrs.attributes[m].categories.size(); ++i) {
            const auto& cat_name = attrs.attributes[m].categories[i];
            const auto it = std::find_if(attr->categories.begin(), attr->categories.end(),
                                         [&](const auto& c) { return c.name == cat_name; });
            std::set<std::string> seen;
            for (const auto& img : it->images) {
                if (!seen.insert(img.path).second) {
                    throw ValidationError("duplicate path in " + attr->name + "/" + cat_name +
                                          ": " + img.path);
                }
                ImageRecord rec;
                rec.path = (manifest.root / img.path).generic_string();
                rec.aux_labels = img.aux;
                refs.images[m][i].push_back(std::move(rec));
            }
        }
    }
    return refs;
}

VariantSpec load_variant_spec(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw IngestionError("cannot open variant spec: " + file.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ValidationError("variant spec is not valid JSON: " + std::string(e.what()));
    }
    VariantSpec spec;
    spec.name = j.value("name", "variant");
    if (j.contains("filters")) {
        for (const auto& [cat, req] : j.at("filters").items()) {
            for (const auto& [k, v] : req.items()) {
                spec.filters[cat][k] = v.get<std::string>();
            }
        }
    }
    return spec;
}

DatasetManifest apply_variant(const DatasetManifest& manifest, const std::string& attribute,
                              const VariantSpec& spec) {
    DatasetManifest out = manifest;
    out.variant = spec.name;
    ManifestAttribute* attr = nullptr;
    for (auto& a : out.attributes) {
        if (a.name == attribute) attr = &a;
    }
    if (!attr) throw SchemaError("dataset has no attribute '" + attribute + "'");

    for (auto& cat : attr->categories) {
        const auto it = spec.filters.find(cat.name);
        if (it == spec.filters.end()) continue;
        std::vector<ManifestImage> kept;
        for (const auto& img : cat.images) {
            bool match = true;
            for (const auto& [k, v] : it->second) {
                const auto aux_it = img.aux.find(k);
                if (aux_it == img.aux.end() || aux_it->second != v) {
                    match = false;
                    break;
                }
            }
            if (match) kept.push_back(img);
        }
        if (kept.empty()) {
            throw ValidationError("variant '" + spec.name + "' empties category '" + attribute +
                                  "/" + cat.name + "'");
        }
        cat.images = std::move(kept);
    }
    return out;
}

std::vector<std::vector<Vec>> planted_directions(const AttributeSet& attrs, int d_emb) {
    std::size_t needed = 1;
    for (const auto& a : attrs.attributes) needed += static_cast<std::size_t>(a.category_count());
    if (static_cast<std::size_t>(d_emb) < needed) {
        throw ValidationError("planted directions need d_emb >= " + std::to_string(needed));
    }
    std::vector<std::vector<Vec>> dirs(attrs.size());
    int next = 1;  // basis 0 is the base-prompt direction
    for (std::size_t m = 0; m < attrs.size(); ++m) {
        for (int i = 0; i < attrs.attributes[m].category_count(); ++i) {
            Vec v = Vec::Zero(d_emb);
            v[next++] = 1.0;
            dirs[m].push_back(std::move(v));
        }
    }
    return dirs;
}

ReferenceSet make_planted_reference_set(const AttributeSet& attrs, int per_category, int d_emb,
                                        std::uint64_t seed, double noise_scale) {
    const auto dirs = planted_directions(attrs, d_emb);
    ReferenceSet refs = ReferenceSet::empty_for(attrs);
    for (std::size_t m = 0; m < attrs.size(); ++m) {
        for (std::size_t i = 0; i < refs.images[m].size(); ++i) {
            auto rng = derive_rng(hash_mix(seed, fnv1a64("planted") + m * 131 + i),
                                  attrs.attributes[m].name);
            for (int r = 0; r < per_category; ++r) {
                ImageRecord rec;
                rec.path = "synthetic://" + attrs.attributes[m].name + "/" +
                           attrs.attributes[m].categories[i] + "/" + std::to_string(r);
                rec.latent = dirs[m][i] + rng.normal_vector(d_emb, noise_scale /
                                                                       std::sqrt(static_cast<double>(d_emb)));
                refs.images[m][i].push_back(std::move(rec));
            }
        }
    }
    return refs;
}

}  // namespace fairgen
