// Copyright (C) 2026 The fairgen authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "fairgen/common.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fairgen {

// Minimal PNG subset used by the stub diffusion backend: 8-bit RGBA or
// grayscale, non-interlaced, filter 0. Enough to round-trip latent payloads
// through real, viewable PNG files without pulling in an image library.
struct PngImage {
    std::uint32_t width = 0;
    std::uint32_t height = 0;
    int channels = 4;  // 1 = gray, 4 = RGBA
    std::vector<unsigned char> pixels;
    std::map<std::string, std::string> text;  // tEXt chunks
};

std::vector<unsigned char> encode_png(const PngImage& img);
PngImage decode_png(const std::vector<unsigned char>& bytes);
bool looks_like_png(const std::vector<unsigned char>& bytes);

// Latent vectors are stored losslessly as one RGBA row per 64 floats
// (4 bytes per pixel, little-endian float32), tagged with a tEXt marker.
std::vector<unsigned char> latent_to_png(const Vec& latent);
std::optional<Vec> latent_from_png(const std::vector<unsigned char>& bytes);

std::vector<unsigned char> read_file_bytes(const std::filesystem::path& file);
void write_file_bytes(const std::filesystem::path& file, const std::vector<unsigned char>& bytes);

}  // namespace fairgen
