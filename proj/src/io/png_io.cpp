// Copyright (C) 2026 The fairgen authors
// SPDX-License-Identifier: Apache-2.0
#include "fairgen/io/png_io.hpp"

#include "fairgen/errors.hpp"

#include <zlib.h>

#include <cstring>
#include <fstream>

namespace fairgen {

namespace {

const unsigned char kPngSignature[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
constexpr char kLatentMarkerKey[] = "fairgen.latent";
constexpr char kLatentMarkerValue[] = "f32le";

void put_be32(std::vector<unsigned char>& out, std::uint32_t v) {
    out.push_back(static_cast<unsigned char>(v >> 24));
    out.push_back(static_cast<unsigned char>(v >> 16));
    out.push_back(static_cast<unsigned char>(v >> 8));
    out.push_back(static_cast<unsigned char>(v));
}

std::uint32_t get_be32(const unsigned char* p) {
    return (std::uint32_t(p[0]) << 24) | (std::uint32_t(p[1]) << 16) |
           (std::uint32_t(p[2]) << 8) | std::uint32_t(p[3]);
}

void append_chunk(std::vector<unsigned char>& out, const char type[4],
                  const std::vector<unsigned char>& data) {
    put_be32(out, static_cast<std::uint32_t>(data.size()));
    std::vector<unsigned char> body(type, type + 4);
    body.insert(body.end(), data.begin(), data.end());
    out.insert(out.end(), body.begin(), body.end());
    const auto crc = crc32(0L, body.data(), static_cast<uInt>(body.size()));
    put_be32(out, static_cast<std::uint32_t>(crc));
}

}  // namespace

std::vector<unsigned char> encode_png(const PngImage& img) {
    if (img.channels != 1 && img.channels != 4) {
        throw ValidationError("png encoder supports 1 or 4 channels");
    }
    const std::size_t row_bytes = static_cast<std::size_t>(img.width) * static_cast<std::size_t>(img.channels);
    if (img.pixels.size() != row_bytes * img.height) {
        throw ValidationError("png pixel buffer size mismatch");
    }

    std::vector<unsigned char> out(kPngSignature, kPngSignature + 8);

    std::vector<unsigned char> ihdr;
    put_be32(ihdr, img.width);
    put_be32(ihdr, img.height);
    ihdr.push_back(8);                                            // bit depth
    ihdr.push_back(img.channels == 4 ? 6 : 0);                    // color type
    ihdr.push_back(0);                                            // compression
    ihdr.push_back(0);                                            // filter
    ihdr.push_back(0);                                            // interlace
    append_chunk(out, "IHDR", ihdr);

    for (const auto& [key, value] : img.text) {
        std::vector<unsigned char> text(key.begin(), key.end());
        text.push_back(0);
        text.insert(text.end(), value.begin(), value.end());
        append_chunk(out, "tEXt", text);
    }

    // Filter byte 0 prepended to each scanline, whole stream zlib-compressed.
    std::vector<unsigned char> raw;
    raw.reserve((row_bytes + 1) * img.height);
    for (std::uint32_t y = 0; y < img.height; ++y) {
        raw.push_back(0);
        raw.insert(raw.end(), img.pixels.begin() + static_cast<std::ptrdiff_t>(y * row_bytes),
                   img.pixels.begin() + static_cast<std::ptrdiff_t>((y + 1) * row_bytes));
    }
    uLongf comp_len = compressBound(static_cast<uLong>(raw.size()));
    std::vector<unsigned char> comp(comp_len);
    if (compress2(comp.data(), &comp_len, raw.data(), static_cast<uLong>(raw.size()), 9) != Z_OK) {
        throw NumericError("zlib compression failed while encoding png");
    }
    comp.resize(comp_len);
    append_chunk(out, "IDAT", comp);
    append_chunk(out, "IEND", {});
    return out;
}

bool looks_like_png(const std::vector<unsigned char>& bytes) {
    return bytes.size() >= 8 && std::memcmp(bytes.data(), kPngSignature, 8) == 0;
}

PngImage decode_png(const std::vector<unsigned char>& bytes) {
    if (!looks_like_png(bytes)) throw IngestionError("not a png stream");
    PngImage img;
    std::vector<unsigned char> idat;
    std::size_t pos = 8;
    bool saw_ihdr = false;
    while (pos + 8 <= bytes.size()) {
        const std::uint32_t len = get_be32(&bytes[pos]);
        if (pos + 12 + len > bytes.size()) throw IngestionError("truncated png chunk");
        const std::string type(bytes.begin() + static_cast<std::ptrdiff_t>(pos + 4),
                               bytes.begin() + static_cast<std::ptrdiff_t>(pos + 8));
        const unsigned char* data = &bytes[pos + 8];
        if (type == "IHDR") {
            if (len != 13) throw IngestionError("bad IHDR length");
            img.width = get_be32(data);
            img.height = get_be32(data + 4);
            const int bit_depth = data[8];
            const int color_type = data[9];
            const int interlace = data[12];
            if (bit_depth != 8 || (color_type != 0 && color_type != 6) || interlace != 0) {
                throw IngestionError("unsupported png variant (need 8-bit gray/RGBA, no interlace)");
            }
            img.channels = color_type == 6 ? 4 : 1;
            saw_ihdr = true;
        } else if (type == "tEXt") {
            const auto* sep = static_cast<const unsigned char*>(std::memchr(data, 0, len));
            if (sep) {
                img.text[std::string(data, sep)] =
                    std::string(sep + 1, data + len);
            }
        } else if (type == "IDAT") {
            idat.insert(idat.end(), data, data + len);
        } else if (type == "IEND") {
            break;
        }
        pos += 12 + len;
    }
    if (!saw_ihdr) throw IngestionError("png missing IHDR");

    const std::size_t row_bytes = static_cast<std::size_t>(img.width) * static_cast<std::size_t>(img.channels);
    const std::size_t raw_len = (row_bytes + 1) * img.height;
    std::vector<unsigned char> raw(raw_len);
    uLongf dest_len = static_cast<uLongf>(raw_len);
    if (uncompress(raw.data(), &dest_len, idat.data(), static_cast<uLong>(idat.size())) != Z_OK ||
        dest_len != raw_len) {
        throw IngestionError("png IDAT decompression failed");
    }
    img.pixels.resize(row_bytes * img.height);
    for (std::uint32_t y = 0; y < img.height; ++y) {
        if (raw[y * (row_bytes + 1)] != 0) {
            throw IngestionError("unsupported png filter (only filter 0 is produced here)");
        }
        std::memcpy(&img.pixels[y * row_bytes], &raw[y * (row_bytes + 1) + 1], row_bytes);
    }
    return img;
}

std::vector<unsigned char> latent_to_png(const Vec& latent) {
    const int d = static_cast<int>(latent.size());
    constexpr int kRowFloats = 64;
    const int rows = (d + kRowFloats - 1) / kRowFloats;
    PngImage img;
    img.width = kRowFloats;
    img.height = static_cast<std::uint32_t>(rows);
    img.channels = 4;
    img.pixels.assign(static_cast<std::size_t>(kRowFloats) * 4 * static_cast<std::size_t>(rows), 0);
    for (int i = 0; i < d; ++i) {
        const float f = static_cast<float>(latent[i]);
        std::memcpy(&img.pixels[static_cast<std::size_t>(i) * 4], &f, 4);
    }
    img.text[kLatentMarkerKey] = kLatentMarkerValue;
    img.text["fairgen.latent.dim"] = std::to_string(d);
    return encode_png(img);
}

std::optional<Vec> latent_from_png(const std::vector<unsigned char>& bytes) {
    if (!looks_like_png(bytes)) return std::nullopt;
    PngImage img;
    try {
        img = decode_png(bytes);
    } catch (const Error&) {
        return std::nullopt;
    }
    auto it = img.text.find(kLatentMarkerKey);
    if (it == img.text.end() || it->second != kLatentMarkerValue || img.channels != 4) {
        return std::nullopt;
    }
    int d = 0;
    try {
        d = std::stoi(img.text.at("fairgen.latent.dim"));
    } catch (...) {
        return std::nullopt;
    }
    if (d <= 0 || static_cast<std::size_t>(d) * 4 > img.pixels.size()) return std::nullopt;
    Vec latent(d);
    for (int i = 0; i < d; ++i) {
        float f;
        std::memcpy(&f, &img.pixels[static_cast<std::size_t>(i) * 4], 4);
        latent[i] = static_cast<double>(f);
    }
    return latent;
}

std::vector<unsigned char> read_file_bytes(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw IngestionError("cannot read file: " + file.string());
    std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                     std::istreambuf_iterator<char>());
    return bytes;
}

void write_file_bytes(const std::filesystem::path& file, const std::vector<unsigned char>& bytes) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw IngestionError("cannot write file: " + file.string());
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IngestionError("short write: " + file.string());
}

}  // namespace fairgen
