// Copyright (C) 2026 The fairgen authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "fairgen/common.hpp"
#include "fairgen/hashing.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string_view>

namespace fairgen {

// Deterministic RNG built on splitmix64. The standard library distributions
// are implementation-defined, so everything that must be bit-reproducible
// across toolchains draws from this instead.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 bits of precision.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Unbiased integer in [0, n) via rejection.
    std::uint64_t uniform_below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % n;
    }

    // Standard normal via Box-Muller (single draw per call).
    double normal() {
        const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * std::numbers::pi * u2);
    }

    Vec normal_vector(int d, double sigma = 1.0) {
        Vec v(d);
        for (int i = 0; i < d; ++i) v[i] = sigma * normal();
        return v;
    }

    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            const std::size_t j = uniform_below(i);
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::uint64_t state_;
};

// Labeled stream derivation: all randomness in a run fans out from one root
// seed through named sub-streams, so experiments compose reproducibly.
inline SeededRng derive_rng(std::uint64_t root_seed, std::string_view label) {
    return SeededRng(hash_mix(root_seed, fnv1a64(label)));
}

}  // namespace fairgen
