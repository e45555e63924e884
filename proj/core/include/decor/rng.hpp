// SPDX-License-Identifier: Apache-2.0
//
// decor: unimodular radar code design with an unfolded power-method network
// Copyright (C) 2026 The decor authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef DECOR_RNG_HPP
#define DECOR_RNG_HPP

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>

namespace decor {

/// Deterministic random source. All distributions are generated from raw
/// mt19937_64 output with fixed in-house transforms, so a given seed yields
/// the same draw sequence on every standard library implementation.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1), 53 usable bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform phase in [0, 2*pi).
    double uniform_angle();

    /// Circular complex Gaussian CN(0, variance): real and imaginary parts
    /// independent, each with variance variance/2. Consumes exactly two
    /// uniforms (one Box-Muller pair) per call.
    std::complex<double> complex_gaussian(double variance);

  private:
    std::mt19937_64 engine_;
};

/// splitmix64 finalizer; used as the mixing function for seed derivation.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// FNV-1a hash of a label, for folding stream names into seed derivations.
constexpr std::uint64_t tag64(std::string_view name) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : name) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Derives an independent stream seed from a base seed and a tuple of parts
/// (stream tags, epoch numbers, candidate/trial indices, ...). Two calls with
/// different parts give statistically independent streams; identical inputs
/// always give the same seed, so derived streams are stable under any
/// execution order of their consumers.
std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> parts);

} // namespace decor

#endif // DECOR_RNG_HPP
