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

#ifndef DECOR_TYPES_HPP
#define DECOR_TYPES_HPP

#include <cstdint>

#include "decor/numeric.hpp"
#include "decor/rng.hpp"

namespace decor {

/// Tolerance for the |s_k| = 1 construction check.
inline constexpr double kUnitModulusTol = 1e-12;

/// Hermitian symmetry tolerance for type invariants.
inline constexpr double kHermitianTol = 1e-12;

/// Magnitudes at or below this are treated as zero by the phase projection;
/// the projected entry is then 1 (phase 0) so runs stay reproducible. Any
/// unit value is optimal for the nearest-vector problem at such entries.
inline constexpr double kZeroMagnitudeFloor = 1e-300;

/// Entrywise u_k / |u_k| with the zero-magnitude tie-break above.
CVec unit_modulus_projection(const CVec &u);

/// Transmit sequence: every entry has modulus 1, length >= 2.
/// Length 1 is rejected because the clutter sum in the design criterion
/// would be empty.
class UnimodularCode {
  public:
    /// Validates modulus and length; throws DomainError on violation.
    explicit UnimodularCode(CVec entries);

    static UnimodularCode all_ones(Eigen::Index n);
    static UnimodularCode from_phases(const RVec &phases);
    static UnimodularCode random_phases(Eigen::Index n, Rng &rng);

    const CVec &vec() const { return entries_; }
    Eigen::Index size() const { return entries_.size(); }

  private:
    CVec entries_;
};

/// Reflectivities of the range cell under test and its 2N-2 neighbours,
/// stored as [a_0, a_1, ..., a_{N-1}, a_{-N+1}, ..., a_{-1}].
struct ScatteringProfile {
    CVec alpha;

    cxd alpha0() const { return alpha(0); }

    /// Storage index of a_k for k in [-(N-1), N-1].
    static Eigen::Index index_of(Eigen::Index k, Eigen::Index n) { return k >= 0 ? k : 2 * n - 1 + k; }
};

/// Simulated range-cell environment parameters.
struct EnvironmentConfig {
    Eigen::Index n = 10;
    double clutter_power = 1.0;   // per adjacent cell
    double target_power = 1.0;    // variance of a_0
    CMat noise_covariance;        // Hermitian PSD, N x N
    std::uint64_t seed = 1;

    static EnvironmentConfig identity_noise(Eigen::Index n, double clutter_power = 1.0, double target_power = 1.0,
                                            std::uint64_t seed = 1);

    /// Throws DomainError if the covariance is not Hermitian PSD (within
    /// tolerance) or a power is negative.
    void validate() const;
};

/// One simulated echo together with the profile that produced it.
struct ReceivedSignal {
    CVec y;
    ScatteringProfile truth;
};

} // namespace decor

#endif // DECOR_TYPES_HPP
