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

#ifndef DECOR_SIGNAL_MODEL_HPP
#define DECOR_SIGNAL_MODEL_HPP

#include "decor/types.hpp"

namespace decor {

/// The N x (2N-1) code matrix whose columns are the delayed/advanced copies
/// of the transmit code, one per scattering coefficient: column j (0-based,
/// j < N) is s shifted down by j with zeros on top; column N-1+m
/// (1 <= m <= N-1) is s shifted up by N-m. Multiplying it onto a
/// ScatteringProfile's alpha yields the clutter-free echo.
CMat build_code_matrix(const UnimodularCode &s);

/// Draws an independent circular complex Gaussian reflectivity per cell:
/// a_0 with variance target_power, every other cell with variance
/// clutter_power. Entries are drawn in storage order.
ScatteringProfile sample_profile(const EnvironmentConfig &cfg, Rng &rng);

/// Cached factor of a Hermitian PSD noise covariance, for drawing
/// CN(0, Gamma) vectors. Diagonal covariances (the common case) take the
/// entrywise square-root path; dense ones go through an eigendecomposition
/// with negative eigenvalues clamped to zero. Either path consumes exactly
/// N complex Gaussian draws per noise vector.
class NoiseFactor {
  public:
    explicit NoiseFactor(const CMat &covariance);

    CVec draw(Rng &rng) const;
    Eigen::Index n() const { return n_; }

  private:
    Eigen::Index n_;
    bool diagonal_;
    RVec diag_scale_; // sqrt of the diagonal, diagonal path
    CMat dense_factor_;
};

/// y = A^H alpha + noise. The truth profile is carried along for scoring.
ReceivedSignal receive(const UnimodularCode &s, const ScatteringProfile &profile, const EnvironmentConfig &cfg,
                       Rng &rng);

/// Hot-loop variant with a precomputed noise factor.
ReceivedSignal receive(const UnimodularCode &s, const ScatteringProfile &profile, const NoiseFactor &noise, Rng &rng);

} // namespace decor

#endif // DECOR_SIGNAL_MODEL_HPP
