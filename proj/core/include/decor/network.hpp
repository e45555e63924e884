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
//
// The unfolded network: L layers, each applying one power-method-like
// iteration z -> S(chi_i z) with its own Hermitian positive-definite weight
// matrix. With all layers tied to one matrix the network reproduces L plain
// PMLI iterations bit for bit.

#ifndef DECOR_NETWORK_HPP
#define DECOR_NETWORK_HPP

#include <vector>

#include "decor/types.hpp"

namespace decor {

/// Ordered per-layer weight matrices. Immutable once built.
class DecorParams {
  public:
    /// Full validation: every layer Hermitian within 1e-12 and positive
    /// definite (min eigenvalue > 0 and >= 1e-12 * frobenius norm).
    explicit DecorParams(std::vector<CMat> layers);

    /// All layers set to the identity.
    static DecorParams identity(Eigen::Index n, int depth);

    /// Skips the O(N^3) definiteness check; for callers that keep layers
    /// positive definite by construction (PD start plus PSD increments).
    /// Shape and Hermitian symmetry are still verified.
    static DecorParams trusted(std::vector<CMat> layers);

    Eigen::Index n() const { return n_; }
    int depth() const { return static_cast<int>(layers_.size()); }
    const CMat &layer(int i) const { return layers_[static_cast<std::size_t>(i)]; }
    const std::vector<CMat> &layers() const { return layers_; }

  private:
    DecorParams(std::vector<CMat> layers, bool check_definite);

    std::vector<CMat> layers_;
    Eigen::Index n_ = 0;
};

/// The network activation: entrywise unit-modulus projection, same
/// zero-magnitude tie-break as the PMLI step.
CVec activation(const CVec &u);

/// Runs the L-layer composition on s0. Deterministic; output of layer i is
/// activation(chi_i * input_i). Throws DomainError on dimension mismatch.
UnimodularCode forward(const DecorParams &params, const UnimodularCode &s0);

} // namespace decor

#endif // DECOR_NETWORK_HPP
