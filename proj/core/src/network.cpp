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

#include "decor/network.hpp"

#include <string>

#include "decor/errors.hpp"

namespace decor {

DecorParams::DecorParams(std::vector<CMat> layers, bool check_definite) : layers_(std::move(layers)) {
    if (layers_.empty())
        throw DomainError("network needs depth >= 1");
    n_ = layers_.front().rows();
    for (std::size_t i = 0; i < layers_.size(); ++i) {
        const CMat &chi = layers_[i];
        if (chi.rows() != n_ || chi.cols() != n_)
            throw DomainError("layer " + std::to_string(i) + " is not " + std::to_string(n_) + "x" +
                              std::to_string(n_));
        if (!is_hermitian(chi, kHermitianTol))
            throw DomainError("layer " + std::to_string(i) + " is not Hermitian within 1e-12");
        if (check_definite) {
            const double min_eig = hermitian_min_eigenvalue(chi);
            if (!(min_eig > 0.0) || min_eig < 1e-12 * chi.norm())
                throw DomainError("layer " + std::to_string(i) + " is not positive definite");
        }
    }
}

DecorParams::DecorParams(std::vector<CMat> layers) : DecorParams(std::move(layers), true) {}

DecorParams DecorParams::identity(Eigen::Index n, int depth) {
    if (depth < 1)
        throw DomainError("network needs depth >= 1");
    std::vector<CMat> layers(static_cast<std::size_t>(depth), CMat::Identity(n, n));
    return DecorParams(std::move(layers), false);
}

DecorParams DecorParams::trusted(std::vector<CMat> layers) { return DecorParams(std::move(layers), false); }

CVec activation(const CVec &u) { return unit_modulus_projection(u); }

UnimodularCode forward(const DecorParams &params, const UnimodularCode &s0) {
    if (s0.size() != params.n())
        throw DomainError("input length " + std::to_string(s0.size()) + " does not match network width " +
                          std::to_string(params.n()));
    CVec z = s0.vec();
    for (const CMat &chi : params.layers())
        z = unit_modulus_projection(chi * z);
    return UnimodularCode(std::move(z));
}

} // namespace decor
