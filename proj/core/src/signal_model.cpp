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

#include "decor/signal_model.hpp"

#include <cmath>
#include <string>

#include "decor/errors.hpp"

namespace decor {

CMat build_code_matrix(const UnimodularCode &s) {
    const Eigen::Index n = s.size();
    const CVec &code = s.vec();
    CMat a = CMat::Zero(n, 2 * n - 1);

    // Delay columns: alpha_j sees the code delayed by j samples.
    for (Eigen::Index j = 0; j < n; ++j)
        a.col(j).tail(n - j) = code.head(n - j);

    // Advance columns: alpha_{-k} (k = N-m) sees the code advanced by k,
    // i.e. only its tail s_{k+1..N} arrives inside the window.
    for (Eigen::Index m = 1; m < n; ++m) {
        const Eigen::Index k = n - m;
        a.col(n - 1 + m).head(n - k) = code.tail(n - k);
    }
    return a;
}

ScatteringProfile sample_profile(const EnvironmentConfig &cfg, Rng &rng) {
    const Eigen::Index len = 2 * cfg.n - 1;
    CVec alpha(len);
    alpha(0) = rng.complex_gaussian(cfg.target_power);
    for (Eigen::Index i = 1; i < len; ++i)
        alpha(i) = rng.complex_gaussian(cfg.clutter_power);
    return ScatteringProfile{std::move(alpha)};
}

NoiseFactor::NoiseFactor(const CMat &covariance) : n_(covariance.rows()) {
    if (covariance.rows() != covariance.cols())
        throw DomainError("noise covariance must be square");

    double offdiag = 0.0;
    for (Eigen::Index i = 0; i < n_; ++i)
        for (Eigen::Index j = 0; j < n_; ++j)
            if (i != j)
                offdiag = std::max(offdiag, std::abs(covariance(i, j)));

    diagonal_ = offdiag == 0.0;
    if (diagonal_) {
        diag_scale_ = RVec(n_);
        for (Eigen::Index i = 0; i < n_; ++i) {
            const double v = covariance(i, i).real();
            diag_scale_(i) = v > 0.0 ? std::sqrt(v) : 0.0;
        }
    } else {
        Eigen::SelfAdjointEigenSolver<CMat> solver(covariance);
        RVec roots = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
        dense_factor_ = solver.eigenvectors() * roots.asDiagonal();
    }
}

CVec NoiseFactor::draw(Rng &rng) const {
    CVec w(n_);
    for (Eigen::Index i = 0; i < n_; ++i)
        w(i) = rng.complex_gaussian(1.0);
    if (diagonal_)
        return diag_scale_.cast<cxd>().cwiseProduct(w);
    return dense_factor_ * w;
}

ReceivedSignal receive(const UnimodularCode &s, const ScatteringProfile &profile, const EnvironmentConfig &cfg,
                       Rng &rng) {
    return receive(s, profile, NoiseFactor(cfg.noise_covariance), rng);
}

ReceivedSignal receive(const UnimodularCode &s, const ScatteringProfile &profile, const NoiseFactor &noise, Rng &rng) {
    const Eigen::Index n = s.size();
    if (profile.alpha.size() != 2 * n - 1)
        throw DomainError("profile length " + std::to_string(profile.alpha.size()) + " does not match code length " +
                          std::to_string(n));
    if (noise.n() != n)
        throw DomainError("noise covariance dimension does not match code length");

    CVec y = build_code_matrix(s) * profile.alpha + noise.draw(rng);
    return ReceivedSignal{std::move(y), profile};
}

} // namespace decor
