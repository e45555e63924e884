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

#include "decor/types.hpp"

#include <cmath>
#include <string>

#include "decor/errors.hpp"

namespace decor {

CVec unit_modulus_projection(const CVec &u) {
    CVec out(u.size());
    for (Eigen::Index k = 0; k < u.size(); ++k) {
        const double mag = std::abs(u(k));
        out(k) = mag <= kZeroMagnitudeFloor ? cxd(1.0, 0.0) : u(k) / mag;
    }
    return out;
}

UnimodularCode::UnimodularCode(CVec entries) : entries_(std::move(entries)) {
    if (entries_.size() < 2)
        throw DomainError("unimodular code needs length >= 2, got " + std::to_string(entries_.size()));
    for (Eigen::Index k = 0; k < entries_.size(); ++k) {
        const double dev = std::abs(std::abs(entries_(k)) - 1.0);
        if (!(dev <= kUnitModulusTol))
            throw DomainError("entry " + std::to_string(k) + " deviates from unit modulus by " + std::to_string(dev));
    }
}

UnimodularCode UnimodularCode::all_ones(Eigen::Index n) { return UnimodularCode(CVec::Ones(n)); }

UnimodularCode UnimodularCode::from_phases(const RVec &phases) {
    CVec entries(phases.size());
    for (Eigen::Index k = 0; k < phases.size(); ++k)
        entries(k) = std::polar(1.0, phases(k));
    return UnimodularCode(std::move(entries));
}

UnimodularCode UnimodularCode::random_phases(Eigen::Index n, Rng &rng) {
    CVec entries(n);
    for (Eigen::Index k = 0; k < n; ++k)
        entries(k) = std::polar(1.0, rng.uniform_angle());
    return UnimodularCode(std::move(entries));
}

EnvironmentConfig EnvironmentConfig::identity_noise(Eigen::Index n, double clutter_power, double target_power,
                                                    std::uint64_t seed) {
    EnvironmentConfig cfg;
    cfg.n = n;
    cfg.clutter_power = clutter_power;
    cfg.target_power = target_power;
    cfg.noise_covariance = CMat::Identity(n, n);
    cfg.seed = seed;
    return cfg;
}

void EnvironmentConfig::validate() const {
    if (n < 2)
        throw DomainError("environment needs n >= 2, got " + std::to_string(n));
    if (clutter_power < 0.0 || target_power < 0.0)
        throw DomainError("clutter_power and target_power must be nonnegative");
    if (noise_covariance.rows() != n || noise_covariance.cols() != n)
        throw DomainError("noise covariance must be " + std::to_string(n) + "x" + std::to_string(n));
    if (!is_hermitian(noise_covariance, kHermitianTol))
        throw DomainError("noise covariance is not Hermitian within 1e-12");
    if (hermitian_min_eigenvalue(noise_covariance) < -1e-10)
        throw DomainError("noise covariance has an eigenvalue below -1e-10");
}

} // namespace decor
