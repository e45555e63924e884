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
// Model-based waveform designer: the ratio criterion is driven upward by a
// fractional-programming outer loop; each outer step maximizes the surrogate
// s^H (A - f_star B) s over unimodular s with power-method-like iterations
// (PMLI) on the diagonally loaded surrogate matrix.

#ifndef DECOR_UQP_HPP
#define DECOR_UQP_HPP

#include <vector>

#include "decor/objective.hpp"
#include "decor/types.hpp"

namespace decor {

/// Relative objective-change tolerance at which PMLI stops early.
inline constexpr double kPmliTol = 1e-8;

/// Inner PMLI budget per outer step; mirrors the depth budget of the
/// unfolded network.
inline constexpr int kDefaultInnerIters = 30;

/// Outer fractional-programming steps for the designer.
inline constexpr int kDefaultOuterIters = 20;

/// Random restarts when benchmarking the designer.
inline constexpr int kDefaultRestarts = 20;

/// Loading pad scale: the pad added beyond -lambda_min is
/// kLoadingPadScale * max(1, frobenius(chi_tilde)). Strictly positive so
/// PMLI monotonicity survives eigenvalue-estimate error.
inline constexpr double kLoadingPadScale = 1e-8;

/// Diagonally loaded UQP matrix chi = chi_tilde + loading * I, positive
/// semidefinite by construction.
struct UqpMatrix {
    CMat chi;
    double loading = 0.0;

    /// Throws DomainError unless chi is Hermitian within 1e-12 with min
    /// eigenvalue >= -1e-8.
    void validate() const;
};

/// Smallest eigenvalue of a Hermitian matrix. Input must be Hermitian
/// within 1e-10, else DomainError.
double min_eigenvalue(const CMat &h);

/// chi_tilde = A - f_star * B, loaded with
/// lambda = max(0, -lambda_min(chi_tilde)) + pad.
UqpMatrix build_chi(const QuadraticPair &pair, double f_star);

/// One power-method-like iteration: the unit-modulus vector nearest to
/// chi * s, i.e. the entrywise phase of chi * s. Never decreases s^H chi s
/// for PSD chi.
UnimodularCode pmli_step(const UqpMatrix &chi, const UnimodularCode &s);

struct PmliResult {
    UnimodularCode code;
    int iterations = 0;
    std::vector<double> objective_trace; // s^H chi s per iterate, non-decreasing
};

/// Iterates pmli_step until the relative objective change drops below tol
/// (strict comparison, so tol = 0 always runs max_iters steps) or max_iters
/// is reached.
PmliResult pmli_solve(const UqpMatrix &chi, const UnimodularCode &s0, int max_iters, double tol = kPmliTol);

struct DesignResult {
    UnimodularCode code;
    std::vector<double> objective_trace; // f per outer step, front() is f(s0)
};

/// Fractional-programming design against a fixed observation y. Each outer
/// step rebuilds the loaded surrogate at the current ratio value and runs
/// up to inner_iters PMLI steps; the surrogate guarantees the ratio cannot
/// decrease. Throws DegenerateDenominatorError if f(s0) is undefined.
DesignResult dinkelbach_design(const CVec &y, const UnimodularCode &s0, int outer_iters = kDefaultOuterIters,
                               int inner_iters = kDefaultInnerIters);

/// Best of `restarts` runs from random-phase starts (the observation y is
/// shared). Candidates whose start is degenerate are skipped; throws if all
/// starts are degenerate.
DesignResult dinkelbach_design_multistart(const CVec &y, int restarts, int outer_iters, int inner_iters, Rng &rng);

} // namespace decor

#endif // DECOR_UQP_HPP
