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

#ifndef DECOR_PARALLEL_HPP
#define DECOR_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace decor {

/// Runs fn(0), ..., fn(count-1) on up to `threads` worker threads.
/// Each index must be independent of the others; results identical to the
/// serial loop are the caller's responsibility (write to disjoint slots).
/// threads <= 1 runs the plain serial loop. The first exception thrown by
/// any worker is rethrown after all workers join.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)> &fn);

} // namespace decor

#endif // DECOR_PARALLEL_HPP
