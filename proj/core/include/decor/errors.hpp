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

#ifndef DECOR_ERRORS_HPP
#define DECOR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace decor {

/// Base class for all errors thrown by the library.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

/// Invalid argument, dimension mismatch, or violated type invariant.
class DomainError : public Error {
  public:
    explicit DomainError(const std::string &msg) : Error(msg) {}
};

/// Shift offset outside the valid range |k| <= n-1.
class InvalidOffsetError : public DomainError {
  public:
    InvalidOffsetError(long long k, long long n)
        : DomainError("shift offset k=" + std::to_string(k) + " out of range for n=" + std::to_string(n)) {}
};

/// The SINR denominator fell below the floor; the criterion is undefined.
class DegenerateDenominatorError : public Error {
  public:
    explicit DegenerateDenominatorError(double value)
        : Error("SINR denominator " + std::to_string(value) + " is at or below the degeneracy floor") {}
};

/// Configuration file problem. Carries the offending key and line when known.
class ConfigError : public Error {
  public:
    explicit ConfigError(const std::string &msg) : Error(msg) {}
    ConfigError(const std::string &key, int line, const std::string &msg)
        : Error("config key '" + key + "' (line " + std::to_string(line) + "): " + msg), key_(key), line_(line) {}

    const std::string &key() const { return key_; }
    int line() const { return line_; }

  private:
    std::string key_;
    int line_ = 0;
};

/// Filesystem failure; the message always names the path.
class IoError : public Error {
  public:
    IoError(const std::string &path, const std::string &msg) : Error(msg + ": " + path), path_(path) {}
    const std::string &path() const { return path_; }

  private:
    std::string path_;
};

} // namespace decor

#endif // DECOR_ERRORS_HPP
