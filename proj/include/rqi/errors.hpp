// Copyright 2026 The rqi-anyons Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file errors.hpp
 * Exception types raised by the library.
 */
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rqi {

/// Matrix dimensions do not agree, or a product would exceed the dense cap.
class DimensionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// An iterative solver hit its iteration cap.
class NonConvergenceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Spectrum has an eigenvalue below -tol where a density matrix was expected.
class NotPsdError : public std::domain_error {
  public:
    NotPsdError(const std::string &what, double min_eigenvalue)
        : std::domain_error(what), min_eigenvalue_(min_eigenvalue) {}
    [[nodiscard]] double min_eigenvalue() const noexcept { return min_eigenvalue_; }

  private:
    double min_eigenvalue_;
};

/// The bosonic series needs more blocks than the configured cap allows.
class TruncationError : public std::runtime_error {
  public:
    TruncationError(const std::string &what, std::size_t required, std::size_t cap)
        : std::runtime_error(what), required_(required), cap_(cap) {}
    /// Smallest n_max meeting the tail bound (0 when no finite n_max exists).
    [[nodiscard]] std::size_t required() const noexcept { return required_; }
    [[nodiscard]] std::size_t cap() const noexcept { return cap_; }

  private:
    std::size_t required_;
    std::size_t cap_;
};

} // namespace rqi
