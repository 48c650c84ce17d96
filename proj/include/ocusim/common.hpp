// Copyright 2026 The ocusim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OCUSIM_COMMON_HPP
#define OCUSIM_COMMON_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace ocusim {

using cxd = std::complex<double>;

inline constexpr const char* kVersion = "0.1.0";

/// Shapes or factor orderings that cannot be combined.
class DimensionError : public std::runtime_error {
 public:
  explicit DimensionError(const std::string& what) : std::runtime_error(what) {}
};

/// A state, projector or unitary failed its structural invariants.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A numerically well-posed operation could not complete (degenerate
/// projection, calibration non-convergence, failed recovery, ...).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// A scenario whose dimensions cannot support the requested construction.
class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ocusim

#endif  // OCUSIM_COMMON_HPP
