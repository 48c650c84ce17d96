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

#ifndef OCUSIM_HILBERT_HPP
#define OCUSIM_HILBERT_HPP

#include <cstdint>

#include "ocusim/matrix.hpp"

namespace ocusim {

// Subsystem labels of the fixed S ⊗ A ⊗ E factor ordering. Bit positions
// follow the ordering, so a tag mask can be checked for order-compatible
// composition.
enum class Factor : std::uint8_t { S = 0, A = 1, E = 2 };

struct SpaceTag {
  std::uint8_t mask = 0;  // 0 = untagged, composes freely

  static SpaceTag none() { return {0}; }
  static SpaceTag of(Factor f) { return {static_cast<std::uint8_t>(1u << static_cast<int>(f))}; }
  static SpaceTag sae() { return {0b111}; }
  static SpaceTag se() { return {0b101}; }

  bool tagged() const { return mask != 0; }
  bool contains(Factor f) const { return (mask >> static_cast<int>(f)) & 1u; }
};

/// Composition tag for a ⊗ b. Throws DimensionError when both operands are
/// tagged and b does not lie strictly to the right of a in the S, A, E order.
SpaceTag compose_tags(SpaceTag a, SpaceTag b);

/// Dimensions of the S ⊗ A ⊗ E decomposition. Flat index convention:
/// slowest-varying = S, fastest = E, i.e. flat(i, j, k) = (i·d_A + j)·d_E + k.
/// This is the single indexing routine shared by every module.
struct HilbertFactorization {
  std::size_t d_s = 1;
  std::size_t d_a = 1;
  std::size_t d_e = 1;

  HilbertFactorization() = default;
  HilbertFactorization(std::size_t ds, std::size_t da, std::size_t de);

  std::size_t total() const { return d_s * d_a * d_e; }
  std::size_t dim(Factor f) const;
  std::size_t flat(std::size_t i, std::size_t j, std::size_t k) const {
    return (i * d_a + j) * d_e + k;
  }

  /// Measurement scenarios additionally need one ready state plus one pointer
  /// state per outcome.
  bool supports_apparatus() const { return d_a >= d_s + 1; }
};

/// Reduced matrix over the kept factors (order preserved), tracing out the
/// rest. keep_mask uses SpaceTag bit positions and must be nonempty.
Mat partial_trace(const Mat& rho, const HilbertFactorization& fact,
                  SpaceTag keep);

/// Lift an operator acting on one factor to the full S ⊗ A ⊗ E space.
Mat lift_operator(const Mat& op, const HilbertFactorization& fact, Factor where);

}  // namespace ocusim

#endif  // OCUSIM_HILBERT_HPP
