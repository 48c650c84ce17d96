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

#ifndef OCUSIM_RNG_HPP
#define OCUSIM_RNG_HPP

#include <cstdint>
#include <random>

#include "ocusim/matrix.hpp"

namespace ocusim {

// All randomness flows through explicit seeds; there is no global RNG state.
// mt19937_64 has a standard-mandated output sequence and the Gaussian draw
// is an explicit Box-Muller, so samples are reproducible across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  /// Standard normal (Box-Muller, cached spare).
  double normal();
  /// Complex standard normal: (normal + i·normal)/√2.
  cxd cnormal();
  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound);

  /// Stream derivation for per-trial/per-member seeds (splitmix64 mix).
  static std::uint64_t derive(std::uint64_t master, std::uint64_t stream);

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Haar-random unitary: QR of a complex Gaussian matrix with the R diagonal
/// made real positive (two-pass modified Gram-Schmidt).
Mat sample_unitary(std::size_t dim, std::uint64_t seed);
Mat sample_unitary(std::size_t dim, Rng& rng);

/// Haar-random pure state amplitudes.
CVec sample_pure_vec(std::size_t dim, std::uint64_t seed);
CVec sample_pure_vec(std::size_t dim, Rng& rng);

/// Induced-measure random density matrix: G·G†/tr for a dim×rank Gaussian G.
/// rank = 1 gives Haar-random pure states.
Mat sample_density(std::size_t dim, std::size_t rank, std::uint64_t seed);
Mat sample_density(std::size_t dim, std::size_t rank, Rng& rng);

/// First `count` columns of a Haar unitary: a random orthonormal family.
Mat sample_orthonormal_family(std::size_t dim, std::size_t count, Rng& rng);

}  // namespace ocusim

#endif  // OCUSIM_RNG_HPP
