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

#include "ocusim/rng.hpp"

#include <cmath>
#include <limits>

namespace ocusim {

double Rng::uniform() {
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double mag = std::sqrt(-2.0 * std::log(u1));
  const double ang = 2.0 * M_PI * u2;
  spare_ = mag * std::sin(ang);
  have_spare_ = true;
  return mag * std::cos(ang);
}

cxd Rng::cnormal() {
  const double re = normal();
  const double im = normal();
  return cxd{re * M_SQRT1_2, im * M_SQRT1_2};
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw DimensionError("Rng::below(0)");
  // Rejection sampling to avoid modulo bias.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = gen_();
  while (x >= limit) x = gen_();
  return x % bound;
}

std::uint64_t Rng::derive(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

// Two-pass modified Gram-Schmidt on the columns of g, in place.
// Column norms end up real positive, matching a QR decomposition with
// positive R diagonal, so Gaussian input yields Haar-distributed output.
void orthonormalize_columns(Mat& g) {
  const std::size_t dim = g.rows();
  const std::size_t count = g.cols();
  for (std::size_t j = 0; j < count; ++j) {
    CVec v = g.col(j);
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t p = 0; p < j; ++p) {
        const CVec prev = g.col(p);
        const cxd overlap = dot(prev, v);
        for (std::size_t i = 0; i < dim; ++i) v[i] -= overlap * prev[i];
      }
    }
    const double n = norm(v);
    if (n < 1e-12) throw NumericalError("orthonormalization: dependent columns");
    for (auto& x : v) x /= n;
    g.set_col(j, v);
  }
}

}  // namespace

Mat sample_unitary(std::size_t dim, Rng& rng) {
  Mat g(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) g(i, j) = rng.cnormal();
  }
  orthonormalize_columns(g);
  return g;
}

Mat sample_unitary(std::size_t dim, std::uint64_t seed) {
  Rng rng(seed);
  return sample_unitary(dim, rng);
}

CVec sample_pure_vec(std::size_t dim, Rng& rng) {
  CVec v(dim);
  for (auto& x : v) x = rng.cnormal();
  normalize(v);
  return v;
}

CVec sample_pure_vec(std::size_t dim, std::uint64_t seed) {
  Rng rng(seed);
  return sample_pure_vec(dim, rng);
}

Mat sample_density(std::size_t dim, std::size_t rank, Rng& rng) {
  if (rank < 1 || rank > dim) throw DimensionError("sample_density: rank out of range");
  Mat g(dim, rank);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < rank; ++j) g(i, j) = rng.cnormal();
  }
  Mat rho = g.mul_dagger(g);
  const double tr = rho.trace().real();
  rho *= (1.0 / tr);
  rho.hermitize();
  return rho;
}

Mat sample_density(std::size_t dim, std::size_t rank, std::uint64_t seed) {
  Rng rng(seed);
  return sample_density(dim, rank, rng);
}

Mat sample_orthonormal_family(std::size_t dim, std::size_t count, Rng& rng) {
  if (count > dim) throw DimensionError("orthonormal family larger than dimension");
  Mat g(dim, count);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < count; ++j) g(i, j) = rng.cnormal();
  }
  orthonormalize_columns(g);
  return g;
}

}  // namespace ocusim
