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

#ifndef OCUSIM_KERNELS_HPP
#define OCUSIM_KERNELS_HPP

#include <cstddef>
#include <string>

#include "ocusim/common.hpp"

namespace ocusim::kern {

// Dense complex kernels behind the matrix layer. All matrices are row-major
// and contiguous (leading dimension == column count). Two variants exist:
// a scalar reference implementation and an AVX2+FMA implementation selected
// at runtime when the CPU supports it. The variants are equivalence-tested
// against each other; results may differ by FMA rounding only.
struct Ops {
  const char* name;

  // C = A(m×k) · B(k×n), or C += A·B when accumulate is set.
  void (*gemm_nn)(std::size_t m, std::size_t k, std::size_t n, const cxd* a,
                  const cxd* b, cxd* c, bool accumulate);

  // C = A(m×k) · B(n×k)†, i.e. C[i][j] = Σ_t A[i][t]·conj(B[j][t]),
  // or C += ... when accumulate is set.
  void (*gemm_nh)(std::size_t m, std::size_t k, std::size_t n, const cxd* a,
                  const cxd* b, cxd* c, bool accumulate);
};

const Ops& scalar_ops();

// Null when the binary was built without AVX2 support.
const Ops* avx2_ops();

// The runtime-selected implementation. Honors OCUSIM_KERNELS=scalar|avx2
// from the environment; otherwise picks AVX2 when the CPU has avx2+fma.
const Ops& active();

// Test hook: force an implementation by name ("scalar", "avx2", "auto").
// Throws ValidationError for unknown or unavailable names.
void force_impl(const std::string& name);

}  // namespace ocusim::kern

#endif  // OCUSIM_KERNELS_HPP
