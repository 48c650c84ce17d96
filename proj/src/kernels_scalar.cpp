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

// Scalar reference kernels. These define the semantics the SIMD variants
// must reproduce; keep them simple enough to audit by eye.

#include <cstring>

#include "ocusim/kernels.hpp"

namespace ocusim::kern {

namespace {

void gemm_nn_scalar(std::size_t m, std::size_t k, std::size_t n, const cxd* a,
                    const cxd* b, cxd* c, bool accumulate) {
  if (!accumulate) {
    std::memset(static_cast<void*>(c), 0, m * n * sizeof(cxd));
  }
  for (std::size_t i = 0; i < m; ++i) {
    const cxd* arow = a + i * k;
    cxd* crow = c + i * n;
    for (std::size_t t = 0; t < k; ++t) {
      const cxd av = arow[t];
      const cxd* brow = b + t * n;
      for (std::size_t j = 0; j < n; ++j) {
        crow[j] += av * brow[j];
      }
    }
  }
}

void gemm_nh_scalar(std::size_t m, std::size_t k, std::size_t n, const cxd* a,
                    const cxd* b, cxd* c, bool accumulate) {
  for (std::size_t i = 0; i < m; ++i) {
    const cxd* arow = a + i * k;
    cxd* crow = c + i * n;
    for (std::size_t j = 0; j < n; ++j) {
      const cxd* brow = b + j * k;
      cxd acc{0.0, 0.0};
      for (std::size_t t = 0; t < k; ++t) {
        acc += arow[t] * std::conj(brow[t]);
      }
      if (accumulate) {
        crow[j] += acc;
      } else {
        crow[j] = acc;
      }
    }
  }
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops{"scalar", &gemm_nn_scalar, &gemm_nh_scalar};
  return ops;
}

}  // namespace ocusim::kern
