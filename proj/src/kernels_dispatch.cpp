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

#include <atomic>
#include <cstdlib>

#include "ocusim/kernels.hpp"

namespace ocusim::kern {

namespace {

bool cpu_has_avx2_fma() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const Ops* pick_default() {
  const char* env = std::getenv("OCUSIM_KERNELS");
  if (env != nullptr) {
    const std::string want(env);
    if (want == "scalar") return &scalar_ops();
    if (want == "avx2" && avx2_ops() != nullptr && cpu_has_avx2_fma()) {
      return avx2_ops();
    }
    // Unknown or unavailable request falls through to auto selection.
  }
  if (avx2_ops() != nullptr && cpu_has_avx2_fma()) return avx2_ops();
  return &scalar_ops();
}

std::atomic<const Ops*> g_active{nullptr};

}  // namespace

const Ops& active() {
  const Ops* ops = g_active.load(std::memory_order_acquire);
  if (ops == nullptr) {
    ops = pick_default();
    const Ops* expected = nullptr;
    g_active.compare_exchange_strong(expected, ops, std::memory_order_acq_rel);
    ops = g_active.load(std::memory_order_acquire);
  }
  return *ops;
}

void force_impl(const std::string& name) {
  if (name == "auto") {
    g_active.store(pick_default(), std::memory_order_release);
    return;
  }
  if (name == "scalar") {
    g_active.store(&scalar_ops(), std::memory_order_release);
    return;
  }
  if (name == "avx2") {
    if (avx2_ops() == nullptr || !cpu_has_avx2_fma()) {
      throw ValidationError("avx2 kernels unavailable on this machine");
    }
    g_active.store(avx2_ops(), std::memory_order_release);
    return;
  }
  throw ValidationError("unknown kernel implementation: " + name);
}

}  // namespace ocusim::kern
