// Copyright 2026 The qnot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <atomic>
#include <cstdlib>
#include <string_view>

#include "qnot/kernels.hpp"

namespace qnot::kernels {
namespace {

bool avx2_usable() noexcept { return avx2_table() != nullptr && cpu_has_avx2(); }

Isa initial_isa() noexcept {
  if (const char* env = std::getenv("QNOT_SIMD")) {
    if (std::string_view(env) == "scalar") return Isa::Scalar;
  }
  return avx2_usable() ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<Isa>& selection() noexcept {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

Isa active_isa() noexcept { return selection().load(std::memory_order_relaxed); }

bool set_kernel_isa(Isa isa) noexcept {
  if (isa == Isa::Avx2 && !avx2_usable()) return false;
  selection().store(isa, std::memory_order_relaxed);
  return true;
}

const Table& active() noexcept {
  if (active_isa() == Isa::Avx2) return *avx2_table();
  return scalar_table();
}

}  // namespace qnot::kernels
