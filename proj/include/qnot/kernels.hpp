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

// Complex double-precision vector kernels used by the dense linear algebra
// and the simulator. Each kernel has a scalar reference implementation and an
// AVX2+FMA variant; the active table is picked once at startup from CPUID and
// can be overridden with set_kernel_isa() or the QNOT_SIMD environment
// variable ("scalar" or "avx2").

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace qnot {

using cplx = std::complex<double>;

namespace kernels {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa) noexcept;

struct Table {
  // sum_k conj(a[k]) * b[k]
  cplx (*dotc)(const cplx* a, const cplx* b, std::size_t n);
  // sum_k a[k] * b[k]
  cplx (*dotu)(const cplx* a, const cplx* b, std::size_t n);
  // y += alpha * x
  void (*axpy)(cplx alpha, const cplx* x, cplx* y, std::size_t n);
  // sum_k |a[k]|^2
  double (*norm2)(const cplx* a, std::size_t n);
  // y = A x, A row-major rows x cols
  void (*gemv)(const cplx* a, std::size_t rows, std::size_t cols, const cplx* x, cplx* y);
};

const Table& scalar_table() noexcept;
// Returns nullptr when the AVX2 variant was not compiled in.
const Table* avx2_table() noexcept;

bool cpu_has_avx2() noexcept;

Isa active_isa() noexcept;
// Returns false (and leaves the selection unchanged) if the ISA is unavailable.
bool set_kernel_isa(Isa isa) noexcept;
const Table& active() noexcept;

}  // namespace kernels

inline cplx dotc(std::span<const cplx> a, std::span<const cplx> b) {
  return kernels::active().dotc(a.data(), b.data(), a.size());
}
inline cplx dotu(std::span<const cplx> a, std::span<const cplx> b) {
  return kernels::active().dotu(a.data(), b.data(), a.size());
}
inline void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y) {
  kernels::active().axpy(alpha, x.data(), y.data(), x.size());
}
inline double norm2(std::span<const cplx> a) {
  return kernels::active().norm2(a.data(), a.size());
}

}  // namespace qnot
