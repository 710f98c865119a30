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

#include <cmath>
#include <vector>

#include "doctest.h"
#include "qnot/kernels.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace qnot;
using qnot::testing::Rng;

namespace {

// SIMD variants reorder sums and use FMA; compare with a relative tolerance.
bool close(cplx a, cplx b, double scale) { return std::abs(a - b) <= 1e-13 * (1.0 + scale); }

double sum_abs2(const CVector& a, const CVector& b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += std::abs(a[k]) * std::abs(b[k]);
  return s;
}

}  // namespace

TEST_SUITE("kernels") {
  TEST_CASE("scalar reference matches a naive loop") {
    Rng rng(1);
    const auto& t = kernels::scalar_table();
    for (std::size_t n : {0u, 1u, 2u, 3u, 7u, 16u}) {
      const CVector a = testing::gaussian_vector(rng, n);
      const CVector b = testing::gaussian_vector(rng, n);
      CHECK(close(t.dotc(a.data(), b.data(), n), testing::naive_dot(a, b), sum_abs2(a, b)));
      cplx u{};
      for (std::size_t k = 0; k < n; ++k) u += a[k] * b[k];
      CHECK(close(t.dotu(a.data(), b.data(), n), u, sum_abs2(a, b)));
    }
  }

  TEST_CASE("avx2 variants agree with the scalar reference") {
    const kernels::Table* avx = kernels::avx2_table();
    if (avx == nullptr || !kernels::cpu_has_avx2()) {
      MESSAGE("AVX2 kernels unavailable on this host; skipping");
      return;
    }
    const auto& ref = kernels::scalar_table();
    Rng rng(2);
    for (std::size_t n = 0; n <= 67; ++n) {
      CAPTURE(n);
      const CVector a = testing::gaussian_vector(rng, n);
      const CVector b = testing::gaussian_vector(rng, n);
      const double scale = sum_abs2(a, b);
      CHECK(close(avx->dotc(a.data(), b.data(), n), ref.dotc(a.data(), b.data(), n), scale));
      CHECK(close(avx->dotu(a.data(), b.data(), n), ref.dotu(a.data(), b.data(), n), scale));
      CHECK(std::abs(avx->norm2(a.data(), n) - ref.norm2(a.data(), n)) <=
            1e-13 * (1.0 + sum_abs2(a, a)));

      const cplx alpha = testing::gaussian_complex(rng);
      CVector y1 = b;
      CVector y2 = b;
      ref.axpy(alpha, a.data(), y1.data(), n);
      avx->axpy(alpha, a.data(), y2.data(), n);
      CHECK(testing::max_abs_diff(y1, y2) <= 1e-13 * (1.0 + std::abs(alpha)) * 10.0);

      const std::size_t rows = 1 + n % 5;
      const CVector m = testing::gaussian_vector(rng, rows * n);
      CVector g1(rows);
      CVector g2(rows);
      ref.gemv(m.data(), rows, n, a.data(), g1.data());
      avx->gemv(m.data(), rows, n, a.data(), g2.data());
      CHECK(testing::max_abs_diff(g1, g2) <= 1e-12 * (1.0 + static_cast<double>(n)));
    }
  }

  TEST_CASE("dispatch override") {
    const kernels::Isa before = kernels::active_isa();
    CHECK(kernels::set_kernel_isa(kernels::Isa::Scalar));
    CHECK(kernels::active_isa() == kernels::Isa::Scalar);
    CHECK(&kernels::active() == &kernels::scalar_table());
    const bool avx_ok = kernels::set_kernel_isa(kernels::Isa::Avx2);
    CHECK(avx_ok == (kernels::avx2_table() != nullptr && kernels::cpu_has_avx2()));
    kernels::set_kernel_isa(before);
    CHECK(kernels::isa_name(kernels::Isa::Avx2) == "avx2");
  }
}
