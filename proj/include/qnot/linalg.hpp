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

// Dense complex linear algebra on small matrices: Hermitian eigensystems,
// PSD tests, PSD square roots and Gram-matched unitary completion.

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "qnot/kernels.hpp"

namespace qnot {

using CVector = std::vector<cplx>;

namespace tol {
inline constexpr double kHermitian = 1e-10;
inline constexpr double kReconstruct = 1e-10;
inline constexpr double kGram = 1e-8;
inline constexpr double kRankDrop = 1e-9;
inline constexpr double kPsdSqrt = 1e-10;
}  // namespace tol

// Row-major dense complex matrix.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  CMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static CMatrix identity(std::size_t n);
  static CMatrix diagonal(std::span<const double> values);
  // Columns of the result are the given vectors.
  static CMatrix from_columns(std::span<const CVector> columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<cplx> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const cplx> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  CVector column(std::size_t c) const;

  std::span<cplx> data() noexcept { return data_; }
  std::span<const cplx> data() const noexcept { return data_; }

  CMatrix adjoint() const;
  CMatrix conj() const;
  CMatrix hadamard(const CMatrix& other) const;

  CVector apply(std::span<const cplx> x) const;

  CMatrix& operator+=(const CMatrix& other);
  CMatrix& operator-=(const CMatrix& other);
  CMatrix& operator*=(cplx s);

  double max_abs() const noexcept;
  bool all_finite() const noexcept;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  CVector data_;
};

CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator+(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a, const CMatrix& b);
CMatrix operator*(cplx s, CMatrix a);

// max |A - A^dagger| over entries; throws NotSquare.
double hermitian_deviation(const CMatrix& m);
// max |U^dagger U - I| over entries.
double unitarity_defect(const CMatrix& u);

// G_ij = <v_i|v_j>
CMatrix gram_matrix(std::span<const CVector> vectors);

struct HermEig {
  std::vector<double> eigenvalues;  // ascending
  CMatrix eigenvectors;             // unitary, eigenvectors as columns
};

// Eigenvectors are phase-fixed so that their first component above 1e-12 in
// magnitude is real and positive.
HermEig herm_eig(const CMatrix& m);

double min_eigenvalue(const CMatrix& m);

// True iff lambda_min(m) >= -tol.
bool is_psd(const CMatrix& m, double tol);

// Hermitian C with C C^dagger = m. Eigenvalues in [-tol, 0) are clamped to 0;
// anything below -tol raises NotPSD.
CMatrix psd_sqrt(const CMatrix& m, double tol = tol::kPsdSqrt);

// Unitary U on C^D with U inputs[i] = outputs[i], given matching Gram
// matrices (max-abs deviation <= 1e-8). Handles linearly dependent inputs.
CMatrix unitary_completion(std::span<const CVector> inputs, std::span<const CVector> outputs);

}  // namespace qnot
