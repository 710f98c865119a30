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

#include "qnot/linalg.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "qnot/error.hpp"

namespace qnot {

CMatrix::CMatrix(std::initializer_list<std::initializer_list<cplx>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw Error(Errc::DimensionMismatch, "ragged matrix initializer");
    }
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(std::span<const double> values) {
  CMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

CMatrix CMatrix::from_columns(std::span<const CVector> columns) {
  if (columns.empty()) return {};
  const std::size_t rows = columns.front().size();
  CMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) {
      throw Error(Errc::DimensionMismatch, "columns of unequal length");
    }
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

CVector CMatrix::column(std::size_t c) const {
  CVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

CMatrix CMatrix::conj() const {
  CMatrix out = *this;
  for (auto& z : out.data_) z = std::conj(z);
  return out;
}

CMatrix CMatrix::hadamard(const CMatrix& other) const {
  if (other.rows_ != rows_ || other.cols_ != cols_) {
    throw Error(Errc::DimensionMismatch, "hadamard product of unequal shapes");
  }
  CMatrix out = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] *= other.data_[k];
  return out;
}

CVector CMatrix::apply(std::span<const cplx> x) const {
  if (x.size() != cols_) {
    throw Error(Errc::DimensionMismatch, "matrix-vector product");
  }
  CVector y(rows_);
  kernels::active().gemv(data_.data(), rows_, cols_, x.data(), y.data());
  return y;
}

CMatrix& CMatrix::operator+=(const CMatrix& other) {
  if (other.rows_ != rows_ || other.cols_ != cols_) {
    throw Error(Errc::DimensionMismatch, "matrix sum of unequal shapes");
  }
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other) {
  if (other.rows_ != rows_ || other.cols_ != cols_) {
    throw Error(Errc::DimensionMismatch, "matrix difference of unequal shapes");
  }
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

CMatrix& CMatrix::operator*=(cplx s) {
  for (auto& z : data_) z *= s;
  return *this;
}

double CMatrix::max_abs() const noexcept {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

bool CMatrix::all_finite() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](const cplx& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(Errc::DimensionMismatch, "matrix product");
  }
  CMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    auto out_row = out.row(r);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx s = a(r, k);
      if (s == cplx{}) continue;
      axpy(s, b.row(k), out_row);
    }
  }
  return out;
}

CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
CMatrix operator*(cplx s, CMatrix a) { return a *= s; }

double hermitian_deviation(const CMatrix& m) {
  if (!m.square()) {
    throw Error(Errc::NotSquare, "expected a square matrix");
  }
  double dev = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      dev = std::max(dev, std::abs(m(i, j) - std::conj(m(j, i))));
  return dev;
}

double unitarity_defect(const CMatrix& u) {
  const CMatrix prod = u.adjoint() * u;
  return (prod - CMatrix::identity(prod.rows())).max_abs();
}

CMatrix gram_matrix(std::span<const CVector> vectors) {
  const std::size_t n = vectors.size();
  CMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    g(i, i) = norm2(vectors[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (vectors[j].size() != vectors[i].size()) {
        throw Error(Errc::DimensionMismatch, "vectors of unequal dimension");
      }
      g(i, j) = dotc(vectors[i], vectors[j]);
      g(j, i) = std::conj(g(i, j));
    }
  }
  return g;
}

namespace {

void require_hermitian(const CMatrix& m) {
  const double dev = hermitian_deviation(m);
  if (dev > tol::kHermitian) {
    std::ostringstream os;
    os << "max |M - M^dagger| = " << dev;
    throw Error(Errc::NotHermitian, os.str(), {}, dev);
  }
}

}  // namespace

HermEig herm_eig(const CMatrix& m) {
  require_hermitian(m);
  const std::size_t n = m.rows();
  Eigen::MatrixXcd em(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) em(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(em);
  if (solver.info() != Eigen::Success) {
    throw Error(Errc::InvalidArgument, "eigensolver did not converge");
  }

  HermEig out;
  out.eigenvalues.resize(n);
  out.eigenvectors = CMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = solver.eigenvalues()(static_cast<Eigen::Index>(k));
    const auto col = solver.eigenvectors().col(static_cast<Eigen::Index>(k));
    cplx phase = 1.0;
    for (std::size_t r = 0; r < n; ++r) {
      const cplx z = col(static_cast<Eigen::Index>(r));
      if (std::abs(z) > 1e-12) {
        phase = std::conj(z) / std::abs(z);
        break;
      }
    }
    for (std::size_t r = 0; r < n; ++r) {
      out.eigenvectors(r, k) = col(static_cast<Eigen::Index>(r)) * phase;
    }
  }
  return out;
}

double min_eigenvalue(const CMatrix& m) {
  if (m.rows() == 0) return 0.0;
  return herm_eig(m).eigenvalues.front();
}

bool is_psd(const CMatrix& m, double tol) { return min_eigenvalue(m) >= -tol; }

CMatrix psd_sqrt(const CMatrix& m, double tol) {
  const HermEig eig = herm_eig(m);
  const std::size_t n = m.rows();
  if (n > 0 && eig.eigenvalues.front() < -tol) {
    std::ostringstream os;
    os << "lambda_min = " << eig.eigenvalues.front();
    throw Error(Errc::NotPSD, os.str(), {}, eig.eigenvalues.front());
  }
  std::vector<double> roots(n);
  for (std::size_t k = 0; k < n; ++k) roots[k] = std::sqrt(std::max(eig.eigenvalues[k], 0.0));
  const CMatrix& v = eig.eigenvectors;
  CMatrix c = v * CMatrix::diagonal(roots) * v.adjoint();
  // Exact Hermitian symmetry.
  for (std::size_t i = 0; i < n; ++i) {
    c(i, i) = c(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx avg = 0.5 * (c(i, j) + std::conj(c(j, i)));
      c(i, j) = avg;
      c(j, i) = std::conj(avg);
    }
  }
  return c;
}

namespace {

// Subtracts the projections onto an orthonormal set, twice (classical
// Gram-Schmidt with one reorthogonalization pass).
void project_out(CVector& v, const std::vector<CVector>& basis) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& b : basis) {
      axpy(-dotc(b, v), b, v);
    }
  }
}

void scale(CVector& v, double s) {
  for (auto& z : v) z *= s;
}

// Extends an orthonormal set to a full basis of C^dim, each step taking the
// canonical basis vector with the largest residual against the current span.
void complete_basis(std::vector<CVector>& basis, std::size_t dim) {
  std::vector<bool> used(dim, false);
  while (basis.size() < dim) {
    double best_norm = -1.0;
    std::size_t best = 0;
    CVector best_vec;
    for (std::size_t k = 0; k < dim; ++k) {
      if (used[k]) continue;
      CVector e(dim);
      e[k] = 1.0;
      project_out(e, basis);
      const double nrm = std::sqrt(norm2(e));
      if (nrm > best_norm) {
        best_norm = nrm;
        best = k;
        best_vec = std::move(e);
      }
    }
    used[best] = true;
    scale(best_vec, 1.0 / best_norm);
    basis.push_back(std::move(best_vec));
  }
}

}  // namespace

CMatrix unitary_completion(std::span<const CVector> inputs, std::span<const CVector> outputs) {
  if (inputs.size() != outputs.size()) {
    throw Error(Errc::DimensionMismatch, "input and output counts differ");
  }
  if (inputs.empty()) {
    throw Error(Errc::DimensionMismatch, "no vectors to map");
  }
  const std::size_t dim = inputs.front().size();
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (inputs[i].size() != dim || outputs[i].size() != dim) {
      throw Error(Errc::DimensionMismatch, "vectors of unequal dimension", {i});
    }
  }

  const CMatrix g_in = gram_matrix(inputs);
  const CMatrix g_out = gram_matrix(outputs);
  double worst = 0.0;
  std::size_t wi = 0;
  std::size_t wj = 0;
  for (std::size_t i = 0; i < g_in.rows(); ++i) {
    for (std::size_t j = 0; j < g_in.cols(); ++j) {
      const double dev = std::abs(g_in(i, j) - g_out(i, j));
      if (dev > worst) {
        worst = dev;
        wi = i;
        wj = j;
      }
    }
  }
  if (worst > tol::kGram) {
    std::ostringstream os;
    os << "Gram entry (" << wi << ", " << wj << ") differs by " << worst;
    throw Error(Errc::GramMismatch, os.str(), {wi, wj}, worst);
  }

  // Pivoted Gram-Schmidt on the inputs, mirroring every elimination step on
  // the outputs so that e_k -> f_k is the restriction of the sought map.
  std::vector<CVector> in_res(inputs.begin(), inputs.end());
  std::vector<CVector> out_res(outputs.begin(), outputs.end());
  std::vector<bool> consumed(inputs.size(), false);
  std::vector<CVector> e_basis;
  std::vector<CVector> f_basis;
  while (e_basis.size() < dim) {
    double best_norm = 0.0;
    std::size_t pivot = 0;
    for (std::size_t i = 0; i < in_res.size(); ++i) {
      if (consumed[i]) continue;
      const double nrm = std::sqrt(norm2(in_res[i]));
      if (nrm > best_norm) {
        best_norm = nrm;
        pivot = i;
      }
    }
    if (best_norm <= tol::kRankDrop) break;
    consumed[pivot] = true;
    CVector e = in_res[pivot];
    CVector f = out_res[pivot];
    scale(e, 1.0 / best_norm);
    scale(f, 1.0 / best_norm);
    for (std::size_t i = 0; i < in_res.size(); ++i) {
      if (consumed[i]) continue;
      const cplx c = dotc(e, in_res[i]);
      axpy(-c, e, in_res[i]);
      axpy(-c, f, out_res[i]);
    }
    e_basis.push_back(std::move(e));
    f_basis.push_back(std::move(f));
  }

  // Clean up accumulated round-off so both sets are orthonormal to machine
  // precision before completing them.
  for (auto* basis : {&e_basis, &f_basis}) {
    std::vector<CVector> cleaned;
    cleaned.reserve(basis->size());
    for (auto& v : *basis) {
      project_out(v, cleaned);
      scale(v, 1.0 / std::sqrt(norm2(v)));
      cleaned.push_back(std::move(v));
    }
    *basis = std::move(cleaned);
  }
  complete_basis(e_basis, dim);
  complete_basis(f_basis, dim);

  // U = sum_k |f_k><e_k|
  CMatrix u(dim, dim);
  for (std::size_t k = 0; k < dim; ++k) {
    for (std::size_t r = 0; r < dim; ++r) {
      const cplx fr = f_basis[k][r];
      if (fr == cplx{}) continue;
      auto row = u.row(r);
      for (std::size_t c = 0; c < dim; ++c) row[c] += fr * std::conj(e_basis[k][c]);
    }
  }
  return u;
}

}  // namespace qnot
