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

// Pure qudit states, the two target maps (qubit orthogonal complement and
// qudit complex conjugation) and Gram matrices of state sets.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qnot/linalg.hpp"

namespace qnot {

enum class TargetMap { Not, Conjugate };

inline constexpr double kNormTolerance = 1e-10;

class QuditState {
 public:
  // Throws NotNormalized unless sum |a_i|^2 = 1 within 1e-10, and
  // WrongDimension for dim < 2.
  explicit QuditState(CVector amps);

  // Rescales arbitrary nonzero amplitudes to unit norm.
  static QuditState normalized(CVector amps);
  static QuditState basis(std::size_t dim, std::size_t k);

  std::size_t dim() const noexcept { return amps_.size(); }
  const CVector& amps() const noexcept { return amps_; }
  const cplx& operator[](std::size_t i) const { return amps_[i]; }

 private:
  CVector amps_;
};

// (a, b) -> (-conj(b), conj(a)); WrongDimension unless dim == 2.
QuditState orthogonal_complement(const QuditState& s);
QuditState conjugate(const QuditState& s);
QuditState target_state(const QuditState& s, TargetMap target);

// |<a|b>|
double fidelity(std::span<const cplx> a, std::span<const cplx> b);

class StateSet {
 public:
  // Requires n >= 1, equal dimensions, and dim == 2 for the NOT target.
  StateSet(std::vector<QuditState> states, TargetMap target);

  std::size_t size() const noexcept { return states_.size(); }
  std::size_t dim() const noexcept { return states_.front().dim(); }
  TargetMap target() const noexcept { return target_; }
  const std::vector<QuditState>& states() const noexcept { return states_; }
  const QuditState& operator[](std::size_t i) const { return states_[i]; }

  std::vector<CVector> amplitudes() const;
  std::vector<CVector> target_amplitudes() const;

 private:
  std::vector<QuditState> states_;
  TargetMap target_;
};

// Gram matrix G_ij = <psi_i|psi_j> with polar form G_ij = t_ij e^{i theta_ij},
// theta in [0, 2 pi). Entries with zero magnitude get theta = 0.
class GramMatrix {
 public:
  explicit GramMatrix(CMatrix entries);

  std::size_t size() const noexcept { return entries_.rows(); }
  const CMatrix& matrix() const noexcept { return entries_; }
  cplx operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
  double magnitude(std::size_t i, std::size_t j) const { return magnitude_[i * size() + j]; }
  double phase(std::size_t i, std::size_t j) const { return phase_[i * size() + j]; }

 private:
  CMatrix entries_;
  std::vector<double> magnitude_;
  std::vector<double> phase_;
};

GramMatrix gram(const StateSet& ss);

}  // namespace qnot
