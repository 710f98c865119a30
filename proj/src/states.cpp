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

#include "qnot/states.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "qnot/error.hpp"

namespace qnot {

QuditState::QuditState(CVector amps) : amps_(std::move(amps)) {
  if (amps_.size() < 2) {
    throw Error(Errc::WrongDimension, "qudit dimension must be at least 2");
  }
  for (const auto& z : amps_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw Error(Errc::NotNormalized, "non-finite amplitude");
    }
  }
  const double n2 = norm2(amps_);
  if (std::abs(n2 - 1.0) > kNormTolerance) {
    std::ostringstream os;
    os << "sum |a_i|^2 = " << n2;
    throw Error(Errc::NotNormalized, os.str(), {}, n2 - 1.0);
  }
}

QuditState QuditState::normalized(CVector amps) {
  const double n = std::sqrt(norm2(amps));
  if (!(n > 0.0)) {
    throw Error(Errc::NotNormalized, "zero vector cannot be normalized");
  }
  for (auto& z : amps) z /= n;
  return QuditState(std::move(amps));
}

QuditState QuditState::basis(std::size_t dim, std::size_t k) {
  if (k >= dim) {
    throw Error(Errc::InvalidArgument, "basis index out of range");
  }
  CVector amps(dim);
  amps[k] = 1.0;
  return QuditState(std::move(amps));
}

QuditState orthogonal_complement(const QuditState& s) {
  if (s.dim() != 2) {
    throw Error(Errc::WrongDimension, "orthogonal complement is defined for qubits only");
  }
  return QuditState(CVector{-std::conj(s[1]), std::conj(s[0])});
}

QuditState conjugate(const QuditState& s) {
  CVector amps(s.amps());
  for (auto& z : amps) z = std::conj(z);
  return QuditState(std::move(amps));
}

QuditState target_state(const QuditState& s, TargetMap target) {
  return target == TargetMap::Not ? orthogonal_complement(s) : conjugate(s);
}

double fidelity(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.size() != b.size()) {
    throw Error(Errc::DimensionMismatch, "fidelity of vectors of unequal dimension");
  }
  return std::abs(dotc(a, b));
}

StateSet::StateSet(std::vector<QuditState> states, TargetMap target)
    : states_(std::move(states)), target_(target) {
  if (states_.empty()) {
    throw Error(Errc::InvalidArgument, "a state set needs at least one state");
  }
  const std::size_t d = states_.front().dim();
  for (std::size_t i = 0; i < states_.size(); ++i) {
    if (states_[i].dim() != d) {
      throw Error(Errc::DimensionMismatch, "states of unequal dimension", {i});
    }
  }
  if (target_ == TargetMap::Not && d != 2) {
    throw Error(Errc::WrongDimension, "the NOT target requires qubit states");
  }
}

std::vector<CVector> StateSet::amplitudes() const {
  std::vector<CVector> out;
  out.reserve(states_.size());
  for (const auto& s : states_) out.push_back(s.amps());
  return out;
}

std::vector<CVector> StateSet::target_amplitudes() const {
  std::vector<CVector> out;
  out.reserve(states_.size());
  for (const auto& s : states_) out.push_back(target_state(s, target_).amps());
  return out;
}

GramMatrix::GramMatrix(CMatrix entries) : entries_(std::move(entries)) {
  if (!entries_.square()) {
    throw Error(Errc::NotSquare, "Gram matrix must be square");
  }
  const std::size_t n = entries_.rows();
  magnitude_.resize(n * n);
  phase_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const cplx z = entries_(i, j);
      const double t = std::abs(z);
      magnitude_[i * n + j] = t;
      double theta = 0.0;
      if (t > 0.0) {
        theta = std::arg(z);
        if (theta < 0.0) theta += 2.0 * std::numbers::pi;
        if (theta >= 2.0 * std::numbers::pi) theta = 0.0;
      }
      phase_[i * n + j] = theta;
    }
  }
}

GramMatrix gram(const StateSet& ss) { return GramMatrix(gram_matrix(ss.amplitudes())); }

}  // namespace qnot
