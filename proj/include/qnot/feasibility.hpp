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

// Realizability tests for perfect and probabilistic NOT / conjugate
// transformations on a finite state set.
//
// Three regimes are covered:
//  * a bare unitary on the system, possible iff every overlap is real;
//  * a unitary on system + probe with probe states equal up to phase,
//    decided by phase congruence modulo pi over all index triples (needs
//    every overlap nonzero);
//  * a postselected machine with success probabilities gamma_i, possible iff
//      G - sqrt(Gamma) (conj(G) o P) sqrt(Gamma)
//    is PSD, where o is the entrywise product and P the probe Gram matrix.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qnot/linalg.hpp"
#include "qnot/states.hpp"

namespace qnot {

namespace tol {
inline constexpr double kImag = 1e-9;
inline constexpr double kPhase = 1e-8;
inline constexpr double kPsd = 1e-9;
inline constexpr double kZeroOverlap = 1e-12;
inline constexpr double kParallel = 1e-8;
}  // namespace tol

struct ProbeSpec {
  enum class Kind { PhaseVector, FullGram };

  Kind kind = Kind::PhaseVector;
  std::vector<double> phases;  // PhaseVector: probe state i is e^{i phases[i]} |P1>
  CMatrix probe_gram;          // FullGram

  static ProbeSpec phase_vector(std::vector<double> phases);
  // Validates Hermitian, unit diagonal and PSD; throws InvalidProbeGram.
  static ProbeSpec full_gram(CMatrix gram);

  std::size_t size() const noexcept;
  // P_ij = <P_i|P_j>; for phase vectors e^{i (phi_j - phi_i)}.
  CMatrix gram_matrix() const;
};

// Diagonal success probabilities, each in (0, 1].
class EfficiencyMatrix {
 public:
  explicit EfficiencyMatrix(std::vector<double> gammas);
  static EfficiencyMatrix uniform(std::size_t n, double gamma);

  std::size_t size() const noexcept { return gammas_.size(); }
  const std::vector<double>& values() const noexcept { return gammas_; }
  double operator[](std::size_t i) const { return gammas_[i]; }
  double mean() const noexcept;

 private:
  std::vector<double> gammas_;
};

struct Violation {
  std::vector<std::size_t> indices;
  double residual = 0.0;
  std::string description;
};

struct FeasibilityVerdict {
  bool feasible = false;
  std::optional<ProbeSpec> witness;
  std::optional<Violation> violation;
};

// conj(G) o P
CMatrix target_probe_gram(const CMatrix& gram, const CMatrix& probe_gram);
// G - sqrt(Gamma) (conj(G) o P) sqrt(Gamma)
CMatrix probabilistic_residual(const CMatrix& gram, const EfficiencyMatrix& gammas,
                               const CMatrix& probe_gram);

// Perfect transformation by a unitary on the system alone: all overlaps real.
FeasibilityVerdict check_perfect_unitary(const StateSet& ss);

// Perfect transformation by a unitary on system + probe. Throws ZeroOverlap
// (the test is inapplicable) if some overlap vanishes. On success the witness
// holds phi_j = 2 theta_1j mod 2 pi.
FeasibilityVerdict check_perfect_with_probe(const StateSet& ss);

// Probabilistic transformation with the given efficiencies and probe.
FeasibilityVerdict check_probabilistic(const StateSet& ss, const EfficiencyMatrix& gammas,
                                       const ProbeSpec& probe, double tol = tol::kPsd);

// System-only unitary mapping every state to its target. Throws GramMismatch
// when the overlaps are not real.
CMatrix build_direct_unitary(const StateSet& ss);

// Unitary on system (x) 2-dim probe with
//   U (psi_i (x) |0>) = target(psi_i) (x) e^{i phi_i} |0>.
// Index layout: system index * 2 + probe index.
CMatrix build_probe_unitary(const StateSet& ss, const ProbeSpec& probe);

struct DependentTripleSolution {
  double gamma3 = 0.0;
  double chi = 0.0;
};

// For qubit states with s3 = alpha s1 + beta s2, checks whether
//   alpha sqrt(g1) s1' + beta e^{i phi} sqrt(g2) s2' = sqrt(g3) e^{i chi} s3'
// holds for some g3 in (0, 1] (primes denote target images).
std::optional<DependentTripleSolution> solve_dependent_triple(
    const QuditState& s1, const QuditState& s2, const QuditState& s3, double gamma1,
    double gamma2, double phi, TargetMap target = TargetMap::Not);

}  // namespace qnot
