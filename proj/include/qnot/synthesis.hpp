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

// Explicit postselected NOT / conjugate machines.
//
// A machine acts on system (x) probe, starting from probe state |P_0>. For a
// member state psi_i it produces
//
//   U (psi_i (x) P_0) = sqrt(gamma_i) e^{i phi_i} target(psi_i) (x) P_0
//                       + sum_j R_ij fill (x) P_j,
//
// so measuring the probe in its canonical basis and keeping outcome P_0
// leaves the system exactly in target(psi_i), with probability gamma_i.

#pragma once

#include <cstddef>
#include <vector>

#include "qnot/feasibility.hpp"
#include "qnot/linalg.hpp"
#include "qnot/states.hpp"

namespace qnot {

struct Machine {
  std::size_t system_dim = 0;
  std::size_t probe_dim = 0;
  TargetMap target = TargetMap::Not;
  // Acts on C^(system_dim * probe_dim); basis index = system * probe_dim + probe.
  CMatrix unitary;
  std::vector<double> gammas;
  std::vector<double> branch_phases;
  // System state paired with every failure branch P_1..P_n.
  CVector fill_state;

  std::size_t dim() const noexcept { return system_dim * probe_dim; }
  // I_sys (x) |P_0><P_0|
  CMatrix success_projector() const;
};

struct SynthesisReport {
  double epsilon = 0.0;
  double c = 0.0;      // lambda_min of the state Gram matrix
  double d_max = 0.0;  // lambda_max of its conjugate
  CMatrix c_matrix;    // Hermitian square root of the residual matrix
  double gram_residual = 0.0;
  bool perfect = false;  // real Gram: built with gamma = 1
};

struct SynthesisResult {
  Machine machine;
  SynthesisReport report;
};

struct SynthesisOptions {
  double safety = 0.999;
  double rank_tol = 1e-9;
  double real_tol = 1e-9;
};

// Machine for a linearly independent set with uniform efficiency
// epsilon = min(safety * c / d_max, 1), branch phases zero. Sets whose Gram
// matrix is real get gamma = 1. Throws LinearlyDependent.
SynthesisResult synthesize(const StateSet& ss, const SynthesisOptions& opts = {});

// Machine with caller-chosen efficiencies and phase-vector probe (branch
// phases). Throws InvalidProbe for full-Gram probes and InfeasibleGamma when
// the residual matrix is not PSD within tol.
Machine synthesize_with(const StateSet& ss, const EfficiencyMatrix& gammas,
                        const ProbeSpec& probe, double tol = tol::kPsd);

// Deterministic machines (gamma = 1). The first needs a real Gram matrix and
// uses a 1-dim probe; the second uses a 2-dim probe carrying phases.
Machine perfect_machine(const StateSet& ss);
Machine probe_machine(const StateSet& ss, const ProbeSpec& probe);

}  // namespace qnot
