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

#include "qnot/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qnot/error.hpp"

namespace qnot {

CMatrix Machine::success_projector() const {
  CMatrix p(dim(), dim());
  for (std::size_t s = 0; s < system_dim; ++s) {
    const std::size_t k = s * probe_dim;
    p(k, k) = 1.0;
  }
  return p;
}

namespace {

struct Assembly {
  CMatrix unitary;
  double gram_residual = 0.0;
};

// Builds U from the branch structure. c is Hermitian with c c^dagger equal to
// the residual matrix; the failure coefficients are R = conj(c) so that
// sum_k conj(R_ik) R_jk reproduces it entrywise.
Assembly assemble(const StateSet& ss, const std::vector<double>& gammas,
                  const std::vector<double>& phases, const CMatrix& c, std::size_t probe_dim,
                  const CVector& fill) {
  const std::size_t n = ss.size();
  const std::size_t d = ss.dim();
  const std::size_t dim = d * probe_dim;
  std::vector<CVector> inputs;
  std::vector<CVector> outputs;
  inputs.reserve(n);
  outputs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const QuditState t = target_state(ss[i], ss.target());
    const cplx lead = std::polar(std::sqrt(gammas[i]), phases[i]);
    CVector in(dim);
    CVector out(dim);
    for (std::size_t s = 0; s < d; ++s) {
      in[s * probe_dim] = ss[i][s];
      out[s * probe_dim] = lead * t[s];
    }
    for (std::size_t j = 0; j < c.cols(); ++j) {
      const cplx r = std::conj(c(i, j));
      if (r == cplx{}) continue;
      for (std::size_t s = 0; s < d; ++s) out[s * probe_dim + 1 + j] += r * fill[s];
    }
    inputs.push_back(std::move(in));
    outputs.push_back(std::move(out));
  }

  const CMatrix diff = gram_matrix(inputs) - gram_matrix(outputs);
  Assembly result;
  result.gram_residual = diff.max_abs();
  if (result.gram_residual > tol::kGram) {
    std::ostringstream os;
    os << "assembled branch vectors miss the input Gram matrix by " << result.gram_residual;
    throw Error(Errc::GramMismatch, os.str(), {}, result.gram_residual);
  }
  result.unitary = unitary_completion(inputs, outputs);
  return result;
}

CVector first_basis_state(std::size_t d) {
  CVector fill(d);
  fill[0] = 1.0;
  return fill;
}

bool gram_is_real(const CMatrix& g, double tol) {
  for (const auto& z : g.data()) {
    if (std::abs(z.imag()) > tol) return false;
  }
  return true;
}

}  // namespace

SynthesisResult synthesize(const StateSet& ss, const SynthesisOptions& opts) {
  const std::size_t n = ss.size();
  const CMatrix g = gram(ss).matrix();
  const HermEig eig = herm_eig(g);
  const double c = eig.eigenvalues.front();
  if (c <= opts.rank_tol) {
    std::ostringstream os;
    os << "Gram matrix has lambda_min = " << c;
    throw Error(Errc::LinearlyDependent, os.str(), {}, c);
  }
  // conj(G) has the spectrum of G.
  const double d_max = eig.eigenvalues.back();

  SynthesisResult result;
  SynthesisReport& report = result.report;
  report.c = c;
  report.d_max = d_max;
  report.perfect = gram_is_real(g, opts.real_tol);
  report.epsilon = report.perfect ? 1.0 : std::min(opts.safety * c / d_max, 1.0);

  const std::vector<double> gammas(n, report.epsilon);
  const std::vector<double> phases(n, 0.0);
  if (report.perfect) {
    report.c_matrix = CMatrix(n, n);
  } else {
    const CMatrix probe = ProbeSpec::phase_vector(phases).gram_matrix();
    report.c_matrix = psd_sqrt(probabilistic_residual(g, EfficiencyMatrix(gammas), probe));
  }

  Machine& machine = result.machine;
  machine.system_dim = ss.dim();
  machine.probe_dim = n + 1;
  machine.target = ss.target();
  machine.gammas = gammas;
  machine.branch_phases = phases;
  machine.fill_state = first_basis_state(ss.dim());
  Assembly a = assemble(ss, gammas, phases, report.c_matrix, machine.probe_dim, machine.fill_state);
  machine.unitary = std::move(a.unitary);
  report.gram_residual = a.gram_residual;
  return result;
}

Machine synthesize_with(const StateSet& ss, const EfficiencyMatrix& gammas, const ProbeSpec& probe,
                        double tol) {
  if (probe.kind != ProbeSpec::Kind::PhaseVector) {
    throw Error(Errc::InvalidProbe, "synthesis needs a phase-vector probe");
  }
  if (probe.size() != ss.size()) {
    throw Error(Errc::InvalidProbe, "probe size does not match the state set");
  }
  if (gammas.size() != ss.size()) {
    throw Error(Errc::InvalidGamma, "efficiency count does not match the state set");
  }
  const std::size_t n = ss.size();
  const CMatrix m = probabilistic_residual(gram(ss).matrix(), gammas, probe.gram_matrix());
  const double lmin = min_eigenvalue(m);
  if (lmin < -tol) {
    std::ostringstream os;
    os << "residual matrix has lambda_min = " << lmin;
    throw Error(Errc::InfeasibleGamma, os.str(), {}, lmin);
  }
  const CMatrix c = psd_sqrt(m, tol);

  Machine machine;
  machine.system_dim = ss.dim();
  machine.probe_dim = n + 1;
  machine.target = ss.target();
  machine.gammas = gammas.values();
  machine.branch_phases = probe.phases;
  machine.fill_state = first_basis_state(ss.dim());
  machine.unitary =
      assemble(ss, machine.gammas, machine.branch_phases, c, machine.probe_dim, machine.fill_state)
          .unitary;
  return machine;
}

Machine perfect_machine(const StateSet& ss) {
  Machine machine;
  machine.system_dim = ss.dim();
  machine.probe_dim = 1;
  machine.target = ss.target();
  machine.unitary = build_direct_unitary(ss);
  machine.gammas.assign(ss.size(), 1.0);
  machine.branch_phases.assign(ss.size(), 0.0);
  machine.fill_state = first_basis_state(ss.dim());
  return machine;
}

Machine probe_machine(const StateSet& ss, const ProbeSpec& probe) {
  Machine machine;
  machine.system_dim = ss.dim();
  machine.probe_dim = 2;
  machine.target = ss.target();
  machine.unitary = build_probe_unitary(ss, probe);
  machine.gammas.assign(ss.size(), 1.0);
  machine.branch_phases = probe.phases;
  machine.fill_state = first_basis_state(ss.dim());
  return machine;
}

}  // namespace qnot
