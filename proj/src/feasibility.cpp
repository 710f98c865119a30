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

#include "qnot/feasibility.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "qnot/error.hpp"

namespace qnot {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_two_pi(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

void validate_probe_gram(const CMatrix& p) {
  if (!p.square()) {
    throw Error(Errc::InvalidProbeGram, "probe Gram matrix must be square");
  }
  if (!p.all_finite()) {
    throw Error(Errc::InvalidProbeGram, "probe Gram matrix has non-finite entries");
  }
  if (hermitian_deviation(p) > tol::kHermitian) {
    throw Error(Errc::InvalidProbeGram, "probe Gram matrix is not Hermitian");
  }
  for (std::size_t i = 0; i < p.rows(); ++i) {
    if (std::abs(p(i, i) - 1.0) > tol::kHermitian) {
      throw Error(Errc::InvalidProbeGram, "probe Gram matrix needs a unit diagonal", {i});
    }
  }
  const double lmin = min_eigenvalue(p);
  if (lmin < -tol::kPsdSqrt) {
    throw Error(Errc::InvalidProbeGram, "probe Gram matrix is not PSD", {}, lmin);
  }
}

void require_probe_size(const ProbeSpec& probe, std::size_t n) {
  if (probe.size() != n) {
    std::ostringstream os;
    os << "probe describes " << probe.size() << " states, state set has " << n;
    throw Error(Errc::InvalidProbe, os.str());
  }
}

}  // namespace

ProbeSpec ProbeSpec::phase_vector(std::vector<double> phases) {
  for (double p : phases) {
    if (!std::isfinite(p)) throw Error(Errc::InvalidProbe, "non-finite probe phase");
  }
  ProbeSpec spec;
  spec.kind = Kind::PhaseVector;
  spec.phases = std::move(phases);
  return spec;
}

ProbeSpec ProbeSpec::full_gram(CMatrix gram) {
  validate_probe_gram(gram);
  ProbeSpec spec;
  spec.kind = Kind::FullGram;
  spec.probe_gram = std::move(gram);
  return spec;
}

std::size_t ProbeSpec::size() const noexcept {
  return kind == Kind::PhaseVector ? phases.size() : probe_gram.rows();
}

CMatrix ProbeSpec::gram_matrix() const {
  if (kind == Kind::FullGram) return probe_gram;
  const std::size_t n = phases.size();
  CMatrix p(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p(i, j) = std::polar(1.0, phases[j] - phases[i]);
  return p;
}

EfficiencyMatrix::EfficiencyMatrix(std::vector<double> gammas) : gammas_(std::move(gammas)) {
  for (std::size_t i = 0; i < gammas_.size(); ++i) {
    const double g = gammas_[i];
    if (!(g > 0.0 && g <= 1.0)) {
      std::ostringstream os;
      os << "gamma_" << i << " = " << g << " is outside (0, 1]";
      throw Error(Errc::InvalidGamma, os.str(), {i}, g);
    }
  }
}

EfficiencyMatrix EfficiencyMatrix::uniform(std::size_t n, double gamma) {
  return EfficiencyMatrix(std::vector<double>(n, gamma));
}

double EfficiencyMatrix::mean() const noexcept {
  if (gammas_.empty()) return 0.0;
  return std::accumulate(gammas_.begin(), gammas_.end(), 0.0) /
         static_cast<double>(gammas_.size());
}

CMatrix target_probe_gram(const CMatrix& gram, const CMatrix& probe_gram) {
  return gram.conj().hadamard(probe_gram);
}

CMatrix probabilistic_residual(const CMatrix& gram, const EfficiencyMatrix& gammas,
                               const CMatrix& probe_gram) {
  const std::size_t n = gram.rows();
  if (gammas.size() != n) {
    throw Error(Errc::InvalidGamma, "efficiency count does not match the state set");
  }
  const CMatrix x = target_probe_gram(gram, probe_gram);
  CMatrix m = gram;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) -= std::sqrt(gammas[i] * gammas[j]) * x(i, j);
  return m;
}

FeasibilityVerdict check_perfect_unitary(const StateSet& ss) {
  const GramMatrix g = gram(ss);
  FeasibilityVerdict verdict;
  double worst = 0.0;
  std::size_t wi = 0;
  std::size_t wj = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      const double im = std::abs(g(i, j).imag());
      if (im > worst) {
        worst = im;
        wi = i;
        wj = j;
      }
    }
  }
  verdict.feasible = worst <= tol::kImag;
  if (!verdict.feasible) {
    verdict.violation = Violation{{wi, wj}, worst, "overlap has a nonzero imaginary part"};
  } else {
    verdict.witness = ProbeSpec::phase_vector(std::vector<double>(g.size(), 0.0));
  }
  return verdict;
}

FeasibilityVerdict check_perfect_with_probe(const StateSet& ss) {
  const GramMatrix g = gram(ss);
  const std::size_t n = g.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (g.magnitude(i, j) <= tol::kZeroOverlap) {
        std::ostringstream os;
        os << "<psi_" << i << "|psi_" << j << "> vanishes; the probe criterion does not apply";
        throw Error(Errc::ZeroOverlap, os.str(), {i, j}, g.magnitude(i, j));
      }
    }
  }

  FeasibilityVerdict verdict;
  double worst = 0.0;
  std::vector<std::size_t> worst_idx;
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const double r = std::abs(std::sin(g.phase(l, j) - g.phase(l, i) - g.phase(i, j)));
        if (r > worst) {
          worst = r;
          worst_idx = {i, j, l};
        }
      }
    }
  }
  verdict.feasible = worst <= tol::kPhase;
  if (verdict.feasible) {
    std::vector<double> phases(n);
    for (std::size_t j = 0; j < n; ++j) phases[j] = wrap_two_pi(2.0 * g.phase(0, j));
    verdict.witness = ProbeSpec::phase_vector(std::move(phases));
  } else {
    verdict.violation =
        Violation{worst_idx, worst, "theta_lj - theta_li - theta_ij is not a multiple of pi"};
  }
  return verdict;
}

FeasibilityVerdict check_probabilistic(const StateSet& ss, const EfficiencyMatrix& gammas,
                                       const ProbeSpec& probe, double tol) {
  require_probe_size(probe, ss.size());
  if (gammas.size() != ss.size()) {
    throw Error(Errc::InvalidGamma, "efficiency count does not match the state set");
  }
  const CMatrix p = probe.gram_matrix();
  if (probe.kind == ProbeSpec::Kind::FullGram) validate_probe_gram(p);

  const CMatrix m = probabilistic_residual(gram(ss).matrix(), gammas, p);
  const double lmin = min_eigenvalue(m);
  FeasibilityVerdict verdict;
  verdict.feasible = lmin >= -tol;
  verdict.witness = probe;
  if (!verdict.feasible) {
    verdict.violation = Violation{{}, lmin, "residual matrix has a negative eigenvalue"};
  }
  return verdict;
}

CMatrix build_direct_unitary(const StateSet& ss) {
  const auto inputs = ss.amplitudes();
  const auto outputs = ss.target_amplitudes();
  return unitary_completion(inputs, outputs);
}

CMatrix build_probe_unitary(const StateSet& ss, const ProbeSpec& probe) {
  if (probe.kind != ProbeSpec::Kind::PhaseVector) {
    throw Error(Errc::InvalidProbe, "a perfect probe machine needs a phase-vector probe");
  }
  require_probe_size(probe, ss.size());
  constexpr std::size_t kProbeDim = 2;
  const std::size_t d = ss.dim();
  std::vector<CVector> inputs;
  std::vector<CVector> outputs;
  for (std::size_t i = 0; i < ss.size(); ++i) {
    const QuditState t = target_state(ss[i], ss.target());
    const cplx phase = std::polar(1.0, probe.phases[i]);
    CVector in(d * kProbeDim);
    CVector out(d * kProbeDim);
    for (std::size_t s = 0; s < d; ++s) {
      in[s * kProbeDim] = ss[i][s];
      out[s * kProbeDim] = phase * t[s];
    }
    inputs.push_back(std::move(in));
    outputs.push_back(std::move(out));
  }
  return unitary_completion(inputs, outputs);
}

std::optional<DependentTripleSolution> solve_dependent_triple(
    const QuditState& s1, const QuditState& s2, const QuditState& s3, double gamma1,
    double gamma2, double phi, TargetMap target) {
  if (s1.dim() != 2 || s2.dim() != 2 || s3.dim() != 2) {
    throw Error(Errc::WrongDimension, "dependent triples are solved for qubit states");
  }
  for (double g : {gamma1, gamma2}) {
    if (!(g > 0.0 && g <= 1.0)) {
      throw Error(Errc::InvalidGamma, "efficiencies must lie in (0, 1]", {}, g);
    }
  }
  const cplx det = s1[0] * s2[1] - s1[1] * s2[0];
  if (std::abs(det) <= 1e-10) {
    throw Error(Errc::LinearlyDependentPair, "s1 and s2 are parallel", {0, 1}, std::abs(det));
  }
  // s3 = alpha s1 + beta s2
  const cplx alpha = (s3[0] * s2[1] - s3[1] * s2[0]) / det;
  const cplx beta = (s1[0] * s3[1] - s1[1] * s3[0]) / det;

  const QuditState t1 = target_state(s1, target);
  const QuditState t2 = target_state(s2, target);
  const QuditState t3 = target_state(s3, target);
  const cplx c1 = alpha * std::sqrt(gamma1);
  const cplx c2 = beta * std::polar(std::sqrt(gamma2), phi);
  const CVector v{c1 * t1[0] + c2 * t2[0], c1 * t1[1] + c2 * t2[1]};

  const cplx lambda = dotc(t3.amps(), v);
  const CVector residual{v[0] - lambda * t3[0], v[1] - lambda * t3[1]};
  if (std::sqrt(norm2(residual)) > tol::kParallel) return std::nullopt;

  const double gamma3 = std::norm(lambda);
  if (gamma3 > 1.0 + 1e-12 || gamma3 < 1e-14) return std::nullopt;
  return DependentTripleSolution{std::min(gamma3, 1.0), wrap_two_pi(std::arg(lambda))};
}

}  // namespace qnot
