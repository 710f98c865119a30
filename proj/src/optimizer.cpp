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

#include "qnot/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "qnot/error.hpp"
#include "qnot/synthesis.hpp"

namespace qnot {

namespace {

constexpr int kBisectionSteps = 60;

// Smaller root of  q g^2 + 2 g (2 s - q) + q = 0  for q < 0, written to avoid
// cancellation: 1 + 2 (sqrt(s^2 - q s) - s) / q = 1 - 2 s / (sqrt(s^2 - q s) + s).
double lower_root(double q, double s) {
  if (s <= 0.0) return 1.0;
  return 1.0 - 2.0 * s / (std::sqrt(s * s - q * s) + s);
}

double equal_gamma_lambda_min(const CMatrix& g, const CMatrix& p, double gamma) {
  const std::size_t n = g.rows();
  return min_eigenvalue(probabilistic_residual(g, EfficiencyMatrix::uniform(n, gamma), p));
}

}  // namespace

TripleBoundInput TripleBoundInput::from_gram(const GramMatrix& g) {
  if (g.size() != 3) {
    throw Error(Errc::InvalidArgument, "the closed-form bound needs exactly three states");
  }
  TripleBoundInput in;
  in.t12 = g.magnitude(0, 1);
  in.t13 = g.magnitude(0, 2);
  in.t23 = g.magnitude(1, 2);
  in.theta12 = g.phase(0, 1);
  in.theta13 = g.phase(0, 2);
  in.theta23 = g.phase(1, 2);
  return in;
}

double TripleBoundInput::a() const noexcept {
  return -1.0 + t12 * t12 + t13 * t13 + t23 * t23 - 2.0 * t12 * t13 * t23 * std::cos(delta());
}

CMatrix TripleBoundInput::gram() const {
  const cplx g12 = std::polar(t12, theta12);
  const cplx g13 = std::polar(t13, theta13);
  const cplx g23 = std::polar(t23, theta23);
  return CMatrix{{1.0, g12, g13}, {std::conj(g12), 1.0, g23}, {std::conj(g13), std::conj(g23), 1.0}};
}

ProbeSpec TripleBoundInput::probe() const {
  return ProbeSpec::phase_vector({0.0, 2.0 * theta12, 2.0 * theta13});
}

TripleBound gamma_max_triple_detail(const TripleBoundInput& in) {
  for (double t : {in.t12, in.t13, in.t23}) {
    if (!(t > 0.0 && t <= 1.0)) {
      throw Error(Errc::InvalidArgument, "overlap magnitudes must lie in (0, 1]", {}, t);
    }
  }
  const double a = in.a();
  if (std::abs(a) < 1e-12) {
    std::ostringstream os;
    os << "det of the Gram matrix is " << -a;
    throw Error(Errc::DegenerateDeterminant, os.str(), {}, a);
  }
  if (a > 0.0) {
    throw Error(Errc::InvalidArgument, "parameters do not describe a positive-definite Gram matrix",
                {}, a);
  }
  const double sin_delta = std::sin(in.delta());
  const double s = in.t23 * in.t23 * sin_delta * sin_delta;
  const double b = in.b();

  TripleBound out;
  out.det_root = lower_root(a, s);
  out.minor_root = b < 0.0 ? lower_root(b, s) : (s > 0.0 ? 0.0 : 1.0);

  // Both quadratics are concave (a, b < 0) and feasible below their smaller
  // root; the larger roots 1/r lie at or above 1. Each candidate is checked
  // against the residual matrix itself and the largest confirmed one wins.
  const CMatrix g = in.gram();
  const CMatrix p = in.probe().gram_matrix();
  auto confirmed = [&](double gamma) {
    if (gamma >= 1.0) return equal_gamma_lambda_min(g, p, 1.0) >= -1e-10;
    const double below = std::max(gamma - 1e-9, 1e-300);
    // Scale out the (1 - gamma) factor so the test does not degrade near 1.
    return equal_gamma_lambda_min(g, p, below) / (1.0 - below) >= -1e-9;
  };

  std::vector<double> candidates{out.det_root, out.minor_root};
  for (double r : {out.det_root, out.minor_root}) {
    if (r > 0.0) candidates.push_back(std::min(1.0 / r, 1.0));
  }
  const double primary = std::clamp(std::min(out.det_root, out.minor_root), 0.0, 1.0);
  out.gamma_max = primary;
  out.oracle_confirmed = primary > 0.0 && confirmed(primary);
  if (!out.oracle_confirmed) {
    std::sort(candidates.begin(), candidates.end(), std::greater<>());
    for (double c : candidates) {
      if (c > 0.0 && c <= 1.0 && confirmed(c)) {
        out.gamma_max = c;
        out.oracle_confirmed = true;
        break;
      }
    }
  }
  return out;
}

double gamma_max_triple(const TripleBoundInput& in) { return gamma_max_triple_detail(in).gamma_max; }

double grid_oracle_triple(const GramMatrix& gram, const ProbeSpec& probe, std::size_t resolution,
                          double psd_tol) {
  if (gram.size() != 3 || probe.size() != 3) {
    throw Error(Errc::InvalidArgument, "the triple oracle needs three states and probe phases");
  }
  if (resolution == 0) {
    throw Error(Errc::InvalidArgument, "resolution must be positive");
  }
  const CMatrix& g = gram.matrix();
  const CMatrix p = probe.gram_matrix();
  auto feasible = [&](double gamma) { return equal_gamma_lambda_min(g, p, gamma) >= -psd_tol; };

  const double step = 1.0 / static_cast<double>(resolution);
  std::size_t first_bad = 0;
  for (std::size_t k = 1; k <= resolution; ++k) {
    if (!feasible(static_cast<double>(k) * step)) {
      first_bad = k;
      break;
    }
  }
  if (first_bad == 0) return 1.0;
  double lo = static_cast<double>(first_bad - 1) * step;
  double hi = static_cast<double>(first_bad) * step;
  for (int i = 0; i < kBisectionSteps; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid > 0.0 && feasible(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

GammaSearchResult search_gamma(const StateSet& ss, SearchPolicy policy) {
  const std::size_t n = ss.size();
  if (n < 2) {
    throw Error(Errc::InvalidArgument, "the search needs at least two states");
  }
  const GramMatrix g = gram(ss);
  std::vector<double> phases(n, 0.0);
  for (std::size_t j = 1; j < n; ++j) {
    if (g.magnitude(0, j) <= tol::kZeroOverlap) {
      throw Error(Errc::ZeroOverlap, "probe phases need <psi_1|psi_j> != 0", {0, j});
    }
    phases[j] = 2.0 * g.phase(0, j);
  }
  const ProbeSpec probe = ProbeSpec::phase_vector(phases);
  auto feasible = [&](const std::vector<double>& gammas) {
    return check_probabilistic(ss, EfficiencyMatrix(gammas), probe).feasible;
  };

  GammaSearchResult result;
  result.probe = probe;
  result.method = "bisection";

  double gamma = 1.0;
  if (!feasible(std::vector<double>(n, 1.0))) {
    double lo = 0.0;
    double hi = 1.0;
    for (int i = 0; i < kBisectionSteps; ++i) {
      const double mid = 0.5 * (lo + hi);
      if (feasible(std::vector<double>(n, mid))) {
        lo = mid;
      } else {
        hi = mid;
      }
      ++result.iterations;
    }
    gamma = lo;
  }

  if (gamma <= 1e-9) {
    // Only tolerance-level feasibility: treat as no feasible point.
    if (min_eigenvalue(g.matrix()) <= 1e-9) {
      throw Error(Errc::NoFeasiblePoint, "no positive efficiency is feasible with this probe");
    }
    const SynthesisResult fallback = synthesize(ss);
    result.gammas = EfficiencyMatrix(fallback.machine.gammas);
    result.probe = ProbeSpec::phase_vector(fallback.machine.branch_phases);
    result.method = "fallback";
  } else {
    std::vector<double> gammas(n, gamma);
    if (policy == SearchPolicy::PerStateCoordinate) {
      result.method = "coordinate";
      for (std::size_t sweep = 0; sweep < 200; ++sweep) {
        double change = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          if (gammas[i] >= 1.0) continue;
          std::vector<double> trial = gammas;
          trial[i] = 1.0;
          double lo = gammas[i];
          if (feasible(trial)) {
            lo = 1.0;
          } else {
            double hi = 1.0;
            while (hi - lo > 1e-10) {
              trial[i] = 0.5 * (lo + hi);
              if (feasible(trial)) {
                lo = trial[i];
              } else {
                hi = trial[i];
              }
            }
          }
          change = std::max(change, lo - gammas[i]);
          gammas[i] = lo;
        }
        ++result.iterations;
        if (change < 1e-6) break;
      }
    }
    result.gammas = EfficiencyMatrix(gammas);
  }

  const FeasibilityVerdict verdict = check_probabilistic(ss, result.gammas, result.probe);
  if (!verdict.feasible) {
    throw Error(Errc::NoFeasiblePoint, "search ended at an infeasible point");
  }
  result.mean_gamma = result.gammas.mean();
  result.boundary_lambda_min = min_eigenvalue(
      probabilistic_residual(g.matrix(), result.gammas, result.probe.gram_matrix()));
  return result;
}

}  // namespace qnot
