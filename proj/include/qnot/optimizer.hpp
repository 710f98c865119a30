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

// Success-probability optimization for probabilistic conjugate machines.
//
// For three linearly independent states with overlaps t_ij e^{i theta_ij},
// equal efficiencies gamma and probe phases (0, 2 theta_12, 2 theta_13), the
// residual matrix is (1 - gamma) N(gamma) where N has unit diagonal and
// N_23 = t_23 e^{i theta_23} (1 - gamma e^{-2 i delta}) / (1 - gamma),
// delta = theta_12 - theta_13 + theta_23. Its PSD conditions reduce to
//
//   a g^2 + 2 g (2 s - a) + a <= 0      (det N >= 0)
//   b g^2 + 2 g (2 s - b) + b <= 0      (1 - |N_23|^2 >= 0)
//
// with a = -det G, b = t_23^2 - 1 and s = t_23^2 sin^2 delta. Both quadratics
// have roots r <= 1 <= 1/r; the bound is the smaller of the two r.

#pragma once

#include <cstddef>
#include <string>

#include "qnot/feasibility.hpp"
#include "qnot/states.hpp"

namespace qnot {

struct TripleBoundInput {
  double t12 = 0.0;
  double t13 = 0.0;
  double t23 = 0.0;
  double theta12 = 0.0;
  double theta13 = 0.0;
  double theta23 = 0.0;

  static TripleBoundInput from_gram(const GramMatrix& g);

  double delta() const noexcept { return theta12 - theta13 + theta23; }
  // -det of the Gram matrix
  double a() const noexcept;
  double b() const noexcept { return t23 * t23 - 1.0; }

  // Gram matrix with these magnitudes and phases.
  CMatrix gram() const;
  // Phases (0, 2 theta_12, 2 theta_13).
  ProbeSpec probe() const;
};

struct TripleBound {
  double gamma_max = 0.0;
  double det_root = 0.0;    // smaller root of the determinant quadratic
  double minor_root = 0.0;  // smaller root of the 2x2 minor quadratic
  bool oracle_confirmed = false;
};

// Throws DegenerateDeterminant if |a| < 1e-12 and InvalidArgument when the
// magnitudes leave (0, 1] or a > 0 (no Gram matrix of independent states).
TripleBound gamma_max_triple_detail(const TripleBoundInput& in);
double gamma_max_triple(const TripleBoundInput& in);

// Largest equal gamma in (0, 1] for which G - gamma (conj(G) o P) is PSD
// (lambda_min >= -psd_tol): grid scan at step 1/resolution, then 60
// bisection steps inside the first infeasible cell. Needs a 3-state Gram.
double grid_oracle_triple(const GramMatrix& gram, const ProbeSpec& probe, std::size_t resolution,
                          double psd_tol = 1e-12);

enum class SearchPolicy { EqualGamma, PerStateCoordinate };

struct GammaSearchResult {
  EfficiencyMatrix gammas{std::vector<double>{}};
  ProbeSpec probe;
  double mean_gamma = 0.0;
  std::size_t iterations = 0;
  double boundary_lambda_min = 0.0;
  std::string method;  // "bisection", "coordinate" or "fallback"
};

// Heuristic lower bound on the best mean efficiency with probe phases
// 2 theta_1j. Needs n >= 2 and <psi_1|psi_j> != 0 (ZeroOverlap otherwise).
// When no positive feasible point exists, independent sets fall back to the
// uniform epsilon point of synthesize(); dependent sets throw NoFeasiblePoint.
GammaSearchResult search_gamma(const StateSet& ss, SearchPolicy policy);

}  // namespace qnot
