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

#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "qnot/error.hpp"
#include "qnot/synthesis.hpp"
#include "support/errors.hpp"
#include "support/examples.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace qnot;
using qnot::testing::code_of;
using qnot::testing::Rng;

namespace {

CVector embed(const Machine& m, const QuditState& s) {
  CVector v(m.dim());
  for (std::size_t k = 0; k < m.system_dim; ++k) v[k * m.probe_dim] = s[k];
  return v;
}

// Checks U(psi_i (x) P0) = sqrt(g_i) e^{i phi_i} target_i (x) P0 + (part with
// no P0 component), and returns the worst deviation.
double branch_deviation(const Machine& m, const StateSet& ss) {
  double worst = 0.0;
  for (std::size_t i = 0; i < ss.size(); ++i) {
    const CVector out = m.unitary.apply(embed(m, ss[i]));
    const QuditState t = target_state(ss[i], ss.target());
    const cplx lead = std::polar(std::sqrt(m.gammas[i]), m.branch_phases[i]);
    const CVector success = m.success_projector().apply(out);
    CVector expected(m.dim());
    for (std::size_t s = 0; s < m.system_dim; ++s) expected[s * m.probe_dim] = lead * t[s];
    worst = std::max(worst, testing::max_abs_diff(success, expected));
    // The failure part is exactly what the projector removes.
    CVector rest = out;
    for (std::size_t k = 0; k < rest.size(); ++k) rest[k] -= success[k];
    for (std::size_t s = 0; s < m.system_dim; ++s)
      worst = std::max(worst, std::abs(rest[s * m.probe_dim]));
  }
  return worst;
}

double success_probability(const Machine& m, const QuditState& s) {
  const CVector out = m.success_projector().apply(m.unitary.apply(embed(m, s)));
  double p = 0.0;
  for (const auto& z : out) p += std::norm(z);
  return p;
}

}  // namespace

TEST_SUITE("synthesis") {
  TEST_CASE("singleton and real-Gram sets give perfect machines") {
    const StateSet single({testing::plus_state()}, TargetMap::Not);
    const SynthesisResult r = synthesize(single);
    CHECK(std::abs(r.report.c - 1.0) < 1e-14);
    CHECK(std::abs(r.report.d_max - 1.0) < 1e-14);
    CHECK(r.report.perfect);
    CHECK(r.machine.gammas == std::vector<double>{1.0});
    CHECK(branch_deviation(r.machine, single) < 1e-8);

    const double theta = 0.9;
    const StateSet pair({QuditState::basis(2, 0),
                         QuditState(CVector{std::cos(theta), std::sin(theta)})},
                        TargetMap::Not);
    const SynthesisResult rp = synthesize(pair);
    CHECK(rp.report.perfect);
    CHECK(rp.report.epsilon == 1.0);
    CHECK(unitarity_defect(rp.machine.unitary) < 1e-9);
    for (std::size_t i = 0; i < 2; ++i) CHECK(std::abs(success_probability(rp.machine, pair[i]) - 1.0) < 1e-8);
  }

  TEST_CASE("random complex qutrit triples") {
    Rng rng(41);
    for (int trial = 0; trial < 40; ++trial) {
      const StateSet ss = testing::random_set(rng, 3, 3, TargetMap::Conjugate);
      const SynthesisResult r = synthesize(ss);
      const HermEig e = herm_eig(gram(ss).matrix());
      CHECK_FALSE(r.report.perfect);
      CHECK(std::abs(r.report.epsilon - 0.999 * e.eigenvalues.front() / e.eigenvalues.back()) < 1e-12);
      CHECK(r.machine.probe_dim == 4);
      CHECK(r.machine.dim() == 12);
      CHECK(r.report.gram_residual < 1e-8);
      CHECK(unitarity_defect(r.machine.unitary) < 1e-9);
      CHECK(branch_deviation(r.machine, ss) < 1e-8);
      const CMatrix& c = r.report.c_matrix;
      CHECK(hermitian_deviation(c) < 1e-12);
      const CMatrix m = probabilistic_residual(gram(ss).matrix(),
                                               EfficiencyMatrix(r.machine.gammas),
                                               ProbeSpec::phase_vector({0.0, 0.0, 0.0}).gram_matrix());
      CHECK((c * c.adjoint() - m).max_abs() < 1e-9);
      for (std::size_t i = 0; i < 3; ++i)
        CHECK(std::abs(success_probability(r.machine, ss[i]) - r.machine.gammas[i]) < 1e-8);
    }
  }

  TEST_CASE("synthesize rejects dependent sets") {
    CHECK(code_of([] { synthesize(testing::example_triple(0.5, 0.0)); }) == Errc::LinearlyDependent);
    Rng rng(42);
    const StateSet four = testing::random_set(rng, 3, 2, TargetMap::Not);
    CHECK(code_of([&] { synthesize(four); }) == Errc::LinearlyDependent);
  }

  TEST_CASE("synthesize_with on a real set at gamma one") {
    Rng rng(43);
    const StateSet ss = testing::random_real_set(rng, 3, 3, TargetMap::Conjugate);
    const Machine m = synthesize_with(ss, EfficiencyMatrix::uniform(3, 1.0),
                                      ProbeSpec::phase_vector({0.0, 0.0, 0.0}));
    CHECK(unitarity_defect(m.unitary) < 1e-9);
    for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(success_probability(m, ss[i]) - 1.0) < 1e-8);
  }

  TEST_CASE("worked triple at phi = pi/2 is perfect") {
    const double phi = std::numbers::pi / 2.0;
    for (double q : {0.2, 0.5, 0.7}) {
      const StateSet ss = testing::example_triple(q, phi);
      const ProbeSpec probe = ProbeSpec::phase_vector({0.0, phi, 0.0});
      const CMatrix res = probabilistic_residual(gram(ss).matrix(),
                                                 EfficiencyMatrix::uniform(3, 1.0), probe.gram_matrix());
      CHECK(res.max_abs() < 1e-12);
      const Machine m = synthesize_with(ss, EfficiencyMatrix::uniform(3, 1.0), probe);
      CHECK(unitarity_defect(m.unitary) < 1e-9);
      CHECK(branch_deviation(m, ss) < 1e-8);
      for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(success_probability(m, ss[i]) - 1.0) < 1e-8);
    }
  }

  TEST_CASE("worked triple at phi = 0 sits on the quadratic boundary") {
    const auto roots = testing::quadratic_roots(0.5, -2.0, 0.5);
    REQUIRE(roots.has_value());
    const double gamma = (*roots)[0];
    CHECK(std::abs(gamma - (2.0 - std::sqrt(3.0))) < 1e-15);

    const StateSet ss = testing::example_triple(0.5, 0.0);
    const ProbeSpec probe = ProbeSpec::phase_vector({0.0, 0.0, 0.0});
    const CMatrix g = gram(ss).matrix();
    const CMatrix res = probabilistic_residual(g, EfficiencyMatrix::uniform(3, gamma), probe.gram_matrix());
    CHECK(std::abs(min_eigenvalue(res)) < 1e-9);

    const Machine m = synthesize_with(ss, EfficiencyMatrix::uniform(3, gamma), probe);
    CHECK(unitarity_defect(m.unitary) < 1e-9);
    CHECK(branch_deviation(m, ss) < 1e-8);

    // Grid scan: the last PSD point on a 1e-4 grid brackets the root.
    double last = 0.0;
    for (int k = 1; k <= 10000; ++k) {
      const double x = k * 1e-4;
      const CMatrix r = probabilistic_residual(g, EfficiencyMatrix::uniform(3, x), probe.gram_matrix());
      if (testing::psd_by_principal_minors(r, 1e-12)) last = x;
    }
    CHECK(last <= gamma);
    CHECK(gamma - last < 1e-4);

    CHECK(code_of([&] { synthesize_with(ss, EfficiencyMatrix::uniform(3, 0.5), probe); }) ==
          Errc::InfeasibleGamma);
  }

  TEST_CASE("synthesize_with argument checks") {
    Rng rng(44);
    const StateSet ss = testing::random_set(rng, 2, 2, TargetMap::Not);
    const ProbeSpec fg = ProbeSpec::full_gram(CMatrix::identity(2));
    CHECK(code_of([&] { synthesize_with(ss, EfficiencyMatrix::uniform(2, 0.1), fg); }) ==
          Errc::InvalidProbe);
    CHECK(code_of([&] {
            synthesize_with(ss, EfficiencyMatrix::uniform(2, 0.1), ProbeSpec::phase_vector({0.0}));
          }) == Errc::InvalidProbe);
  }

  TEST_CASE("scaling feasible efficiencies down stays synthesizable") {
    Rng rng(45);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t n = 2 + trial % 3;
      const StateSet ss = testing::random_set(rng, n, n, TargetMap::Conjugate);
      const SynthesisResult r = synthesize(ss);
      const ProbeSpec probe = ProbeSpec::phase_vector(std::vector<double>(n, 0.0));
      for (double s : {1.0, 0.5, 0.01}) {
        const Machine m = synthesize_with(ss, EfficiencyMatrix::uniform(n, s * r.report.epsilon), probe);
        CHECK(unitarity_defect(m.unitary) < 1e-9);
        CHECK(branch_deviation(m, ss) < 1e-8);
      }
    }
  }

  TEST_CASE("perfect and probe machines") {
    Rng rng(46);
    const StateSet real = testing::random_real_set(rng, 3, 2, TargetMap::Not);
    const Machine pm = perfect_machine(real);
    CHECK(pm.probe_dim == 1);
    CHECK(branch_deviation(pm, real) < 1e-8);

    const StateSet pair = testing::example_pair();
    const Machine qm = probe_machine(pair, ProbeSpec::phase_vector({0.0, std::numbers::pi / 2.0}));
    CHECK(qm.probe_dim == 2);
    CHECK(branch_deviation(qm, pair) < 1e-8);
  }
}
