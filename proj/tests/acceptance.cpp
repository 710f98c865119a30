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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "qnot/error.hpp"
#include "qnot/feasibility.hpp"
#include "qnot/optimizer.hpp"
#include "qnot/simulator.hpp"
#include "qnot/synthesis.hpp"
#include "support/examples.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace qnot;
using qnot::testing::Rng;

namespace {

constexpr double kPi = std::numbers::pi;

struct Tally {
  long checks = 0;
  long failures = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      if (failures == 0) first = what;
      ++failures;
    }
  }
};

// Every exact record seen anywhere in the run is checked for conservation.
Tally conservation;

void track(const StateRecord& r) {
  conservation.expect(std::abs(r.success_prob + r.failure_prob - 1.0) <= 1e-12,
                      "probabilities do not sum to one");
}

void track(const SimulationReport& rep) {
  for (const auto& r : rep.states) track(r);
}

bool report(const char* id, const char* title, double limit_s, const std::function<void(Tally&)>& body) {
  Tally t;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(t);
  } catch (const std::exception& e) {
    t.expect(false, std::string("exception: ") + e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_s > 0.0) t.expect(secs < limit_s, "runtime limit exceeded");
  const bool pass = t.failures == 0;
  std::printf("[%s] %s %s: %ld checks, %ld failures, %.2f s", pass ? "PASS" : "FAIL", id, title,
              t.checks, t.failures, secs);
  if (limit_s > 0.0) std::printf(" (limit %.0f s)", limit_s);
  if (!pass) std::printf(" first: %s", t.first.c_str());
  std::printf("\n");
  std::fflush(stdout);
  return pass;
}

void perfect_unitary(Tally& t) {
  Rng rng(1001);
  for (int k = 0; k < 200; ++k) {
    const StateSet ss = testing::random_real_set(rng, 2 + k % 4, 2, TargetMap::Not);
    t.expect(check_perfect_unitary(ss).feasible, "real set judged infeasible");
    const CMatrix u = build_direct_unitary(ss);
    for (std::size_t i = 0; i < ss.size(); ++i) {
      const CVector out = u.apply(ss[i].amps());
      t.expect(fidelity(out, orthogonal_complement(ss[i]).amps()) >= 1.0 - 1e-8,
               "direct unitary misses a complement");
    }
  }
  int made = 0;
  while (made < 200) {
    const StateSet ss = testing::random_set(rng, 2 + made % 4, 2, TargetMap::Not);
    const CMatrix g = gram(ss).matrix();
    double im = 0.0;
    for (const auto& z : g.data()) im = std::max(im, std::abs(z.imag()));
    if (im <= 1e-3) continue;
    ++made;
    t.expect(!check_perfect_unitary(ss).feasible, "complex set judged feasible");
  }
}

void two_state(Tally& t) {
  Rng rng(1002);
  int made = 0;
  while (made < 500) {
    const StateSet ss = testing::random_set(rng, 2, 2, TargetMap::Not);
    if (gram(ss).magnitude(0, 1) <= 1e-6) continue;
    ++made;
    const FeasibilityVerdict v = check_perfect_with_probe(ss);
    t.expect(v.feasible && v.witness.has_value(), "pair judged infeasible");
    if (!v.witness) continue;
    const Machine m = probe_machine(ss, *v.witness);
    for (std::size_t i = 0; i < 2; ++i) {
      const StateRecord r = run_exact(m, ss[i]);
      track(r);
      t.expect(std::abs(r.success_prob - 1.0) <= 1e-8, "probe machine p != 1");
      t.expect(r.fidelity >= 1.0 - 1e-8, "probe machine fidelity < 1");
    }
  }
}

void pipeline(Tally& t) {
  Rng rng(1003);
  const std::uint64_t shots = 100000;
  for (int k = 0; k < 200; ++k) {
    const bool qubit = k < 100;
    const StateSet ss = qubit ? testing::random_set(rng, 2, 2, TargetMap::Not)
                              : testing::random_set(rng, 3, 3, TargetMap::Conjugate);
    const SynthesisResult r = synthesize(ss);
    t.expect(unitarity_defect(r.machine.unitary) <= 1e-9, "machine not unitary");
    const SimulationReport rep = verify_machine_mc(r.machine, ss, shots, 20260000 + k);
    track(rep);
    t.expect(rep.all_green(), "verification flagged a state");
    for (const auto& s : rep.states) {
      const double g = r.machine.gammas[s.index];
      t.expect(std::abs(s.success_prob - g) <= 1e-8, "p differs from gamma");
      t.expect(s.fidelity >= 1.0 - 1e-8, "fidelity below one");
      const double frac = static_cast<double>(s.mc_success.value_or(0)) / shots;
      t.expect(std::abs(frac - g) <= 4.0 * std::sqrt(g * (1.0 - g) / shots), "MC outside 4 sigma");
    }
  }
}

void worked_example(Tally& t) {
  for (double q : {0.2, 0.5, 0.8}) {
    const StateSet ss = testing::example_triple(q, kPi / 2.0);
    const Machine m = synthesize_with(ss, EfficiencyMatrix::uniform(3, 1.0),
                                      ProbeSpec::phase_vector({0.0, kPi / 2.0, 0.0}));
    const SimulationReport rep = verify_machine(m, ss);
    track(rep);
    t.expect(rep.all_green(), "perfect machine flagged");
    for (const auto& s : rep.states)
      t.expect(std::abs(s.success_prob - 1.0) <= 1e-8, "perfect machine p != 1");
  }

  const auto roots = testing::quadratic_roots(0.5, -2.0, 0.5);
  t.expect(roots.has_value(), "quadratic has no real root");
  if (!roots) return;
  const double expected = (*roots)[0];
  for (double q : {0.2, 0.5, 0.8}) {
    const StateSet ss = testing::example_triple(q, 0.0);
    const CMatrix g = gram(ss).matrix();
    const CMatrix p = ProbeSpec::phase_vector({0.0, 0.0, 0.0}).gram_matrix();
    auto psd = [&](double gamma) {
      return is_psd(probabilistic_residual(g, EfficiencyMatrix::uniform(3, gamma), p), 1e-12);
    };
    double lo = 1e-9;
    double hi = 1.0;
    for (int k = 0; k < 60; ++k) {
      const double mid = 0.5 * (lo + hi);
      (psd(mid) ? lo : hi) = mid;
    }
    t.expect(std::abs(lo - expected) <= 1e-6, "boundary misses the quadratic root");
    const Machine m = synthesize_with(ss, EfficiencyMatrix::uniform(3, expected),
                                      ProbeSpec::phase_vector({0.0, 0.0, 0.0}));
    const SimulationReport rep = verify_machine(m, ss);
    track(rep);
    t.expect(rep.all_green(), "boundary machine flagged");
  }
}

void closed_form(Tally& t) {
  Rng rng(1005);
  int made = 0;
  while (made < 100) {
    TripleBoundInput in;
    in.t12 = testing::uniform(rng, 0.01, 0.99);
    in.t13 = testing::uniform(rng, 0.01, 0.99);
    in.t23 = testing::uniform(rng, 0.01, 0.99);
    in.theta12 = testing::uniform(rng, 0.0, 2.0 * kPi);
    in.theta13 = testing::uniform(rng, 0.0, 2.0 * kPi);
    in.theta23 = testing::uniform(rng, 0.0, 2.0 * kPi);
    if (in.a() >= -1e-6) continue;
    ++made;
    const double closed = gamma_max_triple(in);
    const double oracle = grid_oracle_triple(GramMatrix(in.gram()), in.probe(), 1000);
    t.expect(std::abs(closed - oracle) <= 1e-5, "closed form and oracle disagree");
  }
  const TripleBoundInput flat{0.4, 0.5, 0.6, 0.3, 0.9, 0.6};
  t.expect(std::abs(gamma_max_triple(flat) - 1.0) <= 1e-9, "delta = 0 limit");
  const TripleBoundInput thin{0.4, 0.5, 1e-10, 0.3, 0.9, 1.7};
  t.expect(std::abs(gamma_max_triple(thin) - 1.0) <= 1e-9, "t23 -> 0 limit");
}

void properties(Tally& t) {
  Rng rng(1006);
  for (int k = 0; k < 1000; ++k) {
    const bool qubit = k % 2 == 0;
    const std::size_t n = 1 + k % 5;
    const StateSet ss = qubit ? testing::random_set(rng, n, 2, TargetMap::Not)
                              : testing::random_set(rng, n, 2 + k % 4, TargetMap::Conjugate);
    const CMatrix diff = gram_matrix(ss.target_amplitudes()) - gram(ss).matrix().conj();
    t.expect(diff.max_abs() <= 1e-12, "target Gram differs from conj Gram");
  }
  for (int k = 0; k < 500; ++k) {
    const std::size_t n = 2 + k % 3;
    std::vector<double> spectrum(n);
    for (auto& l : spectrum) l = testing::uniform(rng, 0.05, 1.0);
    if (k % 2) spectrum[k % n] = -testing::uniform(rng, 0.05, 1.0);
    const CMatrix m = testing::hermitian_with_spectrum(rng, spectrum);
    t.expect(is_psd(m, 1e-9) == testing::psd_by_principal_minors(m, 1e-12),
             "PSD check disagrees with principal minors");
  }
  for (int k = 0; k < 500; ++k) {
    const std::size_t dim = 2 + k % 6;
    const std::size_t n = 1 + k % 7;
    std::vector<CVector> in;
    for (std::size_t i = 0; i < n; ++i) in.push_back(testing::gaussian_vector(rng, dim));
    const CMatrix w = testing::random_unitary(rng, dim);
    std::vector<CVector> out;
    for (const auto& v : in) out.push_back(w.apply(v));
    const CMatrix u = unitary_completion(in, out);
    t.expect(unitarity_defect(u) <= 1e-9, "completion not unitary");
    std::vector<CVector> mapped;
    for (const auto& v : in) mapped.push_back(u.apply(v));
    t.expect((gram_matrix(mapped) - gram_matrix(in)).max_abs() <= 1e-8, "Gram not preserved");
    for (std::size_t i = 0; i < n; ++i)
      t.expect(testing::max_abs_diff(mapped[i], out[i]) <= 1e-8, "completion misses an output");
  }
  t.checks += conservation.checks;
  t.failures += conservation.failures;
  if (conservation.failures > 0 && t.first.empty()) t.first = conservation.first;
  t.expect(conservation.checks > 0, "no simulations recorded");
}

}  // namespace

int main() {
  bool ok = true;
  ok &= report("AC1", "perfect NOT by a unitary", 5.0, perfect_unitary);
  ok &= report("AC2", "two-state probe machines", 10.0, two_state);
  ok &= report("AC3", "synthesis pipeline with Monte Carlo", 60.0, pipeline);
  ok &= report("AC4", "worked qubit triple", 0.0, worked_example);
  ok &= report("AC5", "closed-form bound vs grid oracle", 0.0, closed_form);
  ok &= report("AC6", "property suite", 0.0, properties);
  return ok ? 0 : 1;
}
