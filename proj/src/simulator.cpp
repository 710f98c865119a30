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

#include "qnot/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "qnot/error.hpp"

namespace qnot {

namespace {

struct Evolved {
  CVector success_block;  // system amplitudes paired with P_0
  double success = 0.0;
  double failure = 0.0;
};

Evolved evolve(const Machine& m, const QuditState& s) {
  if (s.dim() != m.system_dim) {
    std::ostringstream os;
    os << "state has dimension " << s.dim() << ", machine expects " << m.system_dim;
    throw Error(Errc::DimensionMismatch, os.str());
  }
  const std::size_t np = m.probe_dim;
  CVector in(m.dim());
  for (std::size_t k = 0; k < s.dim(); ++k) in[k * np] = s[k];
  const CVector v = m.unitary.apply(in);

  Evolved out;
  out.success_block.resize(m.system_dim);
  for (std::size_t k = 0; k < m.system_dim; ++k) {
    out.success_block[k] = v[k * np];
    for (std::size_t p = 1; p < np; ++p) out.failure += std::norm(v[k * np + p]);
  }
  out.success = norm2(out.success_block);
  return out;
}

}  // namespace

bool SimulationReport::all_green() const noexcept {
  return std::none_of(states.begin(), states.end(),
                      [](const StateRecord& r) { return r.flagged; });
}

CVector postselected_output(const Machine& m, const QuditState& s) {
  Evolved e = evolve(m, s);
  if (e.success < tol::kZeroSuccess) {
    throw Error(Errc::ZeroSuccess, "success outcome has vanishing probability", {}, e.success);
  }
  const double scale = 1.0 / std::sqrt(e.success);
  for (auto& z : e.success_block) z *= scale;
  return e.success_block;
}

StateRecord run_exact(const Machine& m, const QuditState& s) {
  Evolved e = evolve(m, s);
  if (e.success < tol::kZeroSuccess) {
    throw Error(Errc::ZeroSuccess, "success outcome has vanishing probability", {}, e.success);
  }
  const QuditState t = target_state(s, m.target);
  const cplx overlap = dotc(t.amps(), e.success_block) / std::sqrt(e.success);

  StateRecord rec;
  rec.success_prob = e.success;
  rec.failure_prob = e.failure;
  rec.fidelity = std::min(std::abs(overlap), 1.0);
  double phase = std::arg(overlap);
  if (phase < 0.0) phase += 2.0 * std::numbers::pi;
  rec.global_phase = phase;
  return rec;
}

StateRecord run_monte_carlo(const Machine& m, const QuditState& s, std::uint64_t shots,
                            std::uint64_t seed) {
  if (shots == 0) {
    throw Error(Errc::InvalidArgument, "at least one shot is required");
  }
  StateRecord rec;
  try {
    rec = run_exact(m, s);
  } catch (const Error& err) {
    if (err.code() != Errc::ZeroSuccess) throw;
    const Evolved e = evolve(m, s);
    rec.success_prob = e.success;
    rec.failure_prob = e.failure;
    rec.note = "success branch vanishes";
  }
  std::mt19937_64 rng(seed);
  std::uint64_t hits = 0;
  for (std::uint64_t k = 0; k < shots; ++k) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    if (u < rec.success_prob) ++hits;
  }
  rec.mc_success = hits;
  rec.shots = shots;
  return rec;
}

std::uint64_t derive_seed(std::uint64_t seed, std::size_t index) noexcept {
  // splitmix64 finalizer over seed + index * golden ratio
  std::uint64_t z = seed + (static_cast<std::uint64_t>(index) + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

SimulationReport verify_machine(const Machine& m, const StateSet& ss) {
  if (ss.dim() != m.system_dim) {
    throw Error(Errc::DimensionMismatch, "state set and machine dimensions differ");
  }
  SimulationReport report;
  report.mode = SimulationMode::Exact;
  for (std::size_t i = 0; i < ss.size(); ++i) {
    StateRecord rec;
    try {
      rec = run_exact(m, ss[i]);
    } catch (const Error& err) {
      if (err.code() != Errc::ZeroSuccess) throw;
      const Evolved e = evolve(m, ss[i]);
      rec.success_prob = e.success;
      rec.failure_prob = e.failure;
      rec.flagged = true;
      rec.note = "success branch vanishes";
    }
    rec.index = i;
    std::ostringstream note;
    if (!rec.flagged && rec.fidelity < 1.0 - tol::kVerify) {
      rec.flagged = true;
      note << "fidelity " << rec.fidelity << " below 1 - 1e-8; ";
    }
    if (i < m.gammas.size() && std::abs(rec.success_prob - m.gammas[i]) > tol::kVerify) {
      rec.flagged = true;
      note << "success probability " << rec.success_prob << " differs from gamma "
           << m.gammas[i] << "; ";
    }
    if (std::abs(rec.success_prob + rec.failure_prob - 1.0) > tol::kConservation) {
      rec.flagged = true;
      note << "probabilities sum to " << rec.success_prob + rec.failure_prob << "; ";
    }
    if (rec.note.empty()) rec.note = note.str();
    report.states.push_back(std::move(rec));
  }
  return report;
}

SimulationReport verify_machine_mc(const Machine& m, const StateSet& ss, std::uint64_t shots,
                                   std::uint64_t seed) {
  SimulationReport report = verify_machine(m, ss);
  report.mode = SimulationMode::MonteCarlo;
  report.seed = seed;
  report.shots = shots;
  report.rng = std::string(kRngName);
  for (auto& rec : report.states) {
    const StateRecord sampled = run_monte_carlo(m, ss[rec.index], shots, derive_seed(seed, rec.index));
    rec.mc_success = sampled.mc_success;
    rec.shots = shots;
  }
  return report;
}

}  // namespace qnot
