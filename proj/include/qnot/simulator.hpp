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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qnot/states.hpp"
#include "qnot/synthesis.hpp"

namespace qnot {

namespace tol {
inline constexpr double kVerify = 1e-8;
inline constexpr double kConservation = 1e-12;
inline constexpr double kZeroSuccess = 1e-14;
}  // namespace tol

// Monte Carlo draws use std::mt19937_64 seeded with the given value; each draw
// takes the top 53 bits of one output as a uniform double in [0, 1).
inline constexpr std::string_view kRngName = "mt19937_64/u53";

struct StateRecord {
  std::size_t index = 0;
  double success_prob = 0.0;
  double failure_prob = 0.0;
  double fidelity = 0.0;
  double global_phase = 0.0;
  std::optional<std::uint64_t> mc_success;
  std::uint64_t shots = 0;
  bool flagged = false;
  std::string note;
};

enum class SimulationMode { Exact, MonteCarlo };

struct SimulationReport {
  SimulationMode mode = SimulationMode::Exact;
  std::uint64_t seed = 0;
  std::uint64_t shots = 0;
  std::string rng;
  std::vector<StateRecord> states;

  bool all_green() const noexcept;
};

// System state left after postselecting probe outcome P_0, normalized.
// Throws ZeroSuccess when that outcome has probability below 1e-14.
CVector postselected_output(const Machine& m, const QuditState& s);

StateRecord run_exact(const Machine& m, const QuditState& s);
StateRecord run_monte_carlo(const Machine& m, const QuditState& s, std::uint64_t shots,
                            std::uint64_t seed);

// Runs every member exactly and flags fidelity < 1 - 1e-8, |p - gamma_i| >
// 1e-8, failed probability conservation, or a vanishing success branch.
SimulationReport verify_machine(const Machine& m, const StateSet& ss);
// As verify_machine, plus shot sampling per member. Member i uses the seed
// derive_seed(seed, i).
SimulationReport verify_machine_mc(const Machine& m, const StateSet& ss, std::uint64_t shots,
                                   std::uint64_t seed);

std::uint64_t derive_seed(std::uint64_t seed, std::size_t index) noexcept;

}  // namespace qnot
