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
#include <stdexcept>
#include <string>
#include <vector>

namespace qnot {

enum class Errc {
  NotSquare,
  NotHermitian,
  NotPSD,
  GramMismatch,
  DimensionMismatch,
  WrongDimension,
  NotNormalized,
  ZeroOverlap,
  LinearlyDependentPair,
  LinearlyDependent,
  InvalidProbeGram,
  InvalidProbe,
  InvalidGamma,
  InfeasibleGamma,
  ZeroSuccess,
  DegenerateDeterminant,
  NoFeasiblePoint,
  InvalidArgument,
  Parse,
};

const char* errc_name(Errc code) noexcept;

// Every library failure is reported through this type. `indices` and
// `residual` carry the offending entry when one exists (e.g. the (i, j) pair
// of a Gram mismatch and its deviation).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::vector<std::size_t> indices = {},
        double residual = 0.0)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code),
        indices_(std::move(indices)),
        residual_(residual) {}

  Errc code() const noexcept { return code_; }
  const std::vector<std::size_t>& indices() const noexcept { return indices_; }
  double residual() const noexcept { return residual_; }

 private:
  Errc code_;
  std::vector<std::size_t> indices_;
  double residual_;
};

}  // namespace qnot
