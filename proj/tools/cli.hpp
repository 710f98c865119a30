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

#include <ostream>

namespace qnot::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kMalformed = 2,
  kNotSynthesizable = 3,
  kVerificationFailed = 4,
  kBoundDisagreement = 5,
  kDegenerateDeterminant = 6,
};

// Entry point of the qnot tool. Never throws; every outcome maps to an exit
// code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qnot::cli
