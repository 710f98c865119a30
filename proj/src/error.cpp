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

#include "qnot/error.hpp"

namespace qnot {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotSquare: return "NotSquare";
    case Errc::NotHermitian: return "NotHermitian";
    case Errc::NotPSD: return "NotPSD";
    case Errc::GramMismatch: return "GramMismatch";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::WrongDimension: return "WrongDimension";
    case Errc::NotNormalized: return "NotNormalized";
    case Errc::ZeroOverlap: return "ZeroOverlap";
    case Errc::LinearlyDependentPair: return "LinearlyDependentPair";
    case Errc::LinearlyDependent: return "LinearlyDependent";
    case Errc::InvalidProbeGram: return "InvalidProbeGram";
    case Errc::InvalidProbe: return "InvalidProbe";
    case Errc::InvalidGamma: return "InvalidGamma";
    case Errc::InfeasibleGamma: return "InfeasibleGamma";
    case Errc::ZeroSuccess: return "ZeroSuccess";
    case Errc::DegenerateDeterminant: return "DegenerateDeterminant";
    case Errc::NoFeasiblePoint: return "NoFeasiblePoint";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace qnot
