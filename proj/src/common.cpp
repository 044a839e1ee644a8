// Copyright 2026 The causalc Authors
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

#include "causalc/common.hpp"

namespace causalc {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::BackendMismatch: return "BackendMismatch";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::UnknownPoint: return "UnknownPoint";
    case ErrorCode::UnknownSystem: return "UnknownSystem";
    case ErrorCode::UnknownLeg: return "UnknownLeg";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::LegCollision: return "LegCollision";
    case ErrorCode::LegMismatch: return "LegMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DimensionCap: return "DimensionCap";
    case ErrorCode::ResourceMissing: return "ResourceMissing";
    case ErrorCode::KeyLengthMismatch: return "KeyLengthMismatch";
    case ErrorCode::TooFewPorts: return "TooFewPorts";
    case ErrorCode::NotLastNormalKey: return "NotLastNormalKey";
    case ErrorCode::KeyNotPresent: return "KeyNotPresent";
    case ErrorCode::NotInCausalFuture: return "NotInCausalFuture";
    case ErrorCode::NormalEncryptionPresent: return "NormalEncryptionPresent";
    case ErrorCode::SuffixMismatch: return "SuffixMismatch";
    case ErrorCode::PortMergeForbidden: return "PortMergeForbidden";
    case ErrorCode::LocationMismatch: return "LocationMismatch";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::CoarseMismatch: return "CoarseMismatch";
    case ErrorCode::GatePointsPresent: return "GatePointsPresent";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::TooManyPoints: return "TooManyPoints";
    case ErrorCode::LayoutMismatch: return "LayoutMismatch";
    case ErrorCode::InvalidCircuit: return "InvalidCircuit";
    case ErrorCode::InvalidScript: return "InvalidScript";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace causalc
