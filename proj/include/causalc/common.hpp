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

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace causalc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Every failure mode raised by the library. CLI maps any of these to exit
// code 2; validation-style APIs return reports instead of throwing.
enum class ErrorCode {
  BackendMismatch,
  UnsupportedDimension,
  UnknownElement,
  UnknownPoint,
  UnknownSystem,
  UnknownLeg,
  CycleDetected,
  LegCollision,
  LegMismatch,
  DimensionMismatch,
  DimensionCap,
  ResourceMissing,
  KeyLengthMismatch,
  TooFewPorts,
  NotLastNormalKey,
  KeyNotPresent,
  NotInCausalFuture,
  NormalEncryptionPresent,
  SuffixMismatch,
  PortMergeForbidden,
  LocationMismatch,
  HypothesisViolated,
  CoarseMismatch,
  GatePointsPresent,
  ArityMismatch,
  TooManyPoints,
  LayoutMismatch,
  InvalidCircuit,
  InvalidScript,
  ParseError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool ok, ErrorCode code, const std::string& message) {
  if (!ok) fail(code, message);
}

// Numeric conventions shared across modules. Structural tolerances guard
// invariants (hermiticity, trace, completeness); the equivalence tolerance is
// the default radius for channel-equality tests. Both are overridable at the
// call sites that take an explicit tol.
inline constexpr double kStructuralTol = 1e-9;
inline constexpr double kEquivalenceTol = 1e-8;

// Dense simulation refuses to build states wider than this many qubits.
inline constexpr int kDefaultMaxQubits = 12;

}  // namespace causalc
