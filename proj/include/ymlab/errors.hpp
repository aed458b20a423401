// Copyright 2026 The ymlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef YMLAB_ERRORS_HPP
#define YMLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ymlab {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Non-finite or otherwise unusable numeric input.
struct NumericError : Error {
  using Error::Error;
};

// Mismatched matrix / vector dimensions.
struct DimensionError : Error {
  using Error::Error;
};

// Velocity requested at a kink of a piecewise path.
struct KinkError : Error {
  using Error::Error;
};

// Parameter outside its admissible range (s outside [0,1], bump support
// touching an endpoint, overlapping bump supports, ...).
struct ParameterError : Error {
  using Error::Error;
};

// Group element outside the principal-logarithm domain.
struct LogBranchError : Error {
  using Error::Error;
};

// Input violates a constraint required by the operation (e.g. non-flat
// link configuration fed to the tree integrator).
struct ConstraintViolationError : Error {
  using Error::Error;
};

// Derivative loses the declared rank (immersion / submersion failure).
struct RankError : Error {
  using Error::Error;
};

// Two charts supposed to cover the same surface disagree at probe points.
struct ChartMismatchError : Error {
  using Error::Error;
};

// Newton iteration for an implicit function failed to converge.
struct NewtonError : Error {
  using Error::Error;
};

// Malformed run configuration; CLI maps this to exit code 2.
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace ymlab

#endif  // YMLAB_ERRORS_HPP
