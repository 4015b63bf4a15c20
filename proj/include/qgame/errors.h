// Copyright 2026 The qgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QGAME_ERRORS_H_
#define QGAME_ERRORS_H_

#include <stdexcept>
#include <string>

namespace qgame {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shapes that do not fit together (matrix products, partial traces, ...).
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Input that violates a type invariant: non-finite entries, a basis that is
// not orthonormal, weights that do not sum to one, malformed JSON.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The operation is only implemented for a subset of dimensions.
class UnsupportedDimension : public Error {
 public:
  using Error::Error;
};

// The measured distribution of a state is not a correlated equilibrium of
// the game, so the advantage analysis does not apply.
class NotAnEquilibrium : public Error {
 public:
  NotAnEquilibrium(const std::string& what, double max_violation)
      : Error(what), max_violation_(max_violation) {}
  double max_violation() const { return max_violation_; }

 private:
  double max_violation_;
};

}  // namespace qgame

#endif  // QGAME_ERRORS_H_
