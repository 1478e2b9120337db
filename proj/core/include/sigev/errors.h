// Copyright 2026 The sigev Authors
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

#ifndef SIGEV_ERRORS_H_
#define SIGEV_ERRORS_H_

#include <stdexcept>
#include <string>

namespace sigev {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-range input.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// An operation was called on a game outside its domain (e.g. the omnipotent
// solution on a noisy detector).
class PreconditionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// The closed-form analysis does not cover the neither-favorable boundary.
class UnsupportedRegionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// CB0 + CB1 <= 0: the payoff region never changes with the prior.
class NoTransitionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A numerical solver failed to produce an equilibrium. Finite games always
// have one, so this indicates a bug rather than a valid outcome.
class SolverError : public Error {
 public:
  using Error::Error;
};

}  // namespace sigev

#endif  // SIGEV_ERRORS_H_
