// Copyright 2026 The mexc Authors.
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

#ifndef MEXC_ERRORS_H_
#define MEXC_ERRORS_H_

#include <stdexcept>
#include <string>

namespace mexc {

// Malformed or out-of-range input: bad files, length mismatches, size caps.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation was called with arguments violating its stated precondition
// (e.g. X not in dom f, I not contained in X \ Y).
class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

// A relation that must hold by construction did not. Always a bug.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Exact arithmetic left the representable range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace mexc

#endif  // MEXC_ERRORS_H_
