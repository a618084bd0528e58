// Copyright 2026 The PROSE Denoiser Authors
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

#ifndef PROSE_ERROR_HPP_
#define PROSE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace prose {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument violates an operation's precondition (bad hop, length
// mismatch, alpha <= 0, unknown catalog id, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// A value lies outside the mathematical domain of a formula, e.g. a zero
// observation fed to a risk estimate with a reciprocal term.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Inconsistent or insufficient configuration (too few frames to
// initialise noise statistics, non-integer frame length, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Input data is unusable (NaN/Inf samples).
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace prose

#endif  // PROSE_ERROR_HPP_
