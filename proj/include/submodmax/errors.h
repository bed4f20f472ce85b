// Copyright 2026 The Authors.
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

#ifndef SUBMODMAX_ERRORS_H_
#define SUBMODMAX_ERRORS_H_

#include <stdexcept>
#include <string>

namespace submodmax {

// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed inputs: out-of-range coordinates, negative weights, non
// submodular tables, mismatched dimensions.
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

class InvalidSubsetError : public InvalidArgumentError {
 public:
  using InvalidArgumentError::InvalidArgumentError;
};

class InvalidBoxError : public InvalidArgumentError {
 public:
  using InvalidArgumentError::InvalidArgumentError;
};

// Estimator mode incompatible with the function kind or ground-set size,
// theta grid not aligned with the time step, and similar run settings.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Instance or result documents that fail to parse. The message names the
// offending field path or the line/column reported by the JSON reader.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace submodmax

#endif  // SUBMODMAX_ERRORS_H_
