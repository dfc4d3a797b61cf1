// Copyright 2026 The alphaconc Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace alphaconc {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or unreadable input (files, JSON). The CLI maps these to exit 2.
class InputError : public Error {
 public:
  using Error::Error;
};

class IoError : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

class SchemaError : public InputError {
 public:
  using InputError::InputError;
};

/// Well-formed input that violates a mathematical precondition. The CLI maps
/// these to exit 3.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class DomainError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NonSquareError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotHermitianError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotPsdError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class RankTolTooAggressiveError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class InvariantViolation : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotIsometryError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ConfigError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

}  // namespace alphaconc
