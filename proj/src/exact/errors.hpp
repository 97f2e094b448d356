// Copyright 2026 The dioph Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dioph {

// Base of every error raised by the library. The C API maps each subclass to
// a status code; the CLI maps those to process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input or a violated precondition.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A real-place comparison stayed undecided at the configured precision cap.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

// Dimension, enumeration or point-count cap exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Reading or writing a file failed.
class IoError : public Error {
 public:
  using Error::Error;
};

// A guarantee of the underlying theorem failed to materialize. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

// Knobs shared by every operation that can escalate precision or enumerate.
struct Limits {
  unsigned precision_cap_bits = 8192;
  unsigned initial_bits = 64;
  unsigned dimension_limit = 10;
  std::size_t point_cap = 2'000'000;
  std::size_t node_cap = 200'000'000;
};

}  // namespace dioph
