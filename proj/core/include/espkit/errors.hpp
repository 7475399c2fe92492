// Copyright 2026 The espkit Authors
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

#include <stdexcept>
#include <string>

namespace espkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** Shape or dimension mismatch between operands. */
class DimensionError : public Error {
 public:
  using Error::Error;
};

/** Iterative kernel failed to converge, or a result left its valid range. */
class NumericsError : public Error {
 public:
  using Error::Error;
};

/** Input violates a documented precondition (sign guard, range, norm). */
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/** Malformed run configuration or input file. */
class ConfigError : public Error {
 public:
  using Error::Error;
};

/** Sampling grid too coarse for the requested detection. */
class ResolutionError : public Error {
 public:
  using Error::Error;
};

}  // namespace espkit
