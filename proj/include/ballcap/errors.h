// Copyright 2026 The ballcap Authors.
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

#ifndef BALLCAP_ERRORS_H_
#define BALLCAP_ERRORS_H_

#include <stdexcept>
#include <string>

namespace ballcap {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A point, weight or parameter violates a documented precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// A kernel series cannot be summed to the requested tolerance.
class DivergenceError : public Error {
 public:
  DivergenceError(const std::string& what, double tail_bound)
      : Error(what), tail_bound_(tail_bound) {}
  double tail_bound() const { return tail_bound_; }

 private:
  double tail_bound_;
};

// Multi-index enumeration would exceed the configured cap.
class CombinatorialCapExceeded : public Error {
 public:
  using Error::Error;
};

// A Gramian has curvature below the PSD tolerance.
class ConditioningError : public Error {
 public:
  using Error::Error;
};

// A monomial has no counterpart in the space (a_{|alpha|} = 0).
class UndefinedCoefficient : public Error {
 public:
  using Error::Error;
};

// An operation refused its input (for example a positive-capacity set handed
// to the unboundedness construction).
class RefusalError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Configuration problems carry the offending key path ("kernel.family").
class ConfigError : public Error {
 public:
  ConfigError(const std::string& key_path, const std::string& message)
      : Error(key_path.empty() ? message : key_path + ": " + message),
        key_path_(key_path) {}
  const std::string& key_path() const { return key_path_; }

 private:
  std::string key_path_;
};

}  // namespace ballcap

#endif  // BALLCAP_ERRORS_H_
