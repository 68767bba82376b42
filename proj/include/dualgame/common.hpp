// Copyright 2026 The dualgame Authors
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

#ifndef DUALGAME_COMMON_HPP
#define DUALGAME_COMMON_HPP

#include <complex>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace dualgame {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Numeric tolerances used by validation and verdict logic throughout the
/// library.  Construction-time checks (norms, hermiticity, positivity) use
/// the tight values; derived quantities that have passed through an
/// eigensolver are compared with the looser `eig` value.
namespace tol {
inline constexpr double norm = 1e-9;
inline constexpr double herm = 1e-9;
inline constexpr double psd = 1e-9;
inline constexpr double eig = 1e-8;
}  // namespace tol

/// Base class for all errors thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tensor factors or operator dimensions do not line up, or a construction
/// would exceed the configured dimension cap.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A matrix does not have the shape or symmetry an operation requires.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A state-like object (pure state, density matrix, distribution) fails its
/// defining invariants.
class StateError : public Error {
 public:
  using Error::Error;
};

/// An argument is out of range or otherwise invalid for the operation.
class ArgError : public Error {
 public:
  using Error::Error;
};

/// A game scenario is internally inconsistent.
class ScenarioError : public Error {
 public:
  using Error::Error;
};

/// A joint distribution table fails its invariants.
class DistError : public Error {
 public:
  using Error::Error;
};

/// A scenario file could not be parsed; carries the offending field path.
class ParseError : public Error {
 public:
  ParseError(std::string field, const std::string& message)
      : Error(field.empty() ? message : field + ": " + message),
        field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// Largest total Hilbert-space dimension the library will construct.
/// Defaults to 64; the environment variable DUALGAME_MAX_DIM overrides it.
/// Read once per process.
inline std::size_t max_dimension() {
  static const std::size_t cap = [] {
    if (const char* env = std::getenv("DUALGAME_MAX_DIM")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end != nullptr && *end == '\0' && v > 0 && v <= (1ull << 20)) {
        return static_cast<std::size_t>(v);
      }
    }
    return std::size_t{64};
  }();
  return cap;
}

/// Formats a double with 12 significant digits, the precision used for all
/// human-readable numeric output so that regression diffs stay meaningful.
inline std::string format_g12(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

/// Round-trips a double through its 12-significant-digit decimal form.
/// Used when embedding results in reports so that the machine-readable and
/// human-readable views agree exactly.
inline double round_g12(double value) {
  return std::strtod(format_g12(value).c_str(), nullptr);
}

}  // namespace dualgame

#endif  // DUALGAME_COMMON_HPP
