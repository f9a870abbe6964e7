// Copyright 2026 The bispec Authors
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

namespace bispec {

/// Base class of every error the library throws deliberately.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DivisionByZeroError : public Error {
 public:
  explicit DivisionByZeroError(const std::string& what = "division by zero") : Error(what) {}
};

/// Denominator vanishes at an evaluation point, or a Pochhammer ratio hits a
/// zero of the lower parameter before the series terminates.
class PoleError : public Error {
 public:
  explicit PoleError(const std::string& what) : Error(what) {}
};

/// A Laurent expansion would need exponents below the global bound.
class PoleDepthError : public Error {
 public:
  explicit PoleDepthError(const std::string& what) : Error(what) {}
};

/// Integrating a series with a nonzero x^-1 coefficient.
class LogTermError : public Error {
 public:
  explicit LogTermError(const std::string& what = "integration requires a log term (x^-1 present)")
      : Error(what) {}
};

/// Reciprocal of a series whose certified window is identically zero.
class ZeroLeadingTermError : public Error {
 public:
  explicit ZeroLeadingTermError(const std::string& what = "reciprocal of zero leading term")
      : Error(what) {}
};

/// A coefficient was requested beyond a series' certified truncation order,
/// or a residual window shrank to nothing.
class ValidOrderError : public Error {
 public:
  explicit ValidOrderError(const std::string& what) : Error(what) {}
};

/// A series family constructor failed its own eigen-equation validation.
class EigencheckError : public Error {
 public:
  explicit EigencheckError(const std::string& what) : Error(what) {}
};

/// The truncated-kernel solver found an unexpected kernel dimension.
class KernelDimensionError : public Error {
 public:
  explicit KernelDimensionError(const std::string& what) : Error(what) {}
};

/// A homogeneous seed-constraint system left no free parameters at all.
class ConstraintRankError : public Error {
 public:
  explicit ConstraintRankError(const std::string& what) : Error(what) {}
};

}  // namespace bispec
