// Copyright 2026 The mwpsas Authors
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

#ifndef MWPSAS_ERRORS_HPP_
#define MWPSAS_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace mwpsas {

/// Base class of all domain errors. The CLI maps any Error to exit code 1;
/// what() always starts with the concrete error name so diagnostics are
/// greppable.
class Error : public std::runtime_error {
 public:
  Error(const std::string& kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg) {}
};

/// Some M-id is referenced by no element of N.
class CoverageError : public Error {
 public:
  explicit CoverageError(const std::string& msg) : Error("CoverageError", msg) {}
};

/// A weight is zero, or the instance totals risk 64-bit overflow.
class WeightError : public Error {
 public:
  explicit WeightError(const std::string& msg) : Error("WeightError", msg) {}
};

/// machines < 1 or machines >= |N|.
class MachineCountError : public Error {
 public:
  explicit MachineCountError(const std::string& msg) : Error("MachineCountError", msg) {}
};

/// An id is out of range or duplicated where a set is expected.
class IdError : public Error {
 public:
  explicit IdError(const std::string& msg) : Error("IdError", msg) {}
};

/// Blocks are not disjoint, do not cover N, or a block is empty.
class PartitionError : public Error {
 public:
  explicit PartitionError(const std::string& msg) : Error("PartitionError", msg) {}
};

/// Checked 64-bit arithmetic would wrap.
class OverflowError : public Error {
 public:
  explicit OverflowError(const std::string& msg) : Error("OverflowError", msg) {}
};

/// An operation restricted to the M1/N1 variants was applied elsewhere.
class VariantError : public Error {
 public:
  explicit VariantError(const std::string& msg) : Error("VariantError", msg) {}
};

/// Malformed 3-partition input (wrong count, bad sum, or bounds violated).
class Part3FormatError : public Error {
 public:
  explicit Part3FormatError(const std::string& msg) : Error("Part3FormatError", msg) {}
};

/// A constructor precondition does not hold.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& msg) : Error("PreconditionError", msg) {}
};

/// Bad generator parameters.
class ParameterError : public Error {
 public:
  explicit ParameterError(const std::string& msg) : Error("ParameterError", msg) {}
};

/// Malformed text input; carries the 1-based line number.
class SyntaxError : public Error {
 public:
  SyntaxError(int line, const std::string& msg)
      : Error("SyntaxError", "line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// A partition file names a different instance than the one supplied.
class DigestMismatchError : public Error {
 public:
  explicit DigestMismatchError(const std::string& msg) : Error("DigestMismatch", msg) {}
};

/// A self-check failed; indicates a bug, never an expected input condition.
class InternalInvariantError : public Error {
 public:
  explicit InternalInvariantError(const std::string& msg)
      : Error("InternalInvariantError", msg) {}
};

}  // namespace mwpsas

#endif  // MWPSAS_ERRORS_HPP_
