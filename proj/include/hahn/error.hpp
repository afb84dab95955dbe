// Copyright 2026 The hahn Authors
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

#ifndef HAHN_ERROR_HPP
#define HAHN_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hahn {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical precondition failed (wrong characteristic, non-monic base, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The available certified precision is not enough to answer.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// Operands live over different coefficient fields.
class FieldMismatch : public DomainError {
 public:
  FieldMismatch() : DomainError("coefficient field mismatch") {}
};

/// An equation has no solution; the witness is the unreachable constant.
class NoSolution : public DomainError {
 public:
  NoSolution(std::string witness)
      : DomainError("no solution: constant " + witness + " is not in the image"), witness_(std::move(witness)) {}
  const std::string& witness() const { return witness_; }

 private:
  std::string witness_;
};

/// Malformed textual input; column is 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t column)
      : Error("syntax error at column " + std::to_string(column) + ": " + what), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

}  // namespace hahn

#endif  // HAHN_ERROR_HPP
