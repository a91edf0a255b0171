/**************************************************************************
 * include/galtower/errors.hpp
 *
 * Copyright 2026 The galtower Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <stdexcept>
#include <string>

namespace galtower {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  virtual const char* kind() const noexcept { return "Error"; }
};

#define GALTOWER_DEFINE_ERROR(Name)                                    \
  class Name : public Error {                                          \
   public:                                                             \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    const char* kind() const noexcept override { return #Name; }       \
  };

// exactfield
GALTOWER_DEFINE_ERROR(InvalidField)
GALTOWER_DEFINE_ERROR(DivisionByZero)
GALTOWER_DEFINE_ERROR(FieldTooLarge)
GALTOWER_DEFINE_ERROR(DegreeOverflow)

// unipoly
GALTOWER_DEFINE_ERROR(ConstantPolynomial)
GALTOWER_DEFINE_ERROR(NotReducible)
GALTOWER_DEFINE_ERROR(PresentationFailure)

// tower
GALTOWER_DEFINE_ERROR(ReducibleBinomial)
GALTOWER_DEFINE_ERROR(InvalidTowerSpec)
GALTOWER_DEFINE_ERROR(StrategyPreconditionFailed)
GALTOWER_DEFINE_ERROR(InvariantViolation)

// exactla
GALTOWER_DEFINE_ERROR(DimensionMismatch)
GALTOWER_DEFINE_ERROR(NoSolution)
GALTOWER_DEFINE_ERROR(NotAnAlgebra)

// operators
GALTOWER_DEFINE_ERROR(SplitFailure)
GALTOWER_DEFINE_ERROR(NotASubfield)

// symmetry
GALTOWER_DEFINE_ERROR(NotASubgroup)
GALTOWER_DEFINE_ERROR(NotStable)
GALTOWER_DEFINE_ERROR(EquivalenceViolation)
GALTOWER_DEFINE_ERROR(GroupTooLarge)

// correspondence
GALTOWER_DEFINE_ERROR(CrossCheckFailure)
GALTOWER_DEFINE_ERROR(FormulaMismatch)

// cli
GALTOWER_DEFINE_ERROR(UnknownName)
GALTOWER_DEFINE_ERROR(ForwardReference)
GALTOWER_DEFINE_ERROR(CorruptCache)

#undef GALTOWER_DEFINE_ERROR

/// Syntax error in an expression or tower file; carries a 1-based position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error("ParseError at " + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  const char* kind() const noexcept override { return "ParseError"; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace galtower
