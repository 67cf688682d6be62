// Copyright 2026 The qaoakit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace qaoa {

/// Base class for all qaoakit errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed instance input (edge-list text, headers, bad edges).
class ParseError : public Error {
 public:
  enum class Kind {
    BadHeader,
    MalformedLine,
    VertexOutOfRange,
    SelfLoop,
    DuplicateEdge,
  };

  ParseError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// A computation would exceed a configured resource cap (qubit count,
/// basis size, canonicalization size).
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// An evaluation or iteration budget was exhausted.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// The request is outside the domain of the operation (wrong degree,
/// infeasible parameters, regime violations).
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

}  // namespace qaoa
