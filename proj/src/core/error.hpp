// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 cohort-miner developers

#ifndef COHORTMINER_CORE_ERROR_HPP_
#define COHORTMINER_CORE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace cohortminer {

enum class ErrorKind {
  argument,  // caller passed something unusable
  io,        // file unreadable/unwritable
  format,    // file exists but is not in the expected format
  data,      // well-formed input that violates a contract (single-class training set, ...)
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace cohortminer

#endif  // COHORTMINER_CORE_ERROR_HPP_
