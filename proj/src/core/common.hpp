/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 cliquepart contributors
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef CLIQUEPART_CORE_COMMON_HPP
#define CLIQUEPART_CORE_COMMON_HPP

#include <stdexcept>
#include <string>

namespace cliquepart {

// Tolerance layering: residual/permissibility slack < simplex optimality
// tolerance < bound comparison slack used when fathoming. Keeping them an
// order of magnitude apart prevents simplex noise from flipping a fathoming
// decision.
inline constexpr double kFeasEps = 1e-9;
inline constexpr double kLpTol = 1e-7;
inline constexpr double kBoundEps = 1e-6;

inline constexpr double kInf = 1e300;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text; message names the offending 1-based line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& msg)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Instance exceeds a documented size cap (oracle node limit, relaxed-ILP cap).
class SizeError : public Error {
 public:
  using Error::Error;
};

}  // namespace cliquepart

#endif  // CLIQUEPART_CORE_COMMON_HPP
