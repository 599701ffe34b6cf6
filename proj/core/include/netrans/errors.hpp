// netrans/errors.hpp

// Copyright 2026 netrans contributors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef NETRANS_ERRORS_HPP
#define NETRANS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace netrans {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when an operation receives empty input it cannot act on.
struct EmptyInputError : Error {
  using Error::Error;
};

// Malformed line in a data file. line is 1-based; 0 means "not line-addressable".
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t line_no = 0)
      : Error(line_no ? "line " + std::to_string(line_no) + ": " + what : what),
        line(line_no) {}
  std::size_t line;
};

// Data that parsed but violates a structural invariant.
struct InvariantViolation : Error {
  using Error::Error;
};

struct UsageError : Error {
  using Error::Error;
};

}  // namespace netrans

#endif  // NETRANS_ERRORS_HPP
