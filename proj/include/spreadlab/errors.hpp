// Copyright 2026 The spreadlab Authors
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

#ifndef SPREADLAB_ERRORS_HPP_
#define SPREADLAB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace spreadlab {

// Base class for every domain error raised by the library. The CLI maps
// these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed edge-list input. `line()` is 1-based, 0 when not line-specific.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// The input graph is outside the class an operation is defined on
// (not cubic, not claw-free, disconnected, K_4, ...).
class GraphClassError : public Error {
 public:
  using Error::Error;
};

// Bad parameters: out-of-range vertex, infeasible generator request, ...
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace spreadlab

#endif  // SPREADLAB_ERRORS_HPP_
