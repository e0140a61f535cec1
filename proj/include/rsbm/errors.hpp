// Copyright 2026 The RSBM Authors.
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

#ifndef RSBM_ERRORS_HPP_
#define RSBM_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <vector>

namespace rsbm {

// Base for every error raised by the library. The CLI maps the concrete
// subclasses onto exit codes: validation 1, resource 2, I/O 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad parameters or malformed input. Carries the individual violations.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what,
                           std::vector<std::string> details = {})
      : Error(what), details_(std::move(details)) {}

  const std::vector<std::string>& details() const { return details_; }

 private:
  std::vector<std::string> details_;
};

// A configured cap (enumeration size, partition count, subset count) would
// be exceeded.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, double requested, double cap)
      : Error(what), requested_(requested), cap_(cap) {}

  double requested() const { return requested_; }
  double cap() const { return cap_; }

 private:
  double requested_;
  double cap_;
};

// Rejection sampling gave up after max_attempts draws.
class RejectionFailure : public Error {
 public:
  RejectionFailure(const std::string& what, long attempts)
      : Error(what), attempts_(attempts) {}

  long attempts() const { return attempts_; }

 private:
  long attempts_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace rsbm

#endif  // RSBM_ERRORS_HPP_
