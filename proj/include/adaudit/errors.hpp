// Copyright 2026 The adaudit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ADAUDIT_ERRORS_HPP
#define ADAUDIT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace adaudit {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parameter outside its documented range (sketch epsilon/delta, key sizes...).
struct InvalidParameterError : Error {
  using Error::Error;
};

// Sketches with different params or hash seeds cannot be merged or summed.
struct IncompatibleSketchError : Error {
  using Error::Error;
};

struct MalformedHeaderError : Error {
  using Error::Error;
};

struct TruncatedPayloadError : Error {
  using Error::Error;
};

// Byte string is not a valid group element (or is the identity).
struct InvalidElementError : Error {
  using Error::Error;
};

struct IndexNotInRosterError : Error {
  using Error::Error;
};

struct LengthMismatchError : Error {
  using Error::Error;
};

struct ShapeMismatchError : Error {
  using Error::Error;
};

// Report set does not cover the expected (sub-)roster; signals that the
// fault-tolerance round is needed (or has itself failed).
struct IncompleteRosterError : Error {
  using Error::Error;
};

struct WrongRoundError : Error {
  using Error::Error;
};

struct UnknownSenderError : Error {
  using Error::Error;
};

struct DuplicateReportError : Error {
  using Error::Error;
};

struct OutOfRangeError : Error {
  using Error::Error;
};

// Unblinded OPRF output failed the y'^e == H(x) check: the evaluator
// misbehaved or the response was corrupted.
struct InconsistentEvaluationError : Error {
  using Error::Error;
};

// Retryable transport failure.
struct TransportError : Error {
  using Error::Error;
};

struct StaleObservationError : Error {
  using Error::Error;
};

struct EmptyDistributionError : Error {
  using Error::Error;
};

// Text-file parse failure with position information.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line(line),
        column(column) {}
  std::size_t line = 0;
  std::size_t column = 0;
};

}  // namespace adaudit

#endif  // ADAUDIT_ERRORS_HPP
