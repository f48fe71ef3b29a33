/*
   Copyright 2026 The rlak authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef RLAK_ERRORS_HPP
#define RLAK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rlak {

/// All library failures carry a stable machine-readable code alongside the
/// human-readable message.  Codes in use: DivisionByZero, FieldMismatch,
/// OwnerMismatch, ParseError, UnknownGenerator, ResourceBound,
/// MalformedTransform, TooManyRelators, HypothesisFailed, NotInIdeal,
/// SpanningFailure, PreconditionFailed, NotAnIdeal, IterationBoundExceeded,
/// BadInput, Internal.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(const char* code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace rlak

#endif  // RLAK_ERRORS_HPP
