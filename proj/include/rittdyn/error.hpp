// Copyright 2026 The rittdyn Authors
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
#ifndef RITTDYN_ERROR_HPP_
#define RITTDYN_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace rittdyn {

enum class ErrorKind {
  kPrecondition,  // caller violated a documented precondition
  kNumeric,       // root finding, tracking or rationalization failed
  kInternal,      // a consistency check on computed data failed
  kSyntax,        // expression parsing
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void ThrowPrecondition(const std::string& what) {
  throw Error(ErrorKind::kPrecondition, what);
}
[[noreturn]] inline void ThrowNumeric(const std::string& what) {
  throw Error(ErrorKind::kNumeric, what);
}
[[noreturn]] inline void ThrowInternal(const std::string& what) {
  throw Error(ErrorKind::kInternal, what);
}

}  // namespace rittdyn

#endif  // RITTDYN_ERROR_HPP_
