// Copyright 2026 The symdyn authors
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

#ifndef SYMDYN_ERROR_HPP
#define SYMDYN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace symdyn {

// Error categories mirrored one-to-one by the C API status codes.
enum class ErrorCode : int {
  ok = 0,
  invalid_argument = 1,
  model_mismatch = 2,
  parse = 3,
  unsupported = 4,
  budget = 5,
  domain = 6,
  support = 7,
  containment = 8,
  certificate = 9,
  io = 10,
  internal = 11,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace symdyn

#endif  // SYMDYN_ERROR_HPP
