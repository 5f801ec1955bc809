// Copyright 2026 The alsim Authors.
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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace alsim {

using NodeIndex = std::uint32_t;
using Id = std::uint64_t;
using Port = std::uint32_t;
using Round = std::uint64_t;
using Label = std::int64_t;

// Values mirror alsim_status in the C header.
enum class ErrorCode : int {
  kInvalidArgument = 1,
  kInvalidTopology = 2,
  kInvalidIds = 3,
  kContract = 4,
  kSizeLimit = 5,
  kUnsolvable = 6,
  kParse = 7,
  kIo = 8,
  kUsage = 9,
  kInternal = 10,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool cond, ErrorCode code, const char* what) {
  if (!cond) fail(code, what);
}

}  // namespace alsim
