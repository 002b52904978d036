// Copyright 2026 The feds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FEDS_ERRORS_HPP_
#define FEDS_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace feds {

enum class Errc {
  kInvalidSide,
  kLengthMismatch,
  kMissingChunk,
  kRangeViolation,
  kOddLength,
  kShapeMismatch,
  kGeometryMismatch,
  kInvalidIv,
  kIntegrityFailure,
  kLikelyWrongKey,
  kBadFormat,
  kDivideByZero,
  kMissingShare,
  kDuplicateIndex,
  kInsufficientShares,
  kCanaryMismatch,
  kInsufficientNodes,
  kNoTrustedNode,
  kNodeWriteFailure,
  kDigestMismatch,
  kUnrecoverable,
  kChecksumMismatch,
  kEmptyInput,
  kDegenerateVariance,
  kIoError,
  kConfigError,
};

const char* errc_name(Errc c);

// Single exception type carrying a stable error code; call sites switch on
// code() rather than on the message text.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace feds

#endif  // FEDS_ERRORS_HPP_
