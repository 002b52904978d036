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

#include "feds/errors.hpp"

namespace feds {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::kInvalidSide: return "InvalidSide";
    case Errc::kLengthMismatch: return "LengthMismatch";
    case Errc::kMissingChunk: return "MissingChunk";
    case Errc::kRangeViolation: return "RangeViolation";
    case Errc::kOddLength: return "OddLength";
    case Errc::kShapeMismatch: return "ShapeMismatch";
    case Errc::kGeometryMismatch: return "GeometryMismatch";
    case Errc::kInvalidIv: return "InvalidIv";
    case Errc::kIntegrityFailure: return "IntegrityFailure";
    case Errc::kLikelyWrongKey: return "LikelyWrongKey";
    case Errc::kBadFormat: return "BadFormat";
    case Errc::kDivideByZero: return "DivideByZero";
    case Errc::kMissingShare: return "MissingShare";
    case Errc::kDuplicateIndex: return "DuplicateIndex";
    case Errc::kInsufficientShares: return "InsufficientShares";
    case Errc::kCanaryMismatch: return "CanaryMismatch";
    case Errc::kInsufficientNodes: return "InsufficientNodes";
    case Errc::kNoTrustedNode: return "NoTrustedNode";
    case Errc::kNodeWriteFailure: return "NodeWriteFailure";
    case Errc::kDigestMismatch: return "DigestMismatch";
    case Errc::kUnrecoverable: return "Unrecoverable";
    case Errc::kChecksumMismatch: return "ChecksumMismatch";
    case Errc::kEmptyInput: return "EmptyInput";
    case Errc::kDegenerateVariance: return "DegenerateVariance";
    case Errc::kIoError: return "IoError";
    case Errc::kConfigError: return "ConfigError";
  }
  return "UnknownError";
}

}  // namespace feds
