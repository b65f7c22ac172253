// Copyright 2026 The stabmub Authors
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

#include "stabmub/error.h"

namespace stabmub {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InverseOfZero:
            return "InverseOfZero";
        case ErrorKind::MixedFields:
            return "MixedFields";
        case ErrorKind::NotIrreducible:
            return "NotIrreducible";
        case ErrorKind::NotFound:
            return "NotFound";
        case ErrorKind::DegenerateFrame:
            return "DegenerateFrame";
        case ErrorKind::IdentityInput:
            return "IdentityInput";
        case ErrorKind::NotInTorus:
            return "NotInTorus";
        case ErrorKind::FrameMismatch:
            return "FrameMismatch";
        case ErrorKind::NotAGroup:
            return "NotAGroup";
        case ErrorKind::SingularShift:
            return "SingularShift";
        case ErrorKind::DegreeTooLarge:
            return "DegreeTooLarge";
        case ErrorKind::InvalidConfig:
            return "InvalidConfig";
        case ErrorKind::IoError:
            return "IoError";
        case ErrorKind::ParseError:
            return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {
}

}  // namespace stabmub
