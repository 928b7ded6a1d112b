// Copyright 2026 The qfir Authors
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

#include "qfir/error.h"

namespace qfir {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorKind::NonHermitianInput:
            return "NonHermitianInput";
        case ErrorKind::NoConvergence:
            return "NoConvergence";
        case ErrorKind::IndefiniteInput:
            return "IndefiniteInput";
        case ErrorKind::NonOrthonormalConstraint:
            return "NonOrthonormalConstraint";
        case ErrorKind::WrongArity:
            return "WrongArity";
        case ErrorKind::ArityMismatch:
            return "ArityMismatch";
        case ErrorKind::AliasedTone:
            return "AliasedTone";
        case ErrorKind::ScaleOverflow:
            return "ScaleOverflow";
        case ErrorKind::ZeroFilter:
            return "ZeroFilter";
        case ErrorKind::NotAContraction:
            return "NotAContraction";
        case ErrorKind::CertificateFailure:
            return "CertificateFailure";
        case ErrorKind::UnnormalizedState:
            return "UnnormalizedState";
        case ErrorKind::NonUniformSampling:
            return "NonUniformSampling";
        case ErrorKind::ParseError:
            return "ParseError";
        case ErrorKind::InvalidArgument:
            return "InvalidArgument";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {
}

}  // namespace qfir
