// Copyright 2026 The repcheck Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace repcheck {

enum class ErrorKind {
    NotNormal,
    NotSubgroup,
    UnknownGroup,
    TableVerificationFailed,
    GroupMismatch,
    NotACharacter,
    NotClassConstant,
    NotDescendable,
    WrongGroup,
    NotDichotomic,
    ZeroState,
    IncompleteInstrument,
    UnsupportedInstrument,
    CocycleMismatch,
    IsoNotFound,
    NotProjectiveRep,
    DimensionMismatch,
    DivisionByZero,
};

inline std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotNormal: return "NotNormal";
        case ErrorKind::NotSubgroup: return "NotSubgroup";
        case ErrorKind::UnknownGroup: return "UnknownGroup";
        case ErrorKind::TableVerificationFailed: return "TableVerificationFailed";
        case ErrorKind::GroupMismatch: return "GroupMismatch";
        case ErrorKind::NotACharacter: return "NotACharacter";
        case ErrorKind::NotClassConstant: return "NotClassConstant";
        case ErrorKind::NotDescendable: return "NotDescendable";
        case ErrorKind::WrongGroup: return "WrongGroup";
        case ErrorKind::NotDichotomic: return "NotDichotomic";
        case ErrorKind::ZeroState: return "ZeroState";
        case ErrorKind::IncompleteInstrument: return "IncompleteInstrument";
        case ErrorKind::UnsupportedInstrument: return "UnsupportedInstrument";
        case ErrorKind::CocycleMismatch: return "CocycleMismatch";
        case ErrorKind::IsoNotFound: return "IsoNotFound";
        case ErrorKind::NotProjectiveRep: return "NotProjectiveRep";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

}  // namespace repcheck
