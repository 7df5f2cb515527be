/*
*   Copyright 2026 The kapteyn-queue Authors
*
*   Licensed under the Apache License, Version 2.0 (the "License");
*   you may not use this file except in compliance with the License.
*   You may obtain a copy of the License at
*
*       http://www.apache.org/licenses/LICENSE-2.0
*
*   Unless required by applicable law or agreed to in writing, software
*   distributed under the License is distributed on an "AS IS" BASIS,
*   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
*   See the License for the specific language governing permissions and
*   limitations under the License.
*/

#include "kapteyn/error.hpp"

namespace kapteyn {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::OrderTooLarge: return "OrderTooLarge";
        case ErrorCode::NonFinite: return "NonFinite";
        case ErrorCode::DivergentDomain: return "DivergentDomain";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::MaxTermsExceeded: return "MaxTermsExceeded";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::NoBracket: return "NoBracket";
        case ErrorCode::SeriesFailure: return "SeriesFailure";
        case ErrorCode::DegenerateF1: return "DegenerateF1";
        case ErrorCode::BranchViolation: return "BranchViolation";
    }
    return "Unknown";
}

} // namespace kapteyn
