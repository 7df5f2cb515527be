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

#ifndef KAPTEYN_SRC_AIRY_TABLE_HPP
#define KAPTEYN_SRC_AIRY_TABLE_HPP

namespace kapteyn::detail {

struct AiryPair {
    double ai;
    double aip;
};

// Ai(y) and Ai'(y) for y >= 0. Piecewise Chebyshev interpolants on [0, 12]
// (built once from Boost.Math), Boost.Math directly beyond that.
AiryPair airy(double y);

// Upper end of the tabulated range.
inline constexpr double kAiryTableMax = 12.0;

} // namespace kapteyn::detail

#endif // KAPTEYN_SRC_AIRY_TABLE_HPP
