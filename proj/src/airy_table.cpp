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

#include "airy_table.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include <boost/math/special_functions/airy.hpp>

namespace kapteyn::detail {
namespace {

constexpr int kDegree = 18;
constexpr double kWidth = 0.25;
constexpr int kIntervals = static_cast<int>(kAiryTableMax / kWidth);

struct Interval {
    std::array<double, kDegree> ai;
    std::array<double, kDegree> aip;
};

std::vector<Interval> build_table()
{
    std::vector<Interval> table(kIntervals);
    std::array<double, kDegree> fa{};
    std::array<double, kDegree> fp{};
    for (int i = 0; i < kIntervals; ++i) {
        const double mid = (i + 0.5) * kWidth;
        for (int j = 0; j < kDegree; ++j) {
            const double t = std::cos(std::numbers::pi * (j + 0.5) / kDegree);
            const double y = mid + 0.5 * kWidth * t;
            fa[j] = boost::math::airy_ai(y);
            fp[j] = boost::math::airy_ai_prime(y);
        }
        for (int k = 0; k < kDegree; ++k) {
            double sa = 0.0;
            double sp = 0.0;
            for (int j = 0; j < kDegree; ++j) {
                const double c = std::cos(std::numbers::pi * k * (j + 0.5) / kDegree);
                sa += fa[j] * c;
                sp += fp[j] * c;
            }
            table[i].ai[k] = 2.0 * sa / kDegree;
            table[i].aip[k] = 2.0 * sp / kDegree;
        }
    }
    return table;
}

double clenshaw(const std::array<double, kDegree>& c, double t)
{
    double b1 = 0.0;
    double b2 = 0.0;
    for (int k = kDegree - 1; k >= 1; --k) {
        const double b0 = 2.0 * t * b1 - b2 + c[k];
        b2 = b1;
        b1 = b0;
    }
    return t * b1 - b2 + 0.5 * c[0];
}

} // namespace

AiryPair airy(double y)
{
    if (y < 0.0 || y >= kAiryTableMax) {
        return {boost::math::airy_ai(y), boost::math::airy_ai_prime(y)};
    }
    static const std::vector<Interval> table = build_table();
    const int i = static_cast<int>(y / kWidth);
    const double t = (y - (i + 0.5) * kWidth) / (0.5 * kWidth);
    return {clenshaw(table[i].ai, t), clenshaw(table[i].aip, t)};
}

} // namespace kapteyn::detail
