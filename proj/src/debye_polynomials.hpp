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

#ifndef KAPTEYN_SRC_DEBYE_POLYNOMIALS_HPP
#define KAPTEYN_SRC_DEBYE_POLYNOMIALS_HPP

#include <cstddef>
#include <vector>

namespace kapteyn::detail {

// Coefficients (by ascending power of p) of the Debye polynomials U_k(p) and
// V_k(p), generated from
//   U_{k+1}(p) = p^2 (1 - p^2) U_k'(p) / 2 + 1/8 int_0^p (1 - 5t^2) U_k(t) dt
//   V_k(p)     = U_k(p) + p (p^2 - 1) (U_{k-1}(p) / 2 + p U_{k-1}'(p))
// Generic in the scalar so the same recurrence feeds both the double Debye
// sums and the extended-precision Olver coefficients.
template <class T>
struct DebyePolynomials {
    std::vector<std::vector<T>> u;
    std::vector<std::vector<T>> v;
};

template <class T>
DebyePolynomials<T> make_debye_polynomials(int kmax)
{
    DebyePolynomials<T> out;
    out.u.push_back({T(1)});
    for (int k = 0; k < kmax; ++k) {
        const auto& c = out.u.back();
        std::vector<T> next(c.size() + 3, T(0));
        for (std::size_t j = 0; j < c.size(); ++j) {
            const T half_jc = T(static_cast<int>(j)) * c[j] / 2;
            next[j + 1] += half_jc + c[j] / T(8 * static_cast<int>(j + 1));
            next[j + 3] -= half_jc + T(5) * c[j] / T(8 * static_cast<int>(j + 3));
        }
        out.u.push_back(std::move(next));
    }
    out.v.push_back({T(1)});
    for (int k = 1; k <= kmax; ++k) {
        const auto& prev = out.u[k - 1];
        std::vector<T> vk = out.u[k];
        for (std::size_t j = 0; j < prev.size(); ++j) {
            const T f = prev[j] * (T(1) / 2 + T(static_cast<int>(j)));
            vk[j + 3] += f;
            vk[j + 1] -= f;
        }
        out.v.push_back(std::move(vk));
    }
    return out;
}

template <class T>
T horner(const std::vector<T>& coeffs, const T& p)
{
    T acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * p + *it;
    }
    return acc;
}

} // namespace kapteyn::detail

#endif // KAPTEYN_SRC_DEBYE_POLYNOMIALS_HPP
