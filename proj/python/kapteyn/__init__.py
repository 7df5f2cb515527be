#
#   Copyright 2026 The kapteyn-queue Authors
#
#   Licensed under the Apache License, Version 2.0 (the "License");
#   you may not use this file except in compliance with the License.
#   You may obtain a copy of the License at
#
#       http://www.apache.org/licenses/LICENSE-2.0
#
#   Unless required by applicable law or agreed to in writing, software
#   distributed under the License is distributed on an "AS IS" BASIS,
#   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#   See the License for the specific language governing permissions and
#   limitations under the License.
#

"""Kapteyn series constants C(D), C1(D, a) and C2(D, a)."""

from ._core import (
    KapteynError,
    bessel_j,
    bessel_j_prime,
    bound_interval,
    closed_C,
    closed_C1,
    closed_C2_paper,
    convergence_boundary,
    eval_series,
    identity_table,
    kapteyn_coeff,
    solve,
    verify,
)

__all__ = [
    "KapteynError",
    "bessel_j",
    "bessel_j_prime",
    "bound_interval",
    "closed_C",
    "closed_C1",
    "closed_C2_paper",
    "convergence_boundary",
    "eval_series",
    "identity_table",
    "kapteyn_coeff",
    "solve",
    "verify",
]
