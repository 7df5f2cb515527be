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

import math

import pytest

import kapteyn


def test_closed_forms():
    assert kapteyn.closed_C(1.0) == pytest.approx(math.exp(0.25) / math.sqrt(2), rel=1e-15)
    assert kapteyn.closed_C1(1.0, 1.0) == pytest.approx(0.176777, abs=1e-6)
    lo, hi = kapteyn.bound_interval(1.0)
    assert hi == 1.0
    assert lo == pytest.approx(kapteyn.convergence_boundary(1.0), rel=1e-14)


def test_solve():
    r = kapteyn.solve(1.0, 1.0)
    assert r["converged"]
    assert r["within_bound"]
    assert r["C"] == pytest.approx(r["C_closed"], rel=1e-10)
    assert r["C1"] == pytest.approx(r["C1_closed"], rel=1e-9)
    assert r["C2"] == pytest.approx(0.15625, abs=1e-10)
    assert all(abs(x) <= 1e-10 for x in r["residuals"])


def test_series_and_bessel():
    C = kapteyn.closed_C(2.0)
    s = kapteyn.eval_series(C, 2.0)
    assert s["F"]["converged"]
    assert s["F1"]["value"] == pytest.approx(-4 * 1.5**2, rel=1e-10)
    assert kapteyn.bessel_j(0, 1.0) == pytest.approx(0.7651976865579666, rel=1e-14)
    assert kapteyn.bessel_j(-3, 2.0) == -kapteyn.bessel_j(3, 2.0)
    assert kapteyn.kapteyn_coeff(5, 0.5) == pytest.approx(kapteyn.bessel_j(5, 2.5), rel=1e-13)


def test_identity_table():
    rows = kapteyn.identity_table(0.5, 5)
    assert len(rows) == 5
    assert max(max(r["err0"], r["err1"], r["err2"]) for r in rows) <= 1e-10


def test_errors():
    with pytest.raises(kapteyn.KapteynError, match="InvalidArgument"):
        kapteyn.solve(-1.0)
    with pytest.raises(ValueError):
        kapteyn.closed_C(0.0)
    with pytest.raises(kapteyn.KapteynError, match="MaxTermsExceeded"):
        kapteyn.solve(0.1, max_terms=100)
