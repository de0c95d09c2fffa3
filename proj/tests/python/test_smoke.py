# Copyright 2026 The normtrace Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


from fractions import Fraction

import pytest

import normtrace as nt


def test_tower_header():
    t = nt.FieldTower.build(3, 1, 3)
    assert (t.q, t.order) == (3, 27)
    assert len(t.top_modulus) == 4


def test_counts_agree_across_methods():
    assert nt.count_norm_trace(3, 1, 3, 1, 2) == 6
    assert nt.count_norm_trace(2, 2, 2, 1, 1) == 0
    curve, residual = nt.count_curve_gauss(3, 1, 3, 1, 2)
    assert curve == nt.count_curve_points(3, 1, 3, 1, 2)
    assert residual < 1e-6
    assert sum(nt.norm_trace_census(3, 1, 4)) == 81


def test_toric_counts():
    assert nt.count_toric_points(3, 1, 3, 1) == 0
    assert nt.count_toric_points(3, 1, 3, 2) == 3
    assert nt.count_toric_gauss(3, 1, 3, 2)[0] == 3


def test_closed_forms_and_branch_ids():
    value, branch = nt.nn_closed(3, 3, 1, 1, "errata")
    assert value == nt.count_norm_trace(3, 1, 3, 1, 1)
    paper, paper_branch = nt.nn_closed(3, 3, 1, 1, "paper")
    assert paper != value and paper_branch.startswith("q3.")
    assert nt.curve_closed(2, 10, 1, 1)[0] == 2**10 + 1


def test_pn_matches_enumeration():
    for a in (1, 2):
        for b in (1, 2):
            assert nt.pn(3, 1, 4, a, b) == nt.count_irreducible(3, 1, 4, a, b)
    assert nt.pn(2, 1, 3, 1, 1, "gauss") == 1


def test_bounds_are_exact():
    report = nt.check_bound("katz", 3, 3, 3)
    assert report["center"] == Fraction(13, 3)
    assert report["holds"] and report["exact"]


def test_errors_carry_codes():
    with pytest.raises(nt.NormtraceError) as info:
        nt.count_norm_trace(4, 1, 2, 1, 1)
    assert info.value.code == "NotPrime"


def test_cli_entry_points():
    out, err, code = nt.cli.compute(3, 1, 3, 1, 2)
    assert code == 0 and err == ""
    assert out.splitlines()[-1].split("\t")[5] == "6"
    out, _, code = nt.cli.verify(p=3, n_max=3)
    assert code == 0 and "errata ledger" in out
