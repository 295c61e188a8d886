# Copyright 2026 The cftk Authors
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
import json

import pytest

import cftk


def test_factor_quartic_is_irreducible():
    out = cftk.call("factor", field="Q", poly="[-2,0,0,0,1]")
    assert out["irreducible"] is True
    assert out["factors"][0]["text"] == "x^4-2"


def test_factor_rational_direct():
    factors = cftk.factor_rational(["-1", "0", "0", "0", "0", "0", "1"])
    assert sorted(len(f) - 1 for f, _ in factors) == [1, 1, 2, 2]
    assert all(m == 1 for _, m in factors)


def test_diamond_certificate():
    cert = cftk.call("witness", "diamond", f=[1, 3], g=[2, 4])
    assert {1, 3} <= set(cert["S"])
    assert not {2, 4} & set(cert["S"])
    assert cert["homomorphism_checked"] is True
    direct = json.loads(cftk.diamond_witness([1, 3], [2, 4]))
    assert direct == cert


def test_tower_json_round_trip():
    tower = cftk.call("adjoin", field="Q", poly="[-2,0,0,1]", name="c")
    report = cftk.call("normal", field=tower, base="Q", check="n1")
    assert report["holds"] is False
    assert report["certificate"] == "x^3-2"


def test_galois_lattice_counts():
    lattice = cftk.call("galois", field="Q,split:-2;0;0;1")
    assert lattice["group_order"] == 6
    kinds = [n["kind"] for n in lattice["nodes"]]
    assert kinds.count("subgroup") == 6 and kinds.count("field") == 6
    assert lattice["verified"] is True


def test_errors():
    with pytest.raises(cftk.CommandError) as info:
        cftk.call("adjoin", field="Q,sqrt:2", poly="[-8,0,1]")
    assert info.value.code == 2
    assert info.value.kind == "ReduciblePolynomial"
    with pytest.raises(cftk.DomainError):
        cftk.diamond_witness([1, 2], [2])


def test_deterministic_output():
    args = ["distance", "--field", "Q,sqrt:2,sqrt:3", "--table"]
    assert cftk.run(args) == cftk.run(args)
