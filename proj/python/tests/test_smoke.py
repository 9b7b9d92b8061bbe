# Copyright 2026 The pandc Authors.
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


import os
from fractions import Fraction

import pytest

import pandc

DATA = os.environ.get("PANDC_DATA", os.path.join(os.path.dirname(__file__), "..", "..", "data"))


def mirror():
    return pandc.UtilityProfile([[1, 0, -1], [1, 0, -1]])


def test_pc2_prices_are_exact_fractions():
    r = pandc.solve(mirror())
    assert r.variant == "pc2"
    assert r.star_prices[0].prices == [Fraction(1), Fraction(0), Fraction(-1)]
    assert r.predicted_outcomes == [0]
    assert r.predicted_payoffs == [Fraction(2), Fraction(0)]


def test_inputs_accept_strings_and_refuse_floats():
    u = pandc.UtilityProfile([["1/3", "0.5", 0], [0, 0, "2/3"]])
    assert u.value(0, 1) == Fraction(1, 2)
    with pytest.raises(TypeError):
        pandc.UtilityProfile([[0.5, 0], [0, 0]])


def test_chooser_indifference_and_proposer_optimality():
    u = pandc.generate_profile(seed=7)
    assert pandc.verify_chooser_indifference(u).passed
    report = pandc.verify_proposer_optimality(u, radius=1)
    assert report.passed
    assert report.slack <= 0


def test_robust_epsilon_bound_and_error_code():
    assert pandc.robust_epsilon_bound(mirror()) == Fraction(3, 4)
    with pytest.raises(pandc.PandcError) as err:
        pandc.solve(mirror(), variant="pc2-robust", epsilon=1)
    assert err.value.code == "epsilon_too_large"
    r = pandc.solve(mirror(), variant="pc2-robust", epsilon=Fraction(1, 2))
    assert r.predicted_outcomes == [0]


def test_maskin_violation_is_found():
    u = pandc.UtilityProfile.load(os.path.join(DATA, "mirror.json"))
    v = pandc.UtilityProfile.load(os.path.join(DATA, "mirror_prime.json"))
    report = pandc.check_maskin_monotonicity(u, v)
    assert not report.passed
    assert len(report.witness["allocations"]) == 2


def test_session_play_and_replay():
    s = pandc.Session(mirror())
    assert s.stage == ("await_price", 0)
    s = s.post(0, [1, 0, -1]).choose(1, 2)
    assert s.settled
    assert s.result.transfers == [Fraction(-1), Fraction(1)]
    assert s.payoffs() == [Fraction(-2), Fraction(0)]
    assert s.replay() == s
    with pytest.raises(pandc.PandcError) as err:
        s.choose(1, 0)
    assert err.value.code == "out_of_turn"


def test_bots_reach_equilibrium_payoffs():
    u = pandc.generate_profile(players=3, options=3, seed=3)
    s = pandc.Session(u, variant="pc-n").play_out(["equilibrium"] * 3)
    assert s.payoffs() == pandc.solve(u, variant="pc-n").predicted_payoffs


def test_to_dict_uses_rational_strings():
    d = pandc.solve(mirror()).to_dict()
    assert d["star_prices"][0]["prices"] == ["1/1", "0/1", "-1/1"]
