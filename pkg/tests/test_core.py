import json

import pytest
from hypothesis import given

import ppcforge as pf
from ppcforge.core import read_ppc_comments

from conftest import designs


def test_valid_psts7(psts7):
    assert psts7.v == 7
    assert psts7.b == 5
    assert psts7.blocks[0] == (0, 1, 2)


def test_empty_design_is_fine():
    d = pf.validate(3, [])
    assert d.b == 0


def test_pair_violation_reports_both_blocks():
    with pytest.raises(pf.PairViolation) as err:
        pf.validate(7, [(0, 1, 2), (0, 1, 3)])
    assert err.value.pair == (0, 1)
    assert err.value.first == (0, 1, 2)
    assert err.value.second == (0, 1, 3)


def test_repeated_block_is_a_pair_violation():
    with pytest.raises(pf.PairViolation):
        pf.validate(9, [(0, 1, 2), (2, 1, 0)])


def test_out_of_range_point():
    with pytest.raises(pf.OutOfRange):
        pf.validate(4, [(0, 1, 5)])
    with pytest.raises(pf.OutOfRange):
        pf.validate(4, [(-1, 1, 2)])


def test_short_block_rejected():
    with pytest.raises(pf.RepeatedPoint):
        pf.validate(5, [(1, 1, 2)])
    with pytest.raises(pf.ParseError):
        pf.validate(5, [(1, 2)])


def test_degree_profile_psts7(psts7):
    prof = pf.degree_profile(psts7)
    assert prof.degrees[6] == 3
    assert sum(prof.degrees) == 3 * psts7.b


def test_degree_profile_empty():
    assert pf.degree_profile(pf.validate(5, ())).degrees == (0,) * 5


def test_sts9_is_regular(bose9):
    degrees = pf.degree_profile(bose9.design).degrees
    assert set(degrees) == {4}  # (v-1)/2 for v=9


def test_serialize_round_trip(psts7):
    assert pf.deserialize(pf.serialize(psts7)) == psts7


def test_deserialize_out_of_range():
    with pytest.raises(pf.OutOfRange):
        pf.deserialize("v=4\n0 1 5\n")


def test_deserialize_psts11_file(psts11_text):
    d = pf.deserialize(psts11_text)
    assert d.v == 11
    assert d.b == 13


def test_ppc_comments_round_trip(psts11_text):
    comments = read_ppc_comments(psts11_text)
    assert comments == ((0, 7, 8), (2, 6, 9), (4, 5, 10))


def test_json_variant_accepted(psts7):
    text = json.dumps({"v": 7, "blocks": [list(b) for b in psts7.blocks]})
    assert pf.deserialize(text) == psts7


def test_header_required():
    with pytest.raises(pf.ParseError):
        pf.deserialize("0 1 2\n")


@given(designs())
def test_every_design_is_linear(d):
    seen = set()
    for a, b, c in d.blocks:
        for pair in ((a, b), (a, c), (b, c)):
            assert pair not in seen
            seen.add(pair)


@given(designs())
def test_degree_sum_is_three_b(d):
    prof = pf.degree_profile(d)
    assert sum(prof.degrees) == 3 * d.b
    assert max(prof.degrees, default=0) <= (d.v - 1) // 2


@given(designs())
def test_serialization_bijective(d):
    assert pf.deserialize(pf.serialize(d)) == d
