from fractions import Fraction

import pytest

from rslist import io
from rslist.errors import InvalidSpec, ReducibleModulus
from rslist.field import GF
from rslist.frs import FRSSpec
from rslist.rs import RSSpec


def test_spec_round_trip():
    for spec in (RSSpec(GF(2, 4), 3, (1, 2, 3, 9)), FRSSpec(GF(7), 2, 2, 3, (1, 2, 4))):
        assert io.spec_from_dict(io.spec_to_dict(spec)) == spec


def test_frs_spec_defaults_to_primitive_element():
    spec = io.spec_from_dict({"field": {"p": 5}, "k": 2, "s": 2, "S": [1, 4]})
    assert spec.omega == 2


def test_bad_specs(tmp_path):
    with pytest.raises(InvalidSpec):
        io.spec_from_dict({"field": {"p": 5}, "S": [0, 1]})
    with pytest.raises(ReducibleModulus):
        io.spec_from_dict({"field": {"p": 2, "m": 2, "modulus": [1, 0, 1]}, "k": 1, "S": [0]})
    bad = tmp_path / "spec.json"
    bad.write_text("{not json")
    with pytest.raises(InvalidSpec):
        io.load_spec(bad)


def test_word_formats():
    assert io.parse_blocks("1 3 0 2\n\n4,4 , 4 4\n") == [(1, 3, 0, 2), (4, 4, 4, 4)]
    text = "2,3\n0,4\n\n1 1\n2 2\n"
    words = io.parse_bundled(text)
    assert words == [((2, 3), (0, 4)), ((1, 1), (2, 2))]
    assert io.parse_bundled(io.format_bundled(words[0])) == [words[0]]
    assert io.format_word((1, 3, 0, 2)) == "1 3 0 2"


def test_parse_fraction():
    assert io.parse_fraction("1/5") == Fraction(1, 5)
    assert io.parse_fraction("0.25") == Fraction(1, 4)
    with pytest.raises(InvalidSpec):
        io.parse_fraction("half")
