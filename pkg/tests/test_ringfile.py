import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from finrings.enumerate import enumerate_rings
from finrings.errors import AssociativityViolation, FormatError, RingAxiomError
from finrings.groups import AdditiveGroup
from finrings.ring import FiniteRing, from_generator_products
from finrings.ringfile import parse_ring, read_ring, ring_to_dict, serialize_ring, write_ring

RINGS_8 = list(enumerate_rings(8))


def test_round_trip_example(ex1, tmp_path):
    text = serialize_ring(ex1)
    R = parse_ring(text)
    assert (R.mul_table == ex1.mul_table).all()
    assert R.labels == ex1.labels
    assert serialize_ring(R) == text
    write_ring(ex1, tmp_path / "e1.json")
    back = read_ring(tmp_path / "e1.json")
    assert back.group == AdditiveGroup.of(2, 4)
    assert (back.mul_table == R.mul_table).all()


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(RINGS_8))
def test_round_trip_enumerated(R):
    text = serialize_ring(R)
    assert serialize_ring(parse_ring(text)) == text


def test_field_order(ex1):
    doc = json.loads(serialize_ring(ex1))
    assert list(doc) == ["formatVersion", "name", "order", "groupModuli", "mulTable", "elementLabels", "provenance"]


def test_one_row_per_line(ex1):
    lines = serialize_ring(ex1).splitlines()
    assert sum(1 for ln in lines if ln.startswith("    [")) == 8


def _doc(R):
    return ring_to_dict(R)


@pytest.mark.parametrize(
    "mutate,field",
    [
        (lambda d: d["mulTable"][0].__setitem__(0, 8), "mulTable[0][0]"),
        (lambda d: d.__setitem__("order", 9), "order"),
        (lambda d: d.__setitem__("groupModuli", [4, 2]), "groupModuli"),
        (lambda d: d.__setitem__("groupModuli", [6]), "groupModuli"),
        (lambda d: d.__setitem__("formatVersion", 2), "formatVersion"),
        (lambda d: d.__setitem__("extra", 1), "extra"),
        (lambda d: d.pop("mulTable"), "mulTable"),
        (lambda d: d["mulTable"].pop(), "mulTable"),
        (lambda d: d.__setitem__("elementLabels", ["x"]), "elementLabels"),
        (lambda d: d["mulTable"][1].__setitem__(2, "a"), "mulTable[1][2]"),
    ],
)
def test_format_errors(ex1, mutate, field):
    d = _doc(ex1)
    mutate(d)
    with pytest.raises(FormatError) as info:
        parse_ring(json.dumps(d))
    assert info.value.field == field


def test_bad_json_reports_line():
    with pytest.raises(FormatError) as info:
        parse_ring('{\n"formatVersion": 1,\n oops')
    assert info.value.field == "line 3"


def test_associativity_violation_is_validation_error():
    R = from_generator_products(AdditiveGroup.of(2, 2), [[2, 0], [2, 0]])
    text = serialize_ring(R)
    with pytest.raises(AssociativityViolation) as info:
        parse_ring(text)
    assert len(info.value.triple) == 3
    assert parse_ring(text, check=False).order == 4


def test_table_ring_is_coordinatized():
    Z6 = FiniteRing.integers_mod(6)
    d = ring_to_dict(Z6)
    assert d["groupModuli"] == [2, 3]
    R = parse_ring(serialize_ring(Z6))
    assert R.order == 6


def test_non_ring_raises_ring_axiom_error(ex1):
    d = _doc(ex1)
    d["mulTable"][1][1] = 1
    with pytest.raises(RingAxiomError):
        parse_ring(json.dumps(d))
