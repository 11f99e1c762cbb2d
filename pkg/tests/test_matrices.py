import pytest

from finrings.claims import EXAMPLE1_ELEMENTS, EXAMPLE2_ELEMENTS
from finrings.errors import ClosureTooLarge, FormatError, NotClosed
from finrings.matrices import (
    MatrixGenSpec,
    closure,
    format_matrix,
    mat_mul,
    matrix_ring,
    parse_matrix,
    to_ring,
)
from finrings.ring import check_axioms


def test_parse_and_format():
    assert parse_matrix("2,0;0,0") == [[2, 0], [0, 0]]
    assert format_matrix(((2, 0), (0, 1))) == "2,0;0,1"
    for bad in ("2,0;0", "a,b;c,d", "", "1,2,3;4,5"):
        with pytest.raises(FormatError):
            parse_matrix(bad)


def test_example1_element_set(ex1):
    assert ex1.order == 8
    assert set(ex1.labels) == {format_matrix(m) for m in EXAMPLE1_ELEMENTS}
    assert check_axioms(ex1) is None


def test_example2_element_set(ex2):
    assert ex2.order == 9
    assert set(ex2.labels) == {format_matrix(m) for m in EXAMPLE2_ELEMENTS}
    assert check_axioms(ex2) is None


def test_zero_first_then_sorted(ex1):
    assert ex1.labels[0] == "0,0;0,0"
    assert list(ex1.labels) == sorted(ex1.labels)


def test_closure_is_closed():
    spec = MatrixGenSpec.from_literals(4, 2, ["2,0;0,0", "0,1;0,0"])
    elems = set(closure(spec))
    for a in elems:
        for b in elems:
            assert mat_mul(a, b, 4) in elems


def test_full_matrix_ring_is_unital():
    R = matrix_ring(MatrixGenSpec.from_literals(2, 2, ["1,0;0,0", "0,1;0,0", "0,0;1,0", "0,0;0,1"]))
    assert R.order == 16
    assert check_axioms(R) is None


def test_closure_cap():
    spec = MatrixGenSpec.from_literals(
        5, 2, ["1,0;0,0", "0,1;0,0", "0,0;1,0", "0,0;0,1"], closure_cap=100
    )
    with pytest.raises(ClosureTooLarge):
        closure(spec)


def test_dimension_limits():
    with pytest.raises(ValueError):
        MatrixGenSpec.from_literals(4, 5, ["1,0,0,0,0;0,0,0,0,0;0,0,0,0,0;0,0,0,0,0;0,0,0,0,0"])


def test_to_ring_rejects_non_closed_set():
    elems = [((0, 0), (0, 0)), ((1, 0), (0, 0))]
    with pytest.raises(NotClosed):
        to_ring(elems, 4)
