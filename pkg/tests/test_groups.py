import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from finrings.groups import (
    AdditiveGroup,
    abelian_groups_of_order,
    automorphism_permutations,
    automorphisms,
    factorize,
    group_of_order_statistics,
)

prime_powers = st.sampled_from([2, 3, 4, 5, 7, 8])


def test_moduli_are_sorted():
    assert AdditiveGroup.of(4, 2).moduli == (2, 4)
    assert AdditiveGroup.of(3, 4).moduli == (4, 3)
    assert str(AdditiveGroup.of(4, 2)) == "[2,4]"


def test_rejects_non_prime_power():
    with pytest.raises(ValueError):
        AdditiveGroup.of(6)


def test_zero_is_index_zero():
    G = AdditiveGroup.of(2, 4)
    assert G.coords_of(0) == (0, 0)
    assert G.index_of((1, 3)) == 7
    with pytest.raises(IndexError):
        G.coords_of(8)


@pytest.mark.parametrize(
    "n,count", [(1, 1), (2, 1), (4, 2), (8, 3), (9, 2), (12, 2), (16, 5), (36, 4)]
)
def test_abelian_group_counts(n, count):
    groups = abelian_groups_of_order(n)
    assert len(groups) == count
    assert all(g.order == n for g in groups)


def test_first_group_is_cyclic():
    assert abelian_groups_of_order(8)[0].is_cyclic


@given(st.lists(prime_powers, min_size=1, max_size=3).filter(lambda m: math.prod(m) <= 512))
def test_add_table_is_abelian_group(moduli):
    G = AdditiveGroup(tuple(moduli))
    A = G.add_table
    n = G.order
    assert (A[0] == np.arange(n)).all()
    assert (A == A.T).all()
    assert all(sorted(row) == list(range(n)) for row in A.tolist())
    assert G.exponent == math.lcm(*moduli)
    assert G.orders.max() == G.exponent


@given(st.lists(prime_powers, min_size=1, max_size=3).filter(lambda m: math.prod(m) <= 512))
def test_orders_recover_group(moduli):
    G = AdditiveGroup(tuple(moduli))
    assert group_of_order_statistics(G.orders) == G


@pytest.mark.parametrize(
    "moduli,count", [((2, 2), 6), ((2, 4), 8), ((2, 2, 2), 168), ((3, 3), 48), ((8,), 4), ((9,), 6)]
)
def test_automorphism_group_orders(moduli, count):
    assert len(automorphisms(AdditiveGroup(moduli))) == count


def test_automorphism_permutations_preserve_addition():
    G = AdditiveGroup.of(2, 4)
    A = G.add_table
    for p in automorphism_permutations(G):
        assert (p[A] == A[p[:, None], p[None, :]]).all()


def test_factorize():
    assert factorize(72) == {2: 3, 3: 2}
