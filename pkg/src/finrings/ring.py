"""Finite rings as explicit addition and multiplication tables.

A ring either carries an `AdditiveGroup` (coordinate ring: elements are
mixed-radix indices and addition comes from the group) or only tables
(table ring, e.g. straight out of a matrix closure).  Everything in
`properties` works on both; canonical forms need a coordinate ring.
"""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from .errors import (
    AdditiveViolation,
    AssociativityViolation,
    DistributivityViolation,
    InvalidStructureConstants,
    RingAxiomError,
    ZeroProductViolation,
)
from .groups import MAX_ORDER, AdditiveGroup

# cap on the number of table cells materialised per vectorised chunk
_CHUNK_CELLS = 1 << 22


def _frozen(a) -> np.ndarray:
    arr = np.array(a, dtype=np.int64)
    arr.flags.writeable = False
    return arr


class FiniteRing:
    """Immutable finite ring with zero at index 0."""

    def __init__(
        self,
        add,
        mul,
        *,
        group: AdditiveGroup | None = None,
        name: str = "",
        provenance: dict | None = None,
        labels: Sequence[str] | None = None,
    ):
        add = _frozen(add)
        mul = _frozen(mul)
        n = add.shape[0] if add.ndim == 2 else 0
        if n == 0 or add.shape != (n, n) or mul.shape != (n, n):
            raise ValueError("addition and multiplication tables must both be n x n with n >= 1")
        if n > MAX_ORDER:
            raise ValueError(f"ring order {n} exceeds {MAX_ORDER}")
        for t, what in ((add, "addition"), (mul, "multiplication")):
            if t.min() < 0 or t.max() >= n:
                raise ValueError(f"{what} table has entries outside 0..{n - 1}")
        if group is not None and group.order != n:
            raise ValueError("group order does not match table size")
        if labels is not None and len(labels) != n:
            raise ValueError("need exactly one label per element")
        self.add_table = add
        self.mul_table = mul
        self.group = group
        self.name = name
        self.provenance = dict(provenance or {})
        self.labels = tuple(labels) if labels is not None else None

    @classmethod
    def from_group(cls, group: AdditiveGroup, mul, **kw) -> FiniteRing:
        return cls(group.add_table, mul, group=group, **kw)

    @classmethod
    def zero_ring(cls, group: AdditiveGroup, **kw) -> FiniteRing:
        """Zero multiplication on `group`."""
        n = group.order
        kw.setdefault("name", f"zero-mult{group}")
        return cls.from_group(group, np.zeros((n, n), dtype=np.int64), **kw)

    @classmethod
    def integers_mod(cls, m: int) -> FiniteRing:
        from .groups import factorize

        r = np.arange(m)
        add = (r[:, None] + r[None, :]) % m
        mul = (r[:, None] * r[None, :]) % m
        group = AdditiveGroup((m,)) if len(factorize(m)) == 1 else None
        return cls(add, mul, group=group, name=f"Z/{m}")

    @property
    def order(self) -> int:
        return self.add_table.shape[0]

    def __len__(self):
        return self.order

    def __repr__(self):
        g = f" group={self.group}" if self.group is not None else ""
        return f"<FiniteRing {self.name or '?'} order={self.order}{g}>"

    def __eq__(self, other):
        if not isinstance(other, FiniteRing):
            return NotImplemented
        return (
            self.group == other.group
            and np.array_equal(self.add_table, other.add_table)
            and np.array_equal(self.mul_table, other.mul_table)
        )

    def __hash__(self):
        return hash((self.group, self.mul_table.tobytes(), self.add_table.tobytes()))

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels is not None else str(a)

    def with_mul(self, mul, **kw) -> FiniteRing:
        """Same additive structure, different multiplication table."""
        kw.setdefault("name", self.name)
        kw.setdefault("provenance", self.provenance)
        kw.setdefault("labels", self.labels)
        return FiniteRing(self.add_table, mul, group=self.group, **kw)

    # -- cached derived tables -------------------------------------------

    @property
    def neg_table(self) -> np.ndarray:
        try:
            return self._neg
        except AttributeError:
            neg = np.argmax(self.add_table == 0, axis=1)
            self._neg = _frozen(neg)
            return self._neg

    @property
    def additive_orders(self) -> np.ndarray:
        try:
            return self._orders
        except AttributeError:
            pass
        if self.group is not None:
            self._orders = self.group.orders
            return self._orders
        n = self.order
        idx = np.arange(n)
        orders = np.zeros(n, dtype=np.int64)
        cur = idx.copy()
        for m in range(1, n + 1):
            hit = (cur == 0) & (orders == 0)
            orders[hit] = m
            if orders.all():
                break
            cur = self.add_table[cur, idx]
        self._orders = _frozen(orders)
        return self._orders


# -- element arithmetic ------------------------------------------------------


def _check_index(R: FiniteRing, *xs: int):
    for x in xs:
        if not 0 <= x < R.order:
            raise IndexError(f"element index {x} out of range for ring of order {R.order}")


def add(R: FiniteRing, a: int, b: int) -> int:
    _check_index(R, a, b)
    return int(R.add_table[a, b])


def neg(R: FiniteRing, a: int) -> int:
    _check_index(R, a)
    return int(R.neg_table[a])


def sub(R: FiniteRing, a: int, b: int) -> int:
    return add(R, a, neg(R, b))


def mul(R: FiniteRing, a: int, b: int) -> int:
    _check_index(R, a, b)
    return int(R.mul_table[a, b])


def scalar_mul(R: FiniteRing, m: int, a: int) -> int:
    """m*a by a doubling addition chain; negative m acts through the negative."""
    _check_index(R, a)
    if m < 0:
        return scalar_mul(R, -m, int(R.neg_table[a]))
    out, base = 0, a
    while m:
        if m & 1:
            out = int(R.add_table[out, base])
        base = int(R.add_table[base, base])
        m >>= 1
    return out


def additive_order(R: FiniteRing, a: int) -> int:
    _check_index(R, a)
    return int(R.additive_orders[a])


def characteristic(R: FiniteRing) -> int:
    return math.lcm(*(int(o) for o in np.unique(R.additive_orders)))


def two_R(R: FiniteRing) -> list[int]:
    """The subgroup {a + a}, sorted ascending."""
    return sorted(int(x) for x in np.unique(np.diagonal(R.add_table)))


def opposite(R: FiniteRing) -> FiniteRing:
    return R.with_mul(R.mul_table.T, name=f"{R.name}^op" if R.name else "")


# -- axiom checks ------------------------------------------------------------


def _first_true(mask: np.ndarray, offset: int):
    hits = np.argwhere(mask)
    if len(hits) == 0:
        return None
    t = hits[0].tolist()
    t[0] += offset
    return tuple(t)


def _triple_chunks(n: int):
    step = max(1, _CHUNK_CELLS // (n * n))
    for lo in range(0, n, step):
        yield lo, min(n, lo + step)


def check_axioms(R: FiniteRing) -> RingAxiomError | None:
    """Exhaustively check the ring axioms over all triples.

    Returns the first violation found, checking in the order additive
    laws, zero products, left then right distributivity, associativity.
    Each witness is the lexicographically smallest failing tuple.
    """
    A, M = R.add_table, R.mul_table
    n = R.order
    idx = np.arange(n)

    if (A[0] != idx).any():
        return AdditiveViolation((0, int(np.flatnonzero(A[0] != idx)[0])), "0 is not an additive identity")
    t = _first_true(A != A.T, 0)
    if t:
        return AdditiveViolation(t, "addition not commutative")
    if not (A == 0).any(axis=1).all():
        return AdditiveViolation((int(np.flatnonzero(~(A == 0).any(axis=1))[0]),), "no additive inverse")
    for lo, hi in _triple_chunks(n):
        a = idx[lo:hi, None, None]
        lhs = A[A[lo:hi], :]  # (a+b)+c
        rhs = A[a, A[None, :, :]]  # a+(b+c)
        t = _first_true(lhs != rhs, lo)
        if t:
            return AdditiveViolation(t, "addition not associative")

    bad = np.flatnonzero((M[0] != 0) | (M[:, 0] != 0))
    if len(bad):
        a = int(bad[0])
        return ZeroProductViolation((0, a), f"0*{a}={M[0, a]}, {a}*0={M[a, 0]}")

    for lo, hi in _triple_chunks(n):
        a = idx[lo:hi, None, None]
        b = idx[None, :, None]
        c = idx[None, None, :]
        lhs = M[a, A[b, c]]
        rhs = A[M[a, b], M[a, c]]
        t = _first_true(lhs != rhs, lo)
        if t:
            return DistributivityViolation(t, "a(b+c) != ab+ac")
    for lo, hi in _triple_chunks(n):
        a = idx[lo:hi, None, None]
        b = idx[None, :, None]
        c = idx[None, None, :]
        lhs = M[A[a, b], c]
        rhs = A[M[a, c], M[b, c]]
        t = _first_true(lhs != rhs, lo)
        if t:
            return DistributivityViolation(t, "(a+b)c != ac+bc")
    for lo, hi in _triple_chunks(n):
        a = idx[lo:hi, None, None]
        c = idx[None, None, :]
        lhs = M[M[lo:hi][:, :, None], c]
        rhs = M[a, M[None, :, :]]
        t = _first_true(lhs != rhs, lo)
        if t:
            return AssociativityViolation(t, "(ab)c != a(bc)")
    return None


def validate(R: FiniteRing) -> None:
    """Raise the first `RingAxiomError` found; return None for a ring."""
    err = check_axioms(R)
    if err is not None:
        raise err


def is_ring(R: FiniteRing) -> bool:
    return check_axioms(R) is None


# -- structure constants -----------------------------------------------------


def normalize_gp(group: AdditiveGroup, gp) -> tuple[tuple[int, ...], ...]:
    k = group.rank
    rows = tuple(tuple(int(x) for x in row) for row in gp)
    if len(rows) != k or any(len(r) != k for r in rows):
        raise InvalidStructureConstants(f"need a {k}x{k} table of generator products")
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            if not 0 <= x < group.order:
                raise InvalidStructureConstants(f"gp[{i}][{j}]={x} is not an element index")
            g = math.gcd(group.moduli[i], group.moduli[j])
            if g % int(group.orders[x]):
                raise InvalidStructureConstants(
                    f"gp[{i}][{j}] has additive order {group.orders[x]}, "
                    f"which does not divide gcd({group.moduli[i]}, {group.moduli[j]}) = {g}"
                )
    return rows


def bilinear_table(group: AdditiveGroup, gp) -> np.ndarray:
    """Multiplication table of the bilinear extension of the generator products."""
    n, k = group.order, group.rank
    if k == 0:
        return np.zeros((1, 1), dtype=np.int64)
    X = group.coords
    P = group.coords[np.asarray(gp, dtype=np.int64)]  # (k, k, k)
    prod = np.einsum("xi,yj,ijm->xym", X, X, P) % np.array(group.moduli, dtype=np.int64)
    return (prod @ group.place_values).reshape(n, n)


def from_generator_products(group: AdditiveGroup, gp, **kw) -> FiniteRing:
    """Ring on `group` whose generator products are `gp`.

    Distributive by construction; associativity is not checked here.
    """
    rows = normalize_gp(group, gp)
    kw.setdefault("provenance", {"source": "generator-products", "gp": [list(r) for r in rows]})
    return FiniteRing.from_group(group, bilinear_table(group, rows), **kw)


def generator_products(R: FiniteRing) -> list[list[int]]:
    """Read the generator products back off a coordinate ring."""
    if R.group is None:
        raise ValueError("generator products need a coordinate ring")
    gens = [R.group.generator(i) for i in range(R.group.rank)]
    return [[int(R.mul_table[a, b]) for b in gens] for a in gens]
