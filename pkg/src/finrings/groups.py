"""Finite abelian groups in primary decomposition.

Elements are indexed 0..n-1 by mixed radix over the coordinate vector,
most significant coordinate first, so index 0 is always the zero element.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

MAX_ORDER = 512


def factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power(d: int) -> tuple[int, int] | None:
    """Return (p, e) with d == p**e, or None if d is not a prime power >= 2."""
    if d < 2:
        return None
    f = factorize(d)
    if len(f) != 1:
        return None
    return next(iter(f.items()))


@dataclass(frozen=True)
class AdditiveGroup:
    """Direct sum of cyclic groups of prime-power order.

    The moduli are kept sorted by (prime, exponent) so that two equal
    group types always compare equal.
    """

    moduli: tuple[int, ...]

    def __post_init__(self):
        moduli = tuple(int(d) for d in self.moduli)
        keys = []
        for d in moduli:
            pe = prime_power(d)
            if pe is None:
                raise ValueError(f"modulus {d} is not a prime power >= 2")
            keys.append(pe)
        moduli = tuple(d for _, d in sorted(zip(keys, moduli)))
        object.__setattr__(self, "moduli", moduli)
        if math.prod(moduli) > MAX_ORDER:
            raise ValueError(f"group order {math.prod(moduli)} exceeds {MAX_ORDER}")

    @classmethod
    def of(cls, *moduli: int) -> AdditiveGroup:
        return cls(tuple(moduli))

    def __str__(self):
        return "[" + ",".join(map(str, self.moduli)) + "]"

    @property
    def rank(self) -> int:
        return len(self.moduli)

    @property
    def order(self) -> int:
        return math.prod(self.moduli)

    @property
    def exponent(self) -> int:
        return math.lcm(*self.moduli) if self.moduli else 1

    @property
    def is_cyclic(self) -> bool:
        # cyclic iff at most one factor per prime
        primes = [prime_power(d)[0] for d in self.moduli]
        return len(primes) == len(set(primes))

    @cached_property
    def place_values(self) -> np.ndarray:
        pv = [1] * self.rank
        for i in range(self.rank - 2, -1, -1):
            pv[i] = pv[i + 1] * self.moduli[i + 1]
        return np.array(pv, dtype=np.int64)

    @cached_property
    def coords(self) -> np.ndarray:
        """(n, k) array: row x is the coordinate vector of element x."""
        rows = list(itertools.product(*(range(d) for d in self.moduli)))
        arr = np.array(rows, dtype=np.int64).reshape(self.order, self.rank)
        arr.flags.writeable = False
        return arr

    @cached_property
    def add_table(self) -> np.ndarray:
        c = self.coords
        s = (c[:, None, :] + c[None, :, :]) % np.array(self.moduli, dtype=np.int64)
        t = s @ self.place_values if self.rank else np.zeros((1, 1), dtype=np.int64)
        t = t.astype(np.int64)
        t.flags.writeable = False
        return t

    @cached_property
    def scalar_table(self) -> np.ndarray:
        """(exponent, n) array: entry [m, x] is m*x."""
        c = self.coords
        m = np.arange(self.exponent, dtype=np.int64)
        s = (m[:, None, None] * c[None, :, :]) % np.array(self.moduli, dtype=np.int64)
        t = (s @ self.place_values).astype(np.int64) if self.rank else np.zeros((1, 1), np.int64)
        t.flags.writeable = False
        return t

    @cached_property
    def orders(self) -> np.ndarray:
        """Additive order of every element."""
        out = np.ones(self.order, dtype=np.int64)
        for i, d in enumerate(self.moduli):
            col = self.coords[:, i]
            part = d // np.gcd(col, d)
            out = np.lcm(out, part)
        out.flags.writeable = False
        return out

    def coords_of(self, a: int) -> tuple[int, ...]:
        if not 0 <= a < self.order:
            raise IndexError(f"element index {a} out of range for group of order {self.order}")
        return tuple(int(v) for v in self.coords[a])

    def index_of(self, coords) -> int:
        if len(coords) != self.rank:
            raise ValueError(f"expected {self.rank} coordinates, got {len(coords)}")
        idx = 0
        for c, d in zip(coords, self.moduli):
            idx = idx * d + (int(c) % d)
        return idx

    def additive_order(self, a: int) -> int:
        out = 1
        for c, d in zip(self.coords_of(a), self.moduli):
            out = math.lcm(out, d // math.gcd(c, d))
        return out

    def generator(self, i: int) -> int:
        """Index of the i-th canonical generator (unit coordinate vector)."""
        return int(self.place_values[i])


def _partitions(e: int, largest: int | None = None):
    """Partitions of e, largest parts first, in reverse lexicographic order."""
    if e == 0:
        yield ()
        return
    largest = e if largest is None else largest
    for first in range(min(e, largest), 0, -1):
        for rest in _partitions(e - first, first):
            yield (first,) + rest


def abelian_groups_of_order(n: int) -> list[AdditiveGroup]:
    """One group per isomorphism class, cyclic-first for each prime."""
    if not 1 <= n <= MAX_ORDER:
        raise ValueError(f"order must be in 1..{MAX_ORDER}")
    per_prime = [
        [tuple(p**part for part in parts) for parts in _partitions(e)]
        for p, e in sorted(factorize(n).items())
    ]
    return [AdditiveGroup(sum(choice, ())) for choice in itertools.product(*per_prime)]


def group_of_order_statistics(orders) -> AdditiveGroup:
    """Identify the abelian group type from the multiset of element orders.

    Finite abelian groups are determined up to isomorphism by how many
    elements they have of each order.
    """
    orders = sorted(int(o) for o in orders)
    for g in abelian_groups_of_order(len(orders)):
        if sorted(g.orders.tolist()) == orders:
            return g
    raise ValueError("order statistics match no abelian group")


def direct_bases(orders: np.ndarray, add: np.ndarray, moduli, limit=None):
    """Yield tuples of elements of exact orders `moduli` generating a direct sum.

    `orders` and `add` describe the ambient group; this is shared by
    automorphism enumeration and by basis finding in table rings.
    """
    n = len(orders)
    k = len(moduli)
    cands = [np.flatnonzero(orders == d).tolist() for d in moduli]
    span0 = np.zeros(n, dtype=bool)
    span0[0] = True
    found = 0

    def extend(span, h, d):
        members = np.flatnonzero(span)
        out = np.zeros_like(span)
        m = 0
        for _ in range(d):
            out[add[members, m]] = True
            m = add[m, h]
        if int(out.sum()) != len(members) * d:
            return None
        return out

    def rec(i, span, chosen):
        nonlocal found
        if i == k:
            found += 1
            yield tuple(chosen)
            return
        for h in cands[i]:
            if span[h]:
                continue
            nxt = extend(span, h, moduli[i])
            if nxt is None:
                continue
            chosen.append(h)
            yield from rec(i + 1, nxt, chosen)
            chosen.pop()
            if limit is not None and found >= limit:
                return

    yield from rec(0, span0, [])


@lru_cache(maxsize=64)
def automorphisms(group: AdditiveGroup) -> tuple[tuple[int, ...], ...]:
    """All automorphisms, each given by the images of the canonical generators.

    Generator images must have exactly the generator's order and the
    images must span a direct sum of full size, which is equivalent to
    the induced homomorphism being bijective.
    """
    return tuple(direct_bases(group.orders, group.add_table, group.moduli))


def _images_to_permutation(group: AdditiveGroup, images) -> np.ndarray:
    c = group.coords
    if group.rank == 0:
        return np.zeros(1, dtype=np.int64)
    h = group.coords[list(images)]  # (k, k)
    img = (c @ h) % np.array(group.moduli, dtype=np.int64)
    return (img @ group.place_values).astype(np.int64)


@lru_cache(maxsize=64)
def automorphism_permutations(group: AdditiveGroup) -> np.ndarray:
    """(A, n) array; row s maps element x to sigma_s(x)."""
    auts = automorphisms(group)
    perms = np.array([_images_to_permutation(group, a) for a in auts], dtype=np.int64)
    perms = perms.reshape(len(auts), group.order)
    perms.flags.writeable = False
    return perms
