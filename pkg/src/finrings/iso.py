"""Coordinatization, canonical forms and isomorphism testing.

The canonical form of a coordinate ring is the lexicographically smallest
relabelled multiplication table over all automorphisms of its additive
group.  Any ring isomorphism is in particular an additive isomorphism, so
two rings on the same group type are isomorphic iff their canonical
forms agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .groups import AdditiveGroup, automorphism_permutations, direct_bases, group_of_order_statistics
from .properties import is_commutative, is_unital, nilpotency_index
from .ring import FiniteRing, characteristic

# automorphisms relabelled per batch, bounds peak memory for large groups
_BATCH = 4096


class Coordinatization(NamedTuple):
    ring: FiniteRing
    basis: tuple[int, ...]  # basis elements as indices of the input ring
    perm: np.ndarray  # perm[new index] = input index


def coordinatize(R: FiniteRing) -> Coordinatization:
    """Re-index a table ring in mixed-radix order over a primary-decomposition basis."""
    if R.group is not None:
        basis = tuple(R.group.generator(i) for i in range(R.group.rank))
        return Coordinatization(R, basis, np.arange(R.order))
    group = group_of_order_statistics(R.additive_orders)
    basis = next(direct_bases(R.additive_orders, R.add_table, group.moduli, limit=1), None)
    if basis is None:
        raise AssertionError("abelian group without a primary-decomposition basis")
    A = R.add_table
    elems = [0]
    for h, d in zip(basis, group.moduli):
        mults = [0]
        for _ in range(d - 1):
            mults.append(int(A[mults[-1], h]))
        elems = [int(A[e, m]) for e in elems for m in mults]
    perm = np.array(elems, dtype=np.int64)
    inv = np.empty_like(perm)
    inv[perm] = np.arange(len(perm))
    mul = inv[R.mul_table[perm][:, perm]]
    labels = [R.labels[i] for i in perm] if R.labels is not None else None
    prov = dict(R.provenance)
    if R.labels is not None:
        prov["basis"] = [R.labels[b] for b in basis]
    out = FiniteRing.from_group(group, mul, name=R.name, provenance=prov, labels=labels)
    if not np.array_equal(out.add_table, inv[A[perm][:, perm]]):
        raise AssertionError("coordinatization does not preserve addition")
    return Coordinatization(out, tuple(int(b) for b in basis), perm)


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Group moduli followed by the minimal relabelled table, as bytes."""

    data: bytes

    @classmethod
    def build(cls, group: AdditiveGroup, table_bytes: bytes) -> CanonicalForm:
        head = bytes([group.rank]) + b"".join(d.to_bytes(2, "big") for d in group.moduli)
        return cls(head + table_bytes)

    def hex(self) -> str:
        return self.data.hex()

    def __str__(self):
        return self.hex()


def _dtype(n: int):
    return np.dtype(">u1") if n <= 256 else np.dtype(">u2")


def relabel(R: FiniteRing, perm) -> FiniteRing:
    """The ring transported along the bijection x -> perm[x]."""
    perm = np.asarray(perm, dtype=np.int64)
    inv = np.empty_like(perm)
    inv[perm] = np.arange(len(perm))
    mul = perm[R.mul_table[inv][:, inv]]
    add = perm[R.add_table[inv][:, inv]]
    labels = [R.labels[i] for i in inv] if R.labels is not None else None
    return FiniteRing(add, mul, group=R.group, name=R.name, provenance=R.provenance, labels=labels)


def canonical_labeling(R: FiniteRing) -> tuple[CanonicalForm, np.ndarray]:
    """Canonical form of a coordinate ring and an automorphism reaching it."""
    if R.group is None:
        raise ValueError("canonical forms need a coordinate ring; coordinatize first")
    perms = automorphism_permutations(R.group)
    M = R.mul_table
    dt = _dtype(R.order)
    best = None
    best_perm = None
    for lo in range(0, len(perms), _BATCH):
        P = perms[lo : lo + _BATCH]
        inv = np.argsort(P, axis=1)
        rows = M[inv[:, :, None], inv[:, None, :]]  # (B, n, n)
        tabs = np.take_along_axis(P, rows.reshape(len(P), -1), axis=1).astype(dt)
        blobs = [t.tobytes() for t in tabs]
        i = min(range(len(blobs)), key=blobs.__getitem__)
        if best is None or blobs[i] < best:
            best, best_perm = blobs[i], P[i]
    return CanonicalForm.build(R.group, best), np.array(best_perm)


def canonical_form(R: FiniteRing) -> CanonicalForm:
    if R.group is None:
        R = coordinatize(R).ring
    return canonical_labeling(R)[0]


def invariants(R: FiniteRing) -> tuple:
    """Cheap isomorphism invariants, used to reject non-isomorphic pairs early."""
    M = R.mul_table
    orders = R.additive_orders
    per_element = sorted(
        (
            int(orders[x]),
            int(orders[M[x, x]]),
            nilpotency_index(R, x) or 0,
            int((M[x] == 0).sum()),
            int((M[:, x] == 0).sum()),
        )
        for x in range(R.order)
    )
    return (
        R.order,
        characteristic(R),
        bool(is_commutative(R)),
        bool(is_unital(R)),
        len(np.unique(M)),
        tuple(per_element),
    )


@dataclass(frozen=True)
class IsoResult:
    verdict: bool
    mapping: tuple[int, ...] | None = None  # mapping[x in R] = image in S
    reason: str = ""

    def __bool__(self):
        return self.verdict


def are_isomorphic(R: FiniteRing, S: FiniteRing) -> IsoResult:
    if R.order != S.order:
        return IsoResult(False, reason="orders differ")
    cr, cs = coordinatize(R), coordinatize(S)
    if cr.ring.group != cs.ring.group:
        return IsoResult(False, reason="additive groups differ")
    if invariants(cr.ring) != invariants(cs.ring):
        return IsoResult(False, reason="invariants differ")
    fr, sr = canonical_labeling(cr.ring)
    fs, ss = canonical_labeling(cs.ring)
    if fr != fs:
        return IsoResult(False, reason="canonical forms differ")
    # input R -> coordinate R -> canonical -> coordinate S -> input S
    r_in = np.empty_like(cr.perm)
    r_in[cr.perm] = np.arange(R.order)
    ss_inv = np.empty_like(ss)
    ss_inv[ss] = np.arange(S.order)
    mapping = cs.perm[ss_inv[sr[r_in]]]
    m = tuple(int(x) for x in mapping)
    if not is_isomorphism(R, S, m):
        raise AssertionError("canonical forms agree but the derived map is not an isomorphism")
    return IsoResult(True, m, "canonical forms agree")


def is_isomorphism(R: FiniteRing, S: FiniteRing, mapping) -> bool:
    f = np.asarray(mapping, dtype=np.int64)
    if f.shape != (R.order,) or R.order != S.order or len(set(f.tolist())) != R.order:
        return False
    return bool(
        np.array_equal(f[R.add_table], S.add_table[f[:, None], f[None, :]])
        and np.array_equal(f[R.mul_table], S.mul_table[f[:, None], f[None, :]])
    )
