"""Ring predicates that come with concrete evidence.

Every universally quantified predicate returns a `PropertyResult`; when
the verdict is False the witness is the lexicographically smallest
failing element or pair, so reports are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import OrderTooLarge, PreconditionNotMet
from .groups import MAX_ORDER
from .ring import FiniteRing, characteristic, two_R


@dataclass(frozen=True)
class Witness:
    """Evidence for a verdict.

    kind is one of: commutator-pair, bad-square, non-nilpotent,
    identity-fail, special-element, identity.
    """

    kind: str
    elements: tuple[int, ...]
    detail: dict = field(default_factory=dict, compare=False)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "elements": list(self.elements), **self.detail}


@dataclass(frozen=True)
class PropertyResult:
    verdict: bool
    witness: Witness | None = None
    numeric: int | None = None

    def __bool__(self):
        return self.verdict


def _first_pair(mask: np.ndarray):
    hits = np.argwhere(mask)
    if len(hits) == 0:
        return None
    return int(hits[0][0]), int(hits[0][1])


def _doubled(R: FiniteRing, table: np.ndarray) -> np.ndarray:
    return R.add_table[table, table]


def is_commutative(R: FiniteRing) -> PropertyResult:
    M = R.mul_table
    pair = _first_pair(M != M.T)
    if pair is None:
        return PropertyResult(True)
    a, b = pair
    return PropertyResult(False, Witness("commutator-pair", pair, {"ab": int(M[a, b]), "ba": int(M[b, a])}))


def is_even_square(R: FiniteRing) -> PropertyResult:
    """a*a lies in 2R for every a."""
    in_2r = np.zeros(R.order, dtype=bool)
    in_2r[two_R(R)] = True
    sq = np.diagonal(R.mul_table)
    bad = np.flatnonzero(~in_2r[sq])
    if len(bad) == 0:
        return PropertyResult(True)
    a = int(bad[0])
    return PropertyResult(False, Witness("bad-square", (a,), {"square": int(sq[a])}))


def is_zero_square(R: FiniteRing) -> PropertyResult:
    sq = np.diagonal(R.mul_table)
    bad = np.flatnonzero(sq != 0)
    if len(bad) == 0:
        return PropertyResult(True)
    a = int(bad[0])
    return PropertyResult(False, Witness("bad-square", (a,), {"square": int(sq[a])}))


def power_sequence(R: FiniteRing, a: int) -> list[int]:
    """a, a^2, a^3, ... up to the first zero or the first repeat (inclusive)."""
    M = R.mul_table
    seq = [a]
    seen = {a}
    x = a
    while x != 0:
        x = int(M[x, a])
        seq.append(x)
        if x in seen:
            break
        seen.add(x)
    return seq


def nilpotency_index(R: FiniteRing, a: int) -> int | None:
    """Smallest k with a^k = 0, or None when the powers cycle without reaching 0."""
    seq = power_sequence(R, a)
    return len(seq) if seq[-1] == 0 else None


def is_nil(R: FiniteRing) -> PropertyResult:
    """Every element nilpotent; numeric is the largest nilpotency index."""
    worst = 1
    for a in range(R.order):
        seq = power_sequence(R, a)
        if seq[-1] != 0:
            rep = seq[-1]
            first = seq.index(rep) + 1
            return PropertyResult(
                False,
                Witness("non-nilpotent", (a,), {"repeated_power": len(seq), "equals_power": first, "value": rep}),
            )
        worst = max(worst, len(seq))
    return PropertyResult(True, numeric=worst)


def _identity_check(R: FiniteRing, lhs: np.ndarray, rhs: np.ndarray, name: str) -> PropertyResult:
    pair = _first_pair(lhs != rhs)
    if pair is None:
        return PropertyResult(True)
    a, b = pair
    return PropertyResult(
        False, Witness("identity-fail", pair, {"identity": name, "lhs": int(lhs[a, b]), "rhs": int(rhs[a, b])})
    )


def anticommutes(R: FiniteRing) -> PropertyResult:
    """ab + ba = 0 for all a, b."""
    M = R.mul_table
    return _identity_check(R, R.add_table[M, M.T], np.zeros_like(M), "ab+ba=0")


def two_anticommutes(R: FiniteRing) -> PropertyResult:
    """2ab + 2ba = 0 for all a, b."""
    M = R.mul_table
    D = _doubled(R, M)
    return _identity_check(R, R.add_table[D, D.T], np.zeros_like(M), "2ab+2ba=0")


def two_commutes(R: FiniteRing) -> PropertyResult:
    """2ab = 2ba for all a, b."""
    D = _doubled(R, R.mul_table)
    return _identity_check(R, D, D.T, "2ab=2ba")


def two_squares_vanish(R: FiniteRing) -> PropertyResult:
    sq = np.diagonal(R.mul_table)
    d = R.add_table[sq, sq]
    bad = np.flatnonzero(d != 0)
    if len(bad) == 0:
        return PropertyResult(True)
    a = int(bad[0])
    return PropertyResult(False, Witness("identity-fail", (a, a), {"identity": "2a^2=0", "lhs": int(d[a]), "rhs": 0}))


def char4_identities(R: FiniteRing) -> PropertyResult:
    """The identities 2a^2 = 0 and 2ab + 2ba = 0 forced in characteristic 4.

    Raises PreconditionNotMet unless R is even-square of characteristic 4.
    """
    if characteristic(R) != 4:
        raise PreconditionNotMet(f"characteristic is {characteristic(R)}, not 4")
    if not is_even_square(R):
        raise PreconditionNotMet("ring is not even-square")
    r = two_squares_vanish(R)
    if not r:
        return r
    return two_anticommutes(R)


def is_unital(R: FiniteRing) -> PropertyResult:
    M = R.mul_table
    idx = np.arange(R.order)
    ok = (M == idx[None, :]).all(axis=1) & (M.T == idx[None, :]).all(axis=1)
    hits = np.flatnonzero(ok)
    if len(hits) == 0:
        return PropertyResult(False)
    e = int(hits[0])
    return PropertyResult(True, Witness("identity", (e,)), numeric=e)


@dataclass(frozen=True)
class ZeroDivisorReport:
    zero_divisors: tuple[int, ...]
    special_elements: tuple[int, ...]
    # only set when R is commutative, even-square, with one special element
    all_nonzero_are_zero_divisors: bool | None

    @property
    def in_hypothesis(self) -> bool:
        return self.all_nonzero_are_zero_divisors is not None

    def to_dict(self) -> dict:
        return {
            "zero_divisors": list(self.zero_divisors),
            "special_elements": list(self.special_elements),
            "all_nonzero_are_zero_divisors": self.all_nonzero_are_zero_divisors,
        }


def zero_divisor_analysis(R: FiniteRing) -> ZeroDivisorReport:
    """Zero divisors (one-sided counts) and nonzero a with a^2 = 2a = 0."""
    M = R.mul_table
    nz = M[1:, 1:] == 0
    zd = np.flatnonzero(nz.any(axis=1) | nz.any(axis=0)) + 1
    sq = np.diagonal(M)
    dbl = np.diagonal(R.add_table)
    special = np.flatnonzero((sq == 0) & (dbl == 0))
    special = special[special != 0]
    flag = None
    if len(special) == 1 and is_commutative(R) and is_even_square(R):
        flag = len(zd) == R.order - 1
    return ZeroDivisorReport(tuple(int(x) for x in zd), tuple(int(x) for x in special), flag)


def direct_product(R: FiniteRing, S: FiniteRing) -> FiniteRing:
    """Componentwise ring on pairs; (r, s) has index r*|S| + s."""
    n, m = R.order, S.order
    if n * m > MAX_ORDER:
        raise OrderTooLarge(f"product order {n * m} exceeds {MAX_ORDER}")

    def combine(T, U):
        big = T[:, None, :, None] * m + U[None, :, None, :]
        return big.reshape(n * m, n * m)

    labels = None
    if R.labels is not None or S.labels is not None:
        labels = [f"({R.label(r)})x({S.label(s)})" for r in range(n) for s in range(m)]
    return FiniteRing(
        combine(R.add_table, S.add_table),
        combine(R.mul_table, S.mul_table),
        name=f"{R.name or 'R'}x{S.name or 'S'}",
        provenance={"source": "direct-product"},
        labels=labels,
    )


PREDICATES = {
    "commutative": is_commutative,
    "even-square": is_even_square,
    "zero-square": is_zero_square,
    "nil": is_nil,
    "unital": is_unital,
    "anticommutes": anticommutes,
    "two-anticommutes": two_anticommutes,
    "two-commutes": two_commutes,
}


def property_report(R: FiniteRing, names=None) -> dict[str, PropertyResult]:
    """Evaluate the named predicates (all by default) plus the characteristic."""
    names = list(PREDICATES) if names is None else list(names)
    out: dict[str, PropertyResult] = {}
    for name in names:
        if name == "characteristic":
            out[name] = PropertyResult(True, numeric=characteristic(R))
        elif name == "char4-identities":
            try:
                out[name] = char4_identities(R)
            except PreconditionNotMet:
                out[name] = PropertyResult(True, numeric=None)
        elif name in PREDICATES:
            out[name] = PREDICATES[name](R)
        else:
            raise KeyError(f"unknown property {name!r}")
    if "characteristic" not in out:
        out["characteristic"] = PropertyResult(True, numeric=characteristic(R))
    return out


def witness_holds(R: FiniteRing, prop: str, w: Witness) -> bool:
    """Re-evaluate a failure witness; True iff it is a genuine violation."""
    M, A = R.mul_table, R.add_table
    if prop == "commutative":
        a, b = w.elements
        return M[a, b] != M[b, a]
    if prop in ("even-square", "zero-square"):
        (a,) = w.elements
        sq = int(M[a, a])
        return sq != 0 if prop == "zero-square" else sq not in set(two_R(R))
    if prop == "nil":
        (a,) = w.elements
        return nilpotency_index(R, a) is None
    a, b = w.elements
    if prop == "anticommutes":
        return A[M[a, b], M[b, a]] != 0
    d_ab, d_ba = A[M[a, b], M[a, b]], A[M[b, a], M[b, a]]
    if prop == "two-anticommutes":
        return A[d_ab, d_ba] != 0
    if prop == "two-commutes":
        return d_ab != d_ba
    raise KeyError(prop)

