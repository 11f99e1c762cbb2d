"""Isomorphism-free enumeration of all rings of a given order.

For each additive group type the multiplication is fixed by the k*k
generator products.  The search assigns them one cell at a time; a product g_a*g_b may only take values whose additive order
divides gcd(d_a, d_b), otherwise bilinearity fails.  Associativity of a
bilinear product is trilinear, so checking (g_a g_b) g_c = g_a (g_b g_c)
on generator triples is exact; each triple is checked as soon as the
cells it reads are assigned.  Isomorph rejection is orderly: only the
lexicographically minimal table of each class survives (see
`GeneratorProductSearch`), and the survivors are canonicalized for output.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, fields
from typing import Iterator

import numpy as np

from .errors import FormatError, OrderTooLarge
from .groups import AdditiveGroup, abelian_groups_of_order, automorphism_permutations
from .iso import CanonicalForm, canonical_labeling
from .properties import is_commutative, is_even_square, is_nil, is_unital, is_zero_square
from .ring import FiniteRing, bilinear_table, characteristic, check_axioms

MAX_ENUM_ORDER = 16


@dataclass(frozen=True)
class EnumFilter:
    """Optional constraints on emitted rings; None means unconstrained."""

    commutative: bool | None = None
    even_square: bool | None = None
    zero_square: bool | None = None
    nil: bool | None = None
    unital: bool | None = None
    characteristic: int | None = None

    _TOKENS = {
        "commutative": ("commutative", True),
        "noncommutative": ("commutative", False),
        "even-square": ("even_square", True),
        "not-even-square": ("even_square", False),
        "zero-square": ("zero_square", True),
        "not-zero-square": ("zero_square", False),
        "nil": ("nil", True),
        "not-nil": ("nil", False),
        "unital": ("unital", True),
        "nonunital": ("unital", False),
    }

    @classmethod
    def parse(cls, text: str | None) -> EnumFilter:
        """Parse "noncommutative,even-square,char=4" style filter lists."""
        kw = {}
        for tok in (t.strip() for t in (text or "").split(",")):
            if not tok:
                continue
            if tok.startswith("char="):
                try:
                    kw["characteristic"] = int(tok[5:])
                except ValueError:
                    raise FormatError("filter", f"bad characteristic in {tok!r}") from None
            elif tok in cls._TOKENS:
                key, val = cls._TOKENS[tok]
                kw[key] = val
            else:
                raise FormatError("filter", f"unknown filter {tok!r}")
        return cls(**kw)

    def __str__(self):
        parts = []
        for tok, (key, val) in self._TOKENS.items():
            if getattr(self, key) is val:
                parts.append(tok)
        if self.characteristic is not None:
            parts.append(f"char={self.characteristic}")
        return ",".join(parts) or "all"

    @property
    def is_empty(self) -> bool:
        return all(getattr(self, f.name) is None for f in fields(self))

    def accepts(self, R: FiniteRing) -> bool:
        checks = (
            (self.characteristic, lambda: characteristic(R)),
            (self.commutative, lambda: bool(is_commutative(R))),
            (self.even_square, lambda: bool(is_even_square(R))),
            (self.zero_square, lambda: bool(is_zero_square(R))),
            (self.nil, lambda: bool(is_nil(R))),
            (self.unital, lambda: bool(is_unital(R))),
        )
        return all(want is None or fn() == want for want, fn in checks)


def _lex_smaller_rows(images: np.ndarray, ref: np.ndarray) -> bool:
    """True if some row of `images` is lexicographically smaller than `ref`."""
    d = images - ref[None, :]
    nz = d != 0
    first = nz.argmax(axis=1)
    vals = d[np.arange(len(d)), first]
    return bool((nz.any(axis=1) & (vals < 0)).any())


def value_keys(group: AdditiveGroup) -> np.ndarray:
    """Sort key on elements: mixed radix read least significant first.

    Minimal tables then favour values supported on early generators, whose
    rows are filled first, so associativity checks fire sooner.
    """
    if group.rank == 0:
        return np.zeros(1, dtype=np.int64)
    weights = np.cumprod((1,) + group.moduli[:-1])
    return (group.coords * weights).sum(axis=1)


class GeneratorProductSearch:
    """Orderly depth-first search over associative generator-product tables.

    Cells are filled row-major; row a is the additive map x -> g_a x.  An
    automorphism s with inverse t transforms the table to
    g_a g_b -> s(g_a t(g_b)) when s fixes g_a.  At cell (i, j) the
    automorphisms that fix g_0..g_i and map span(g_0..g_j) onto itself
    therefore send the assigned prefix to another assigned prefix; if one
    of them makes it lexicographically smaller, the prefix cannot extend
    to the minimal table of its class and is pruned.  Complete tables are
    kept only if no automorphism at all yields a smaller table, leaving
    exactly one table per isomorphism class.
    """

    def __init__(self, group: AdditiveGroup, prune: bool = True):
        self.group = group
        self.prune = prune
        k = self.k = group.rank
        self.add = group.add_table.tolist()
        self.smul = group.scalar_table.tolist()
        coords = group.coords.tolist()
        # nonzero (coordinate, coefficient) pairs of every element
        self.support = [[(m, c) for m, c in enumerate(row) if c] for row in coords]
        orders = group.orders.tolist()
        self.key = value_keys(group)
        by_key = np.argsort(self.key).tolist()
        self.candidates = []
        for i in range(k):
            for j in range(k):
                g = math.gcd(group.moduli[i], group.moduli[j])
                self.candidates.append([x for x in by_key if g % orders[x] == 0])
        self.triples = [(a, b, c) for a in range(k) for b in range(k) for c in range(k)]
        self.nodes = 0
        if k:
            self._setup_symmetry()

    def _setup_symmetry(self):
        group, k = self.group, self.k
        perms = automorphism_permutations(group)
        gens = np.array([group.generator(i) for i in range(k)])
        inverses = np.argsort(perms, axis=1)
        self.perms = perms
        self.gen_preimages = inverses[:, gens]  # (A, k)
        coords = group.coords
        images = coords[perms[:, gens]]  # (A, k, k) coordinates of s(g_b)
        fixes = np.ones(len(perms), dtype=bool)
        self.cell_groups = []
        for i in range(k):
            fixes = fixes & (perms[:, gens[i]] == gens[i])
            for j in range(k):
                # s(g_b) stays inside span(g_0..g_j) for every b <= j
                inside = (images[:, : j + 1, j + 1 :] == 0).all(axis=(1, 2))
                self.cell_groups.append(np.flatnonzero(fixes & inside))
        self.moduli = np.array(group.moduli, dtype=np.int64)
        self.pre_coords = coords[self.gen_preimages]  # (A, k, k): coords of t(g_b)

    def _lhs(self, gp, a, b, c):
        """(g_a g_b) g_c, or None while a cell it reads is unassigned."""
        k, add, smul = self.k, self.add, self.smul
        x = gp[a * k + b]
        if x is None:
            return None
        acc = 0
        for m, coef in self.support[x]:
            v = gp[m * k + c]
            if v is None:
                return None
            acc = add[acc][smul[coef][v]]
        return acc

    def _rhs(self, gp, a, b, c):
        """g_a (g_b g_c), or None while a cell it reads is unassigned."""
        k, add, smul = self.k, self.add, self.smul
        x = gp[b * k + c]
        if x is None:
            return None
        acc = 0
        for m, coef in self.support[x]:
            v = gp[a * k + m]
            if v is None:
                return None
            acc = add[acc][smul[coef][v]]
        return acc

    def _check(self, gp, pending):
        """Split pending triples into still-undetermined ones; ok=False on a violation."""
        rest = []
        for a, b, c in pending:
            lhs = self._lhs(gp, a, b, c)
            rhs = None if lhs is None else self._rhs(gp, a, b, c)
            if rhs is None:
                rest.append((a, b, c))
            elif lhs != rhs:
                return rest, False
        return rest, True

    def _prefix_minimal(self, gp, t: int) -> bool:
        sel = self.cell_groups[t]
        if len(sel) <= 1:
            return True
        k, group = self.k, self.group
        rows = t // k + 1
        vals = np.array([0 if v is None else v for v in gp[: rows * k]]).reshape(rows, k)
        Q = group.coords[vals]  # (rows, k, k): coords of g_a g_m
        T = self.pre_coords[sel]  # (S, k, k): coords of t(g_b)
        new = np.einsum("sbm,amx->sabx", T, Q) % self.moduli
        idx = new @ group.place_values  # (S, rows, k)
        images = np.take_along_axis(self.perms[sel], idx.reshape(len(sel), -1), axis=1)
        key = self.key
        return not _lex_smaller_rows(key[images[:, : t + 1]], key[vals.reshape(-1)[: t + 1]])

    def table_minimal(self, mul: np.ndarray, flat_gp) -> bool:
        """No automorphism gives a lexicographically smaller generator-product table."""
        tg = self.gen_preimages
        prods = mul[tg[:, :, None], tg[:, None, :]].reshape(len(tg), -1)  # (A, k*k)
        images = np.take_along_axis(self.perms, prods, axis=1)
        return not _lex_smaller_rows(self.key[images], self.key[np.array(flat_gp)])

    def solutions(self, first_choices=None) -> Iterator[tuple[int, ...]]:
        """Yield associative generator-product tables as flat row-major tuples.

        With pruning on, exactly the class-minimal table of every ring is
        produced.  `first_choices` optionally restricts g_0*g_0.
        """
        k = self.k
        if k == 0:
            yield ()
            return
        ncells = k * k
        gp: list[int | None] = [None] * ncells
        cands = list(self.candidates)
        if first_choices is not None:
            allowed = set(first_choices)
            cands[0] = [x for x in cands[0] if x in allowed]

        def rec(t, pending):
            if t == ncells:
                flat = tuple(gp)
                if self.prune:
                    mul = bilinear_table(self.group, [flat[i * k : (i + 1) * k] for i in range(k)])
                    if not self.table_minimal(mul, flat):
                        return
                yield flat
                return
            for x in cands[t]:
                self.nodes += 1
                gp[t] = x
                rest, ok = self._check(gp, pending)
                if ok and (not self.prune or self._prefix_minimal(gp, t)):
                    yield from rec(t + 1, rest)
            gp[t] = None

        yield from rec(0, self.triples)


def first_cell_orbit_reps(group: AdditiveGroup) -> list[int]:
    """Key-minimal element of each orbit of g_0*g_0 values under automorphisms fixing g_0.

    Such an automorphism s carries a ring with g_0*g_0 = x to one with
    g_0*g_0 = s(x); the class-minimal table always uses the orbit minimum.
    """
    if group.rank == 0:
        return [0]
    g0 = group.generator(0)
    perms = automorphism_permutations(group)
    stab = perms[perms[:, g0] == g0]
    d0 = group.moduli[0]
    reps = []
    seen = set()
    for x in np.argsort(value_keys(group)).tolist():
        if d0 % int(group.orders[x]) or x in seen:
            continue
        orbit = set(int(v) for v in stab[:, x])
        seen |= orbit
        reps.append(x)
    return reps


@dataclass(frozen=True)
class Partition:
    """One independent slice of the search: a group type and a value of g_0*g_0."""

    moduli: tuple[int, ...]
    first: int


def partitions(n: int) -> list[Partition]:
    out = []
    for group in abelian_groups_of_order(n):
        for x in first_cell_orbit_reps(group):
            out.append(Partition(group.moduli, x))
    return out


def search_partition(part: Partition) -> dict[bytes, tuple[int, ...]]:
    """Canonical form bytes -> generator products, for every class found in the slice."""
    group = AdditiveGroup(part.moduli)
    search = GeneratorProductSearch(group)
    found: dict[bytes, tuple[int, ...]] = {}
    for flat in search.solutions([part.first] if group.rank else None):
        k = group.rank
        gp = [list(flat[i * k : (i + 1) * k]) for i in range(k)]
        R = FiniteRing.from_group(group, bilinear_table(group, gp) if k else np.zeros((1, 1), np.int64))
        err = check_axioms(R)
        if err is not None:
            raise AssertionError(f"search produced a non-ring: {err}")
        form, _ = canonical_labeling(R)
        if form.data in found:
            raise AssertionError(f"orderly search emitted two tables of one class: {found[form.data]}, {flat}")
        found[form.data] = flat
    return found


def _canonical_ring(group: AdditiveGroup, form: CanonicalForm) -> FiniteRing:
    n = group.order
    head = 1 + 2 * group.rank
    dt = np.dtype(">u1") if n <= 256 else np.dtype(">u2")
    table = np.frombuffer(form.data[head:], dtype=dt).astype(np.int64).reshape(n, n)
    return FiniteRing.from_group(group, table)


def enumerate_forms(n: int, jobs: int = 1) -> list[CanonicalForm]:
    """Sorted canonical forms of all rings of order n (one per class)."""
    if not 1 <= n <= MAX_ENUM_ORDER:
        raise OrderTooLarge(f"enumeration supports orders 1..{MAX_ENUM_ORDER}, got {n}")
    parts = partitions(n)
    if jobs > 1 and len(parts) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(search_partition, parts))
    else:
        results = [search_partition(p) for p in parts]
    merged = set()
    for r in results:
        merged.update(r)
    return sorted(CanonicalForm(b) for b in merged)


def form_group(form: CanonicalForm) -> AdditiveGroup:
    k = form.data[0]
    return AdditiveGroup(tuple(int.from_bytes(form.data[1 + 2 * i : 3 + 2 * i], "big") for i in range(k)))


def ring_from_form(form: CanonicalForm, name: str = "") -> FiniteRing:
    group = form_group(form)
    R = _canonical_ring(group, form)
    return R.with_mul(R.mul_table, name=name, provenance={"source": "enumeration", "canonical": form.hex()})


def enumerate_rings(n: int, filter: EnumFilter | None = None, jobs: int = 1) -> Iterator[FiniteRing]:
    """One ring per isomorphism class of order n satisfying `filter`.

    Rings are emitted in their canonical labelling, sorted by canonical form.
    """
    filt = filter or EnumFilter()
    for i, form in enumerate(enumerate_forms(n, jobs)):
        R = ring_from_form(form, name=f"R{n}_{i}")
        if filt.accepts(R):
            yield R
