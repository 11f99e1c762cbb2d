"""Rings of square matrices over Z/m generated by a few matrices."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ClosureTooLarge, FormatError, NotClosed
from .ring import FiniteRing

Matrix = tuple[tuple[int, ...], ...]

MAX_DIM = 4
DEFAULT_CLOSURE_CAP = 4096


def make_matrix(rows, modulus: int) -> Matrix:
    return tuple(tuple(int(x) % modulus for x in row) for row in rows)


def zero_matrix(dim: int) -> Matrix:
    return tuple((0,) * dim for _ in range(dim))


def mat_add(a: Matrix, b: Matrix, m: int) -> Matrix:
    return tuple(tuple((x + y) % m for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_mul(a: Matrix, b: Matrix, m: int) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) % m for col in cols) for row in a)


def flatten(a: Matrix) -> tuple[int, ...]:
    return tuple(x for row in a for x in row)


def parse_matrix(text: str) -> list[list[int]]:
    """Parse the literal grammar "r0c0,r0c1;r1c0,r1c1" into rows of ints."""
    rows = [r.strip() for r in text.strip().split(";")]
    try:
        out = [[int(x) for x in r.split(",")] for r in rows]
    except ValueError:
        raise FormatError("gens", f"non-integer entry in matrix literal {text!r}") from None
    dim = len(out)
    if any(len(r) != dim for r in out):
        raise FormatError("gens", f"matrix literal {text!r} is not square")
    return out


def format_matrix(a: Matrix) -> str:
    return ";".join(",".join(str(x) for x in row) for row in a)


@dataclass
class MatrixGenSpec:
    modulus: int
    dim: int
    generators: list[Matrix]
    closure_cap: int = DEFAULT_CLOSURE_CAP
    name: str = ""
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError("modulus must be >= 2")
        if not 1 <= self.dim <= MAX_DIM:
            raise ValueError(f"dimension must be in 1..{MAX_DIM}")
        if not self.generators:
            raise ValueError("need at least one generator")
        gens = []
        for g in self.generators:
            if len(g) != self.dim or any(len(r) != self.dim for r in g):
                raise ValueError(f"generator {g} is not {self.dim}x{self.dim}")
            gens.append(make_matrix(g, self.modulus))
        self.generators = gens

    @classmethod
    def from_literals(cls, modulus: int, dim: int, literals, **kw) -> MatrixGenSpec:
        return cls(modulus, dim, [parse_matrix(t) for t in literals], **kw)


def closure(spec: MatrixGenSpec) -> list[Matrix]:
    """Smallest set with 0 and the generators closed under + and *, sorted."""
    m = spec.modulus
    z = zero_matrix(spec.dim)
    seen = {z}
    order = [z]
    work = []
    for g in spec.generators:
        if g not in seen:
            seen.add(g)
            order.append(g)
            work.append(g)
    while work:
        x = work.pop()
        # pair the new element with everything known so far, both sides
        for y in list(order):
            for z2 in (mat_add(x, y, m), mat_mul(x, y, m), mat_mul(y, x, m)):
                if z2 not in seen:
                    seen.add(z2)
                    order.append(z2)
                    work.append(z2)
                    if len(seen) > spec.closure_cap:
                        raise ClosureTooLarge(f"closure exceeds {spec.closure_cap} elements")
    return sorted(seen, key=flatten)


def to_ring(elements, modulus: int, *, name: str = "", provenance: dict | None = None) -> FiniteRing:
    """Tables of the matrix set, zero first then lexicographic on entries."""
    elems = sorted(set(elements), key=flatten)
    if not elems:
        raise ValueError("empty element set")
    dim = len(elems[0])
    z = zero_matrix(dim)
    if z not in elems:
        raise NotClosed((None, None), "containing zero")
    elems.remove(z)
    elems.insert(0, z)
    pos = {e: i for i, e in enumerate(elems)}
    n = len(elems)
    add = np.zeros((n, n), dtype=np.int64)
    mul = np.zeros((n, n), dtype=np.int64)
    for i, a in enumerate(elems):
        for j, b in enumerate(elems):
            s = mat_add(a, b, modulus)
            p = mat_mul(a, b, modulus)
            if s not in pos:
                raise NotClosed((i, j), "addition")
            if p not in pos:
                raise NotClosed((i, j), "multiplication")
            add[i, j] = pos[s]
            mul[i, j] = pos[p]
    prov = {"source": "matrix-closure", "modulus": modulus, "dim": dim}
    prov.update(provenance or {})
    labels = [format_matrix(e) for e in elems]
    return FiniteRing(add, mul, name=name, provenance=prov, labels=labels)


def matrix_ring(spec: MatrixGenSpec) -> FiniteRing:
    prov = {"generators": [format_matrix(g) for g in spec.generators]}
    return to_ring(closure(spec), spec.modulus, name=spec.name, provenance=prov)


EXAMPLE1_GENERATORS = (((2, 0), (0, 0)), ((0, 1), (0, 0)))
EXAMPLE2_GENERATORS = (((2, 0), (0, 0)), ((0, 2), (0, 0)))


def example1_ring() -> FiniteRing:
    """Noncommutative even-square ring of order 8: upper rows over Z/4."""
    return matrix_ring(MatrixGenSpec(4, 2, list(EXAMPLE1_GENERATORS), name="example-1"))


def example2_ring() -> FiniteRing:
    """Noncommutative even-square ring of order 9 inside 2x2 matrices over Z/6."""
    return matrix_ring(MatrixGenSpec(6, 2, list(EXAMPLE2_GENERATORS), name="example-2"))
