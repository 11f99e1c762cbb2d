"""Independent ring-count oracle.

Shares nothing with the enumerator beyond the additive-group tables, the
bilinear extension and the axiom checker:

* candidate generator-product tables are generated breadth-first with
  numpy, using a static schedule (a generator triple is tested once the
  whole row and column it could read are assigned), no orbit pruning;
* every survivor is fully validated;
* classes are formed by pairwise isomorphism tests done by element-wise
  backtracking over bijections, no automorphism groups or canonical forms.
"""

from __future__ import annotations

import math

import numpy as np

from finrings.groups import AdditiveGroup, abelian_groups_of_order
from finrings.ring import FiniteRing, bilinear_table, check_axioms


def _cell_schedule(k):
    order, seen = [], set()
    for i in range(k):
        for cell in [(i, j) for j in range(k)] + [(j, i) for j in range(k)]:
            if cell not in seen:
                seen.add(cell)
                order.append(cell)
    return order


def associative_tables(group: AdditiveGroup) -> np.ndarray:
    """All associative generator-product tables, as an (N, k, k) array."""
    k, n = group.rank, group.order
    if k == 0:
        return np.zeros((1, 0, 0), dtype=np.int64)
    add, smul, C = group.add_table, group.scalar_table, group.coords
    orders = group.orders
    sched = _cell_schedule(k)
    pos = {cell: t for t, cell in enumerate(sched)}
    triples = [(a, b, c) for a in range(k) for b in range(k) for c in range(k)]
    ready_at = {}
    for a, b, c in triples:
        need = [(a, m) for m in range(k)] + [(m, c) for m in range(k)]
        ready_at.setdefault(max(pos[x] for x in need), []).append((a, b, c))

    states = np.zeros((1, 0), dtype=np.int64)
    for t, (i, j) in enumerate(sched):
        g = math.gcd(group.moduli[i], group.moduli[j])
        vals = np.array([x for x in range(n) if g % orders[x] == 0], dtype=np.int64)
        states = np.concatenate(
            [np.repeat(states, len(vals), axis=0), np.tile(vals, len(states))[:, None]], axis=1
        )
        for a, b, c in ready_at.get(t, []):
            col = lambda r, s: states[:, pos[(r, s)]]  # noqa: E731
            lhs = np.zeros(len(states), dtype=np.int64)
            rhs = np.zeros(len(states), dtype=np.int64)
            ab, bc = col(a, b), col(b, c)
            for m in range(k):
                lhs = add[lhs, smul[C[ab, m], col(m, c)]]
                rhs = add[rhs, smul[C[bc, m], col(a, m)]]
            states = states[lhs == rhs]
    out = np.zeros((len(states), k, k), dtype=np.int64)
    for (i, j), t in pos.items():
        out[:, i, j] = states[:, t]
    return out


def _simple_key(R: FiniteRing):
    M = R.mul_table
    orders = R.additive_orders
    return (
        bool((M == M.T).all()),
        int((M == 0).sum()),
        tuple(sorted(zip(orders.tolist(), orders[np.diagonal(M)].tolist()))),
    )


def find_isomorphism(R: FiniteRing, S: FiniteRing):
    """Backtracking search for a bijection preserving + and *; None if none exists."""
    n = R.order
    if S.order != n:
        return None
    AR, MR, AS, MS = R.add_table, R.mul_table, S.add_table, S.mul_table
    oR, oS = R.additive_orders, S.additive_orders
    f = [-1] * n
    used = [False] * n
    f[0], used[0] = 0, True

    def consistent(x):
        y = f[x]
        for z in range(n):
            w = f[z]
            if w < 0:
                continue
            for T, U in ((AR, AS), (MR, MS)):
                for p, q, pw, qw in ((x, z, y, w), (z, x, w, y)):
                    r = T[p, q]
                    if f[r] >= 0 and f[r] != U[pw, qw]:
                        return False
        return True

    def rec(x):
        if x == n:
            g = np.array(f)
            return bool(
                np.array_equal(g[AR], AS[g[:, None], g[None, :]])
                and np.array_equal(g[MR], MS[g[:, None], g[None, :]])
            )
        if f[x] >= 0:
            return rec(x + 1)
        for y in range(n):
            if used[y] or oR[x] != oS[y] or oR[MR[x, x]] != oS[MS[y, y]]:
                continue
            f[x], used[y] = y, True
            if consistent(x) and rec(x + 1):
                return True
            f[x], used[y] = -1, False
        return False

    return list(f) if rec(1) else None


def oracle_classes(n: int) -> list[FiniteRing]:
    """One representative per isomorphism class of rings of order n."""
    reps: list[FiniteRing] = []
    buckets: dict = {}
    for group in abelian_groups_of_order(n):
        for gp in associative_tables(group):
            mul = bilinear_table(group, gp) if group.rank else np.zeros((1, 1), np.int64)
            R = FiniteRing.from_group(group, mul)
            if check_axioms(R) is not None:
                continue
            key = (group.moduli, _simple_key(R))
            bucket = buckets.setdefault(key, [])
            if any(find_isomorphism(R, S) is not None for S in bucket):
                continue
            bucket.append(R)
            reps.append(R)
    return reps
