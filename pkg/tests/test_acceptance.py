"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line."""

import json
import time

from conftest import ACCEPTANCE_LINES
from finrings.claims import EXAMPLE1_ELEMENTS, EXAMPLE2_ELEMENTS, run_all
from finrings.cli import run
from finrings.enumerate import EnumFilter, enumerate_forms, enumerate_rings
from finrings.iso import are_isomorphic, canonical_form
from finrings.matrices import example2_ring, format_matrix
from finrings.properties import (
    anticommutes,
    is_commutative,
    is_even_square,
    is_nil,
    is_zero_square,
    two_anticommutes,
    two_commutes,
    zero_divisor_analysis,
)
from finrings.ring import characteristic, check_axioms, two_R
from finrings.ringfile import parse_ring, serialize_ring
from naive_oracle import oracle_classes


def record(num, title, ok, detail):
    ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {num} {title}: {detail}")
    assert ok, detail


def _lines(out):
    return out.splitlines()


def test_1_example_reproduction():
    t = time.perf_counter()
    c1, out1 = run(["matrix", "--mod", "4", "--dim", "2", "--gens", "2,0;0,0", "0,1;0,0"])
    c2, out2 = run(["matrix", "--mod", "6", "--dim", "2", "--gens", "2,0;0,0", "0,2;0,0"])
    elapsed = time.perf_counter() - t
    set1 = set(_lines(out1)[2].removeprefix("elements: ").split(" | "))
    set2 = set(_lines(out2)[2].removeprefix("elements: ").split(" | "))
    ok = (
        c1 == c2 == 0
        and set1 == {format_matrix(m) for m in EXAMPLE1_ELEMENTS}
        and set2 == {format_matrix(m) for m in EXAMPLE2_ELEMENTS}
        and _lines(out1)[0] == "order 8, noncommutative, even-square, char 4, nil (index 3)"
        and _lines(out1)[1].startswith("witness: ")
        and _lines(out2)[0].startswith("order 9, noncommutative, even-square")
        and elapsed < 1.0
    )
    record(1, "example reproduction", ok, f"8- and 9-element sets match, char 4, {elapsed:.2f} s (< 1 s)")


def test_2_minimality_order_8():
    t = time.perf_counter()
    rings8 = list(enumerate_rings(8))
    t8 = time.perf_counter() - t
    t = time.perf_counter()
    forms_parallel = enumerate_forms(8, jobs=8)
    t8p = time.perf_counter() - t
    flt = EnumFilter.parse("noncommutative,even-square")
    below = {n: sum(1 for _ in enumerate_rings(n, flt)) for n in range(1, 8)}
    hits = [R for R in rings8 if flt.accepts(R)]
    ok = (
        not any(below.values())
        and len(hits) >= 1
        and all(characteristic(R) == 4 and is_nil(R) for R in hits)
        and forms_parallel == sorted(canonical_form(R) for R in rings8)
        and t8 < 60
        and t8p < 15
    )
    record(
        2,
        "minimality (order 8)",
        ok,
        f"orders 1..7: 0, order 8: {len(hits)} (all char 4, nil); "
        f"order-8 enumeration {t8:.2f} s single, {t8p:.2f} s with 8 jobs",
    )


def test_3_odd_minimality():
    t = time.perf_counter()
    small = {n: all(is_commutative(R) for R in enumerate_rings(n)) for n in (3, 5, 7)}
    nine = [R for R in enumerate_rings(9) if not is_commutative(R) and is_even_square(R)]
    ex2 = example2_ring()
    match = [R.name for R in nine if are_isomorphic(ex2, R)]
    elapsed = time.perf_counter() - t
    ok = all(small.values()) and len(match) == 1 and elapsed < 10
    record(3, "odd minimality (order 9)", ok, f"orders 3,5,7 commutative, Example 2 is {match}, {elapsed:.2f} s")


def test_4_anticommuting_and_counterexample(all_rings, ex1):
    pool = [R for R in all_rings if characteristic(R) == 4 and is_even_square(R)]
    exceptions = [R.name for R in pool if anticommutes(R) and not is_commutative(R)]
    cx = bool(two_anticommutes(ex1)) and bool(two_commutes(ex1)) and not is_commutative(ex1)
    ok = bool(pool) and not exceptions and cx
    record(
        4,
        "anticommuting implies commutative; counterexample",
        ok,
        f"{len(pool)} char-4 even-square rings, {len(exceptions)} exceptions; Example 1 2ab=2ba, 2ab+2ba=0, noncommutative: {cx}",
    )


def test_5_oracle_equivalence():
    mismatched = []
    for n in range(2, 10):
        ours = set(enumerate_forms(n))
        oracle = {canonical_form(R) for R in oracle_classes(n)}
        if ours != oracle:
            mismatched.append(n)
    stable = enumerate_forms(8) == enumerate_forms(8, jobs=3)
    counts = {n: len(enumerate_forms(n)) for n in (2, 3, 4, 5, 7, 8, 9)}
    ok = (
        not mismatched
        and stable
        and counts[4] == 11
        and counts[8] == 52
        and counts[9] == 11
        and all(counts[p] == 2 for p in (2, 3, 5, 7))
    )
    record(5, "oracle equivalence", ok, f"orders 2..9 identical, counts {counts}, jobs-stable {stable}")


def test_6_property_suites(all_rings):
    fails = []
    for R in all_rings:
        M, A = R.mul_table, R.add_table
        es = bool(is_even_square(R))
        if is_zero_square(R) and not es:
            fails.append(("zero-square", R.name))
        I = set(two_R(R))
        if R.order % 2 and len(I) != R.order:
            fails.append(("odd 2R", R.name))
        closed = all(A[a, b] in I for a in I for b in I)
        absorbs = all(M[a, r] in I and M[r, a] in I for a in I for r in range(R.order))
        if not (closed and absorbs):
            fails.append(("2R ideal", R.name))
        if R.group.is_cyclic and not is_commutative(R):
            fails.append(("cyclic", R.name))
        if characteristic(R) == 2 and es and not is_commutative(R):
            fails.append(("char 2", R.name))
        if R.order in (2, 4, 8) and es and not is_nil(R):
            fails.append(("2^n nil", R.name))
        zd = zero_divisor_analysis(R)
        if zd.in_hypothesis and not zd.all_nonzero_are_zero_divisors:
            fails.append(("zero divisor", R.name))
    record(6, "property suites", not fails, f"{len(all_rings)} rings of order <= 9, exceptions {fails}")


def test_7_determinism_and_format(tmp_path):
    a = run(["verify-paper", "--max-order", "9", "--format", "json"])
    b = run(["verify-paper", "--max-order", "9", "--format", "json"])
    md_a = run(["verify-paper", "--max-order", "9", "--format", "md"])
    md_b = run(["verify-paper", "--max-order", "9", "--format", "md"])
    out = tmp_path / "rings"
    run(["enumerate", "--order", "9", "--out", str(out)])
    run(["enumerate", "--order", "8", "--out", str(out)])
    bad = []
    for path in sorted(out.iterdir()):
        text = path.read_text()
        R = parse_ring(text)
        if serialize_ring(R) != text or check_axioms(R) is not None:
            bad.append(path.name)
    report = json.loads(a[1])
    ok = a[0] == 0 and a == b and md_a == md_b and not bad and "refuted" not in report["summary"]
    n_files = len(list(out.iterdir()))
    record(7, "determinism and format", ok, f"verify-paper exit {a[0]}, byte-identical; {n_files} RingFiles round-trip")


def test_report_claims_all_hold():
    rep = run_all(9)
    assert rep.ok
