"""Deterministic JSON and markdown rendering of a ClaimReport."""

from __future__ import annotations

import json

from .claims import ClaimReport


def report_json(report: ClaimReport) -> str:
    return json.dumps(report.to_dict(), sort_keys=True, indent=2) + "\n"


def _counts_table(report: ClaimReport, orders) -> list[str]:
    stats = report.statistics
    rows = ["| order | rings | commutative | even-square | noncommutative even-square |", "|---|---|---|---|---|"]
    for n in orders:
        s = stats[str(n)]
        rows.append(
            f"| {n} | {s['total']} | {s['commutative']} | {s['even-square']} | {s['noncommutative-even-square']} |"
        )
    return rows


def report_markdown(report: ClaimReport) -> str:
    out = [f"# Even-square ring verification (orders 1..{report.max_order})", ""]
    out += ["| claim | verdict |", "|---|---|"]
    out += [f"| {c.id} | {c.verdict} |" for c in report.claims]
    out.append("")
    for c in report.claims:
        out += [f"## {c.id}", "", c.description, "", f"Verdict: **{c.verdict}**", ""]
        if c.id == "P3-min-order-8":
            out += _counts_table(report, range(1, 9)) + [""]
        out += ["```json", json.dumps(c.evidence, sort_keys=True, indent=2), "```", ""]
    out += ["## Enumeration statistics", ""]
    out += _counts_table(report, range(1, report.max_order + 1))
    return "\n".join(out) + "\n"


def emit_report(report: ClaimReport, fmt: str = "json") -> str:
    if fmt == "json":
        return report_json(report)
    if fmt == "md":
        return report_markdown(report)
    raise ValueError(f"unknown report format {fmt!r}")
