"""JSON and CSV encoding of results, with exact round-tripping.

Rationals travel as "P" or "P/Q" strings, never floats; quadratic elements
as {"x": "P/Q", "y": "P/Q"} objects.  Every ``*_to_json`` has a matching
``*_from_json`` so reports survive a serialize/parse cycle unchanged.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .identities import Counterexample, IdentityReport
from .oeis import MatchReport, OeisRef
from .quadfield import QuadElement, Rational, SquarefreeD, validate_d
from .sequences import SeqTerm

CSV_HEADER = "n,fib,lucas"


def frac_to_str(value: Rational) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def frac_from_str(text: str) -> Fraction:
    return Fraction(text)


def element_to_json(e: QuadElement) -> dict[str, str]:
    return {"x": frac_to_str(e.x), "y": frac_to_str(e.y)}


def element_from_json(obj: dict[str, str], d: SquarefreeD) -> QuadElement:
    return QuadElement(d, frac_from_str(obj["x"]), frac_from_str(obj["y"]))


def term_to_json(term: SeqTerm) -> dict[str, Any]:
    return {"n": term.n, "fib": term.fib, "lucas": frac_to_str(term.lucas)}


def term_from_json(obj: dict[str, Any]) -> SeqTerm:
    return SeqTerm(obj["n"], obj["fib"], frac_from_str(obj["lucas"]))


def _side_to_json(value: Rational | QuadElement) -> Any:
    if isinstance(value, QuadElement):
        return element_to_json(value)
    return frac_to_str(value)


def _side_from_json(obj: Any, d: SquarefreeD) -> Rational | QuadElement:
    if isinstance(obj, dict):
        return element_from_json(obj, d)
    return frac_from_str(obj)


def identity_report_to_json(report: IdentityReport) -> dict[str, Any]:
    return {
        "identity": report.identity,
        "d": report.d.d,
        "index_range": list(report.index_range),
        "passed": report.passed,
        "skipped": report.skipped,
        "counterexamples": [
            {
                "indices": list(c.indices),
                "lhs": _side_to_json(c.lhs),
                "rhs": _side_to_json(c.rhs),
            }
            for c in report.counterexamples
        ],
    }


def identity_report_from_json(obj: dict[str, Any]) -> IdentityReport:
    d = validate_d(obj["d"])
    return IdentityReport(
        identity=obj["identity"],
        d=d,
        index_range=tuple(obj["index_range"]),
        passed=obj["passed"],
        skipped=obj["skipped"],
        counterexamples=tuple(
            Counterexample(
                tuple(c["indices"]),
                _side_from_json(c["lhs"], d),
                _side_from_json(c["rhs"], d),
            )
            for c in obj["counterexamples"]
        ),
    )


def match_report_to_json(report: MatchReport) -> dict[str, Any]:
    return {
        "d": report.d.d,
        "which": report.which,
        "a_number": report.a_number,
        "shift": report.shift,
        "matched_terms": report.matched_terms,
        "verdict": report.verdict,
    }


def match_report_from_json(obj: dict[str, Any]) -> MatchReport:
    return MatchReport(
        d=validate_d(obj["d"]),
        which=obj["which"],
        a_number=obj["a_number"],
        shift=obj["shift"],
        matched_terms=obj["matched_terms"],
        verdict=obj["verdict"],
    )


def oeis_ref_to_json(ref: OeisRef) -> dict[str, Any]:
    return {"a_number": ref.a_number, "offset": ref.offset, "terms": list(ref.terms)}


def oeis_ref_from_json(obj: dict[str, Any]) -> OeisRef:
    return OeisRef(obj["a_number"], tuple(obj["terms"]), obj["offset"])


def emit_json(payload: dict[str, Any]) -> str:
    return json.dumps(payload, ensure_ascii=False, indent=2) + "\n"


def parse_json(text: str) -> dict[str, Any]:
    return json.loads(text)


def emit_terms_csv(terms: list[SeqTerm]) -> str:
    lines = [CSV_HEADER]
    lines.extend(f"{t.n},{t.fib},{frac_to_str(t.lucas)}" for t in terms)
    return "\n".join(lines) + "\n"


def parse_terms_csv(text: str) -> list[SeqTerm]:
    lines = [line for line in text.splitlines() if line]
    if not lines or lines[0] != CSV_HEADER:
        raise ValueError("missing n,fib,lucas header row")
    out = []
    for line in lines[1:]:
        n, fib, lucas = line.split(",")
        out.append(SeqTerm(int(n), int(fib), frac_from_str(lucas)))
    return out
