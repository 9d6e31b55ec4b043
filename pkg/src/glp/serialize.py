"""Versioned JSON documents. Rationals travel as ``"p/q"`` strings."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Mapping, Sequence

from .errors import GLPError
from .exactspace import as_rational, fmt
from .gla.algebra import GradedLieAlgebra, from_brackets
from .linalg import Matrix

SCHEMA_VERSION = 1


def schema(kind: str) -> str:
    return f"glp/{kind}@{SCHEMA_VERSION}"


def _q(x: Fraction) -> str:
    return fmt(Fraction(x))


def matrix_to_json(m: Matrix) -> list[list[str]]:
    return [[_q(x) for x in row] for row in m]


def matrix_from_json(data: Any) -> Matrix:
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise GLPError("matrix must be a list of rows")
    return [[as_rational(x) for x in row] for row in data]


def check_schema(doc: Mapping[str, Any], kind: str) -> None:
    got = doc.get("schema")
    if got is not None and got != schema(kind):
        raise GLPError(f"expected schema {schema(kind)!r}, got {got!r}")


def algebra_to_json(g: GradedLieAlgebra) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "schema": schema("algebra"),
        "basis": list(g.basis_names),
        "degrees": list(g.degrees),
        "brackets": [
            [i, j, [[k, _q(c)] for k, c in sorted(v.items())]] for (i, j), v in sorted(g.brackets.items()) if v
        ],
    }
    if g.matrices is not None:
        doc["matrices"] = [matrix_to_json(m) for m in g.matrices]
    if g.grading_matrix is not None:
        doc["grading_matrix"] = matrix_to_json(g.grading_matrix)
    return doc


def algebra_from_json(doc: Mapping[str, Any]) -> GradedLieAlgebra:
    check_schema(doc, "algebra")
    try:
        names = [str(x) for x in doc["basis"]]
        degrees = [int(d) for d in doc["degrees"]]
        table: dict[tuple[int, int], dict[int, Fraction]] = {}
        for i, j, terms in doc.get("brackets", []):
            table[(int(i), int(j))] = {int(k): as_rational(c) for k, c in terms}
    except (KeyError, TypeError, ValueError) as exc:
        raise GLPError(f"malformed algebra document: {exc}") from exc
    mats = doc.get("matrices")
    grading = doc.get("grading_matrix")
    return from_brackets(
        names,
        degrees,
        table,
        [matrix_from_json(m) for m in mats] if mats is not None else None,
        matrix_from_json(grading) if grading is not None else None,
    )


def vectors_to_json(vs: Sequence[Mapping[int, Fraction]], n: int) -> list[list[str]]:
    return [[_q(v.get(i, Fraction(0))) for i in range(n)] for v in vs]


def vectors_from_json(data: Any, n: int) -> list[dict[int, Fraction]]:
    out = []
    for row in data:
        if len(row) != n:
            raise GLPError(f"vector of length {len(row)} in a {n}-dimensional algebra")
        out.append({i: as_rational(x) for i, x in enumerate(row) if as_rational(x)})
    return out


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
