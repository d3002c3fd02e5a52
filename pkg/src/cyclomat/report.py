"""Verification ledgers and deterministic serialization.

All emitted output is byte-stable for a fixed configuration: JSON keys are
sorted, there are no timestamps unless a caller injects one, and integers
wider than 2**53 are rendered as decimal strings so consumers that read JSON
numbers as doubles never lose precision.  Matrix and polynomial payloads use
decimal strings throughout.  CSV follows RFC 4180 (CRLF line endings).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .intmat import IntMatrix, IntPoly

SAFE_INT = 1 << 53


@dataclass
class Check:
    """One verified identity: name, parameters, verdict, optional payload."""

    name: str
    ok: bool
    params: dict | None = None
    detail: dict | None = None
    skipped: bool = False

    def to_obj(self):
        obj = {"check": self.name,
               "params": jsonable(self.params or {}),
               "pass": bool(self.ok)}
        if self.skipped:
            obj["skipped"] = True
        if self.detail is not None:
            key = "detail" if self.ok else "counterexample"
            obj[key] = jsonable(self.detail)
        return obj


@dataclass
class VerifySuiteResult:
    """Ordered pass/fail ledger for a batch of identity checks."""

    checks: list = field(default_factory=list)

    @property
    def passed(self):
        return all(c.ok for c in self.checks if not c.skipped)

    def add(self, name, ok, params=None, detail=None, skipped=False):
        self.checks.append(Check(name, ok, params, detail, skipped))

    def merge(self, other):
        self.checks.extend(other.checks)
        return self

    def failures(self):
        return [c for c in self.checks if not c.ok and not c.skipped]

    def to_obj(self):
        return [c.to_obj() for c in self.checks]


def jsonable(x):
    """Recursively convert a payload into JSON-serializable primitives."""
    if isinstance(x, bool) or x is None or isinstance(x, (str, float)):
        return x
    if isinstance(x, int):
        return x if -SAFE_INT < x < SAFE_INT else str(x)
    if isinstance(x, IntMatrix):
        return matrix_to_obj(x)
    if isinstance(x, IntPoly):
        return poly_to_obj(x)
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if isinstance(x, (Check, VerifySuiteResult)):
        return x.to_obj()
    if hasattr(x, "to_obj"):
        return x.to_obj()
    raise TypeError("cannot serialize %r" % type(x))


def dumps(obj, compact=False):
    """Canonical JSON: UTF-8-safe, sorted keys, stable spacing."""
    if compact:
        return json.dumps(jsonable(obj), sort_keys=True,
                          separators=(",", ":"))
    return json.dumps(jsonable(obj), sort_keys=True, indent=2)


# ----------------------------------------------------------------------
# matrices and polynomials
# ----------------------------------------------------------------------

def matrix_to_obj(m):
    """JSON form: array of arrays of decimal strings."""
    return [[str(v) for v in row] for row in m.rows]


def matrix_from_obj(obj):
    return IntMatrix([[int(s) for s in row] for row in obj])


def poly_to_obj(poly):
    """JSON form: decimal-string coefficients, low degree first."""
    return [str(c) for c in poly.coeffs]


def poly_from_obj(obj):
    return IntPoly([int(s) for s in obj])


def matrix_to_csv(m):
    """RFC 4180 rows of decimal integers (CRLF line endings)."""
    return "".join(",".join(str(v) for v in row) + "\r\n" for row in m.rows)


def matrix_from_csv(text):
    rows = [line.split(",") for line in text.replace("\r\n", "\n").split("\n")
            if line]
    return IntMatrix([[int(v) for v in row] for row in rows])


def matrix_pretty(m, label=None):
    """Aligned bracketed rows for eyeball comparison."""
    width = max((len(str(v)) for row in m.rows for v in row), default=1)
    lines = []
    if label:
        lines.append("%s (%dx%d):" % (label, m.dim, m.dim))
    for row in m.rows:
        lines.append("[ " + "  ".join(str(v).rjust(width) for v in row) + " ]")
    return "\n".join(lines) + "\n"
