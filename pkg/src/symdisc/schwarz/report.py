"""Structured results of theorem checks."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

TOL_FIRST = 1e-7
TOL_SECOND = 1e-6


class TheoremId(enum.Enum):
    DISC_SCHWARZ = "1.1"
    DISC_BOUNDARY = "1.2"
    INTERIOR = "1.3"
    S_AXIS = "3.1"
    P_AXIS = "3.2"
    P_AXIS_REMARK = "3.2-remark"
    ROYAL = "3.3"
    C31 = "C31"
    C32 = "C32"
    C33 = "C33"
    C34 = "C34"
    C35 = "C35"
    C36 = "C36"


@dataclass(frozen=True)
class Clause:
    """One checked statement.

    ``residual`` is the amount by which the statement misses: a distance for
    equalities, ``lhs - rhs`` for inequalities ``lhs <= rhs`` (negative means
    slack).
    """

    id: str
    passed: bool
    residual: float
    tolerance: float
    statement: str = ""

    def __post_init__(self):
        object.__setattr__(self, "passed", bool(self.passed))
        object.__setattr__(self, "residual", float(self.residual))
        object.__setattr__(self, "tolerance", float(self.tolerance))


def equal(cid: str, value: complex, target: complex, tol: float, statement: str = "") -> Clause:
    r = abs(complex(value) - complex(target))
    return Clause(cid, bool(r <= tol), r, tol, statement)


def at_most(cid: str, lhs: float, rhs: float, tol: float, statement: str = "") -> Clause:
    r = float(lhs) - float(rhs)
    return Clause(cid, bool(r <= tol), r, tol, statement)


def is_real(cid: str, value: complex, tol: float, statement: str = "") -> Clause:
    value = complex(value)
    bound = tol * (1 + abs(value.real))
    return Clause(cid, bool(abs(value.imag) <= bound), abs(value.imag), bound, statement)


def _jsonable(x):
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, (float, np.floating)):
        x = float(x)
        return x if math.isfinite(x) else None
    if isinstance(x, (complex, np.complexfloating)):
        return [_jsonable(x.real), _jsonable(x.imag)]
    if isinstance(x, np.ndarray):
        return [_jsonable(v) for v in x.tolist()]
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, enum.Enum):
        return x.value
    if x is None or isinstance(x, str):
        return x
    return str(x)


@dataclass
class CheckReport:
    theorem_id: TheoremId
    quantities: dict = field(default_factory=dict)
    clauses: list = field(default_factory=list)
    diagnostics: dict = field(default_factory=dict)
    subject: str = ""

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.clauses)

    def clause(self, cid: str) -> Clause:
        for c in self.clauses:
            if c.id == cid:
                return c
        raise KeyError(cid)

    def failed(self) -> list[Clause]:
        return [c for c in self.clauses if not c.passed]

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem_id.value,
            "subject": self.subject,
            "overall": self.overall,
            "quantities": _jsonable(self.quantities),
            "diagnostics": _jsonable(self.diagnostics),
            "clauses": [
                {"id": c.id, "passed": c.passed, "residual": _jsonable(c.residual),
                 "tolerance": _jsonable(c.tolerance), "statement": c.statement}
                for c in self.clauses
            ],
        }
