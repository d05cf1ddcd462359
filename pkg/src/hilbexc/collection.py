"""Exceptional collections on the base variety, described by their Ext tables."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from .gvs import ONE, ZERO, GradedDim, direct_sum, dual, shift

__all__ = [
    "CollectionError",
    "ExceptionalCollection",
    "Strength",
    "Violation",
    "ValidationReport",
    "validate",
    "classify_strength",
    "cy_lift_ext",
    "is_spherical_lift",
    "with_serre_omega",
    "load_collection",
    "parse_collection",
]


class CollectionError(ValueError):
    """Raised when a collection violates the exceptional-collection rules."""

    def __init__(self, message: str, violations: Sequence[Violation] = ()):
        super().__init__(message)
        self.violations = list(violations)


class Strength(enum.Enum):
    COMPLETELY_ORTHOGONAL = "completely-orthogonal"
    STRONG = "strong"
    GENERAL = "general"

    @property
    def is_strong(self) -> bool:
        return self is not Strength.GENERAL


@dataclass(frozen=True)
class ExceptionalCollection:
    """``ext[i][j] = Ext^*(E_i, E_j)``; ``omega_ext[i][j] = Ext^*(E_i, E_j ⊗ ω)``."""

    ext: tuple[tuple[GradedDim, ...], ...]
    omega_ext: tuple[tuple[GradedDim, ...], ...] | None = None
    cover_dim: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "ext", tuple(tuple(row) for row in self.ext))
        if self.omega_ext is not None:
            object.__setattr__(self, "omega_ext", tuple(tuple(row) for row in self.omega_ext))

    @property
    def k(self) -> int:
        return len(self.ext)

    def to_json(self) -> dict:
        data: dict = {"k": self.k, "ext": [[e.to_json() for e in row] for row in self.ext]}
        if self.omega_ext is not None:
            data["omega_ext"] = [[e.to_json() for e in row] for row in self.omega_ext]
        if self.cover_dim is not None:
            data["cover_dim"] = self.cover_dim
        return data

    @classmethod
    def from_diagonal(cls, k: int, off_diagonal: dict[tuple[int, int], GradedDim] | None = None) -> ExceptionalCollection:
        """Collection with ``C[0]`` on the diagonal and the given upper entries."""
        off_diagonal = off_diagonal or {}
        ext = [[ONE if i == j else off_diagonal.get((i, j), ZERO) for j in range(k)] for i in range(k)]
        return cls(ext)


@dataclass(frozen=True)
class Violation:
    kind: str
    i: int
    j: int
    degree: int | None = None
    expected: int | None = None
    actual: int | None = None

    def to_json(self) -> dict:
        out = {"kind": self.kind, "pair": [self.i, self.j]}
        if self.degree is not None:
            out.update(degree=self.degree, expected=self.expected, actual=self.actual)
        return out


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)
    completely_orthogonal: bool = False

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "valid": self.ok,
            "completely_orthogonal": self.completely_orthogonal,
            "violations": [v.to_json() for v in self.violations],
        }


def _table_shape_violations(table, k: int, name: str) -> list[Violation]:
    out = []
    if len(table) != k:
        out.append(Violation(f"{name}-shape", len(table), k))
        return out
    for i, row in enumerate(table):
        if len(row) != k:
            out.append(Violation(f"{name}-shape", i, len(row)))
    return out


def validate(c: ExceptionalCollection) -> ValidationReport:
    k = c.k
    report = ValidationReport()
    shape = _table_shape_violations(c.ext, k, "ext")
    if c.omega_ext is not None:
        shape += _table_shape_violations(c.omega_ext, k, "omega_ext")
    if c.cover_dim is not None and (c.cover_dim <= 0 or c.cover_dim % 2):
        shape.append(Violation("cover-dim", -1, -1, actual=c.cover_dim))
    if shape:
        report.violations = shape
        return report
    for i in range(k):
        for j in range(k):
            e = c.ext[i][j]
            if i == j:
                for d in sorted(set(e.degrees()) | {0}):
                    want = 1 if d == 0 else 0
                    if e[d] != want:
                        report.violations.append(Violation("diagonal", i, j, d, want, e[d]))
            elif i > j:
                for d, m in e.items():
                    report.violations.append(Violation("lower-triangular", i, j, d, 0, m))
    report.completely_orthogonal = report.ok and all(
        c.ext[i][j].is_zero() for i in range(k) for j in range(k) if i != j
    )
    return report


def classify_strength(c: ExceptionalCollection) -> Strength:
    report = validate(c)
    if not report.ok:
        raise CollectionError("invalid exceptional collection", report.violations)
    if report.completely_orthogonal:
        return Strength.COMPLETELY_ORTHOGONAL
    if all(e.concentrated_in(0) for row in c.ext for e in row):
        return Strength.STRONG
    return Strength.GENERAL


def cy_lift_ext(c: ExceptionalCollection, i: int, j: int) -> GradedDim:
    """Ext between the pullbacks of ``E_i`` and ``E_j`` to the canonical cover."""
    if c.omega_ext is None:
        raise CollectionError("collection carries no ω-twisted Ext data")
    return direct_sum(c.ext[i][j], c.omega_ext[i][j])


def is_spherical_lift(c: ExceptionalCollection, i: int) -> bool:
    if c.omega_ext is None or c.cover_dim is None:
        raise CollectionError("spherical check needs omega_ext and cover_dim")
    return cy_lift_ext(c, i, i) == GradedDim({0: 1, c.cover_dim: 1})


def with_serre_omega(c: ExceptionalCollection, cover_dim: int = 2) -> ExceptionalCollection:
    """Fill ``omega_ext`` by Serre duality: ``Ext^i(E_a, E_b ⊗ ω) = Ext^{d-i}(E_b, E_a)^∨``."""
    k = c.k
    omega = [[shift(dual(c.ext[j][i]), -cover_dim) for j in range(k)] for i in range(k)]
    return ExceptionalCollection(c.ext, omega, cover_dim)


def parse_collection(data) -> ExceptionalCollection:
    """Build a collection from decoded JSON; raises ``ValueError`` on malformed input."""
    if not isinstance(data, dict):
        raise ValueError("collection file must hold a JSON object")
    if "ext" not in data:
        raise ValueError("collection file lacks an 'ext' table")

    def table(raw, name):
        if not isinstance(raw, list) or not all(isinstance(row, list) for row in raw):
            raise ValueError(f"'{name}' must be a list of lists")
        return [[GradedDim.from_json(e) for e in row] for row in raw]

    ext = table(data["ext"], "ext")
    k = data.get("k", len(ext))
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise ValueError(f"'k' must be a positive integer, got {k!r}")
    omega = table(data["omega_ext"], "omega_ext") if data.get("omega_ext") is not None else None
    cover_dim = data.get("cover_dim")
    if cover_dim is not None and (isinstance(cover_dim, bool) or not isinstance(cover_dim, int)):
        raise ValueError("'cover_dim' must be an integer")
    c = ExceptionalCollection(ext, omega, cover_dim)
    if k != c.k:
        raise CollectionError(f"'k' is {k} but the ext table has {c.k} rows", [Violation("k-mismatch", k, c.k)])
    return c


def load_collection(path: str | Path) -> ExceptionalCollection:
    """Parse and validate a collection file.

    ``ValueError`` (including ``json.JSONDecodeError``) signals malformed input,
    :class:`CollectionError` a well-formed file that is not an exceptional collection.
    """
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    c = parse_collection(data)
    report = validate(c)
    if not report.ok:
        where = ", ".join(f"({v.i},{v.j})" + (f" degree {v.degree}" if v.degree is not None else "") for v in report.violations)
        raise CollectionError(f"invalid exceptional collection: {where}", report.violations)
    return c
