"""Action of the twist generators ``[1]``, ``T_E^{⊠n}`` and ``T_ρ`` on test objects.

The test objects are ``F^{⊠n}``, the mixed inflations ``E^k·F^{n-k}`` for
``1 ≤ k ≤ n-1`` and ``E^{⊠n} ⊗ ρ`` for ``ρ ⊢ n``.  Every generator sends a
test object to a shift of itself, possibly tensored with ``ω``, so the action
is recorded by a shift increment and an ω-parity flip.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Sequence

from .symrep import Partition, as_partition, partition_count, partitions

__all__ = [
    "TestObject",
    "Generator",
    "ActionMatrix",
    "RankCertificate",
    "all_test_objects",
    "generators",
    "apply_generator",
    "commutation_check",
    "action_matrix",
    "faithful_rank",
    "rank_certificate",
    "elimination_minor",
    "apply_word",
    "bareiss_rank",
]


@dataclass(frozen=True)
class TestObject:
    """``kind`` is ``"PureF"``, ``"MixedEF"`` (with ``k``) or ``"BoxE"`` (with ``rho``)."""

    __test__ = False  # not a pytest class

    kind: str
    k: int = 0
    rho: Partition | None = None
    shift: int = 0
    omega_parity: int = 0

    @property
    def name(self) -> str:
        if self.kind == "PureF":
            return "PureF"
        if self.kind == "MixedEF":
            return f"MixedEF({self.k})"
        return "BoxE(" + ",".join(map(str, self.rho)) + ")"

    def check(self, n: int) -> None:
        if self.kind == "PureF":
            return
        if self.kind == "MixedEF":
            if not 1 <= self.k <= n - 1:
                raise ValueError(f"MixedEF({self.k}) needs 1 <= k <= {n - 1}")
        elif self.kind == "BoxE":
            if self.rho is None or sum(self.rho) != n:
                raise ValueError(f"BoxE needs a partition of {n}")
        else:
            raise ValueError(f"unknown test object kind {self.kind!r}")

    @property
    def state(self) -> tuple[int, int]:
        return self.shift, self.omega_parity


@dataclass(frozen=True)
class Generator:
    """``kind`` is ``"Shift1"``, ``"TBox"`` or ``"TRho"`` (with ``rho``)."""

    kind: str
    rho: Partition | None = None

    @property
    def name(self) -> str:
        if self.kind == "TRho":
            return "TRho(" + ",".join(map(str, self.rho)) + ")"
        return self.kind


def all_test_objects(n: int) -> list[TestObject]:
    return (
        [TestObject("PureF")]
        + [TestObject("MixedEF", k=k) for k in range(1, n)]
        + [TestObject("BoxE", rho=rho) for rho in partitions(n)]
    )


def generators(n: int) -> list[Generator]:
    return [Generator("Shift1"), Generator("TBox")] + [Generator("TRho", rho) for rho in partitions(n)]


def apply_generator(g: Generator, o: TestObject, n: int) -> TestObject:
    o.check(n)
    if g.kind == "TRho" and (g.rho is None or sum(g.rho) != n):
        raise ValueError(f"T_ρ needs a partition of {n}")
    if g.kind == "Shift1":
        return replace(o, shift=o.shift + 1)
    if g.kind == "TBox":
        if o.kind == "BoxE":
            return replace(o, shift=o.shift - n)
        return replace(o, shift=o.shift - o.k)
    if g.kind == "TRho":
        if o.kind == "BoxE" and tuple(o.rho) == tuple(g.rho):
            return replace(o, shift=o.shift - (2 * n - 1), omega_parity=1 - o.omega_parity)
        return o
    raise ValueError(f"unknown generator {g.kind!r}")


def commutation_check(n: int, gens: Sequence[Generator] | None = None) -> bool:
    """Do all ordered pairs of generators commute on every test object?"""
    gens = generators(n) if gens is None else list(gens)
    for o in all_test_objects(n):
        for g1 in gens:
            for g2 in gens:
                a = apply_generator(g2, apply_generator(g1, o, n), n)
                b = apply_generator(g1, apply_generator(g2, o, n), n)
                if a != b:
                    return False
    return True


@dataclass(frozen=True)
class ActionMatrix:
    rows: tuple[str, ...]
    cols: tuple[str, ...]
    entries: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {"rows": list(self.rows), "cols": list(self.cols), "matrix": [list(r) for r in self.entries]}


def action_matrix(n: int) -> ActionMatrix:
    """Shift increment of each generator (column) on each test object (row)."""
    objs, gens = all_test_objects(n), generators(n)
    entries = tuple(tuple(apply_generator(g, o, n).shift - o.shift for g in gens) for o in objs)
    return ActionMatrix(tuple(o.name for o in objs), tuple(g.name for g in gens), entries)


def bareiss_rank(rows: Sequence[Sequence[int]]) -> tuple[int, list[int], list[int]]:
    """Rank by fraction-free Gaussian elimination.

    Returns ``(rank, pivot_rows, pivot_cols)`` with row indices referring to
    the input; the pivot rows and columns select a nonsingular minor.
    """
    m = [list(map(int, r)) for r in rows]
    order = list(range(len(m)))
    ncols = len(m[0]) if m else 0
    prev, r = 1, 0
    pivot_cols = []
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        order[r], order[p] = order[p], order[r]
        for i in range(r + 1, len(m)):
            for j in range(c + 1, ncols):
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        pivot_cols.append(c)
        r += 1
        if r == len(m):
            break
    return r, sorted(order[:r]), pivot_cols


def _det(mat: Sequence[Sequence[int]]) -> int:
    m = [[Fraction(x) for x in row] for row in mat]
    size, det = len(m), Fraction(1)
    for c in range(size):
        p = next((i for i in range(c, size) if m[i][c] != 0), None)
        if p is None:
            return 0
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        for i in range(c + 1, size):
            f = m[i][c] / m[c][c]
            for j in range(c, size):
                m[i][j] -= f * m[c][j]
    return int(det)


def faithful_rank(n: int) -> int:
    return bareiss_rank(action_matrix(n).entries)[0]


def elimination_minor(n: int) -> tuple[list[str], int]:
    """Rows PureF, MixedEF(1) and every BoxE(ρ): the square minor that pins each exponent in turn.

    Its determinant is ``1 · (−1) · (−(2n−1))^{p(n)}``.
    """
    am = action_matrix(n)
    names = ["PureF", "MixedEF(1)"] + [r for r in am.rows if r.startswith("BoxE")]
    sub = [am.entries[am.rows.index(r)] for r in names]
    return names, _det(sub)


@dataclass(frozen=True)
class RankCertificate:
    n: int
    rank: int
    columns: int
    kernel_trivial: bool
    minor_rows: tuple[str, ...]
    minor_det: int
    stated_rank: int

    @property
    def discrepancy(self) -> bool:
        return self.rank != self.stated_rank

    @property
    def note(self) -> str:
        if not self.discrepancy:
            return ""
        return (
            f"stated G_E ≅ Z^{{p(n)}} = Z^{self.stated_rank}, but the exponents of [1], "
            f"T_E^{{⊠n}} and every T_ρ are independent: computed rank {self.rank} = p(n)+2"
        )

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "rank": self.rank,
            "generators": self.columns,
            "integer_kernel_trivial": self.kernel_trivial,
            "certificate": {"rows": list(self.minor_rows), "determinant": self.minor_det},
            "stated_rank_p(n)": self.stated_rank,
            "discrepancy": self.discrepancy,
            "note": self.note,
        }


def rank_certificate(n: int) -> RankCertificate:
    am = action_matrix(n)
    rank, _, _ = bareiss_rank(am.entries)
    rows, det = elimination_minor(n)
    cols = len(am.cols)
    return RankCertificate(n, rank, cols, rank == cols and det != 0, tuple(rows), det, partition_count(n))


def apply_word(n: int, exponents: dict[Generator, int], o: TestObject) -> TestObject:
    """Apply ``∏ g^{e_g}``; a negative exponent applies the inverse generator."""
    for g, e in exponents.items():
        for _ in range(abs(e)):
            moved = apply_generator(g, o, n)
            step = moved.shift - o.shift
            o = replace(moved, shift=o.shift + (step if e > 0 else -step))
    return o
