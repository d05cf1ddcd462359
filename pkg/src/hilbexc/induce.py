"""Induced equivariant exceptional collections on the n-th cartesian power.

Objects are labelled by a non-decreasing multi-index ``alpha`` over ``1..k``
together with an irreducible representation of ``Stab(alpha)``, one partition
per block of equal entries.  Ext spaces between induced objects are computed
from the base Ext table by Künneth products and invariant theory; two
independent algorithms are provided (``method="character"`` and
``method="oracle"``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement, product
from math import factorial, prod
from typing import Sequence

from .collection import (
    CollectionError,
    ExceptionalCollection,
    Strength,
    Violation,
    validate,
)
from .gvs import ONE, ZERO, GradedDim, SignedLaurent, direct_sum, graded_trace
from .symrep import (
    IrrepLabel,
    Partition,
    class_size,
    double_cosets,
    mn_character,
    partition_count,
    partitions,
    stabilizer_of,
)

__all__ = [
    "MultiIndex",
    "InducedLabel",
    "InducedCollection",
    "VerificationReport",
    "nd",
    "lhd_compare",
    "lhd_key",
    "enumerate_labels",
    "sequence_length",
    "equivariant_ext",
    "verify_sequence",
    "cy_chain_ext",
    "FULLNESS_NOTE",
]

MultiIndex = tuple[int, ...]

FULLNESS_NOTE = "full iff input full (by cited theorem)"


def nd(alpha: Sequence[int]) -> MultiIndex:
    """Non-decreasing representative of the S_n-orbit of ``alpha``."""
    return tuple(sorted(alpha))


def lhd_key(alpha: Sequence[int]) -> tuple[MultiIndex, MultiIndex]:
    return nd(alpha), tuple(alpha)


def lhd_compare(alpha: Sequence[int], beta: Sequence[int]) -> int:
    """-1, 0 or 1 as ``alpha`` is before, equal to or after ``beta`` in ⊴.

    ⊴ compares sorted representatives lexicographically and breaks ties by
    comparing the raw tuples lexicographically.
    """
    if len(alpha) != len(beta):
        raise ValueError(f"multi-indices of lengths {len(alpha)} and {len(beta)}")
    ka, kb = lhd_key(alpha), lhd_key(beta)
    return (ka > kb) - (ka < kb)


@dataclass(frozen=True, order=False)
class InducedLabel:
    """``Inf_{Stab(alpha)}(E(alpha) ⊗ V)``, optionally tensored with ω."""

    alpha: MultiIndex
    irrep: IrrepLabel
    omega_parity: int = 0

    def __post_init__(self):
        alpha = tuple(int(a) for a in self.alpha)
        irrep = tuple(tuple(int(x) for x in p) for p in self.irrep)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "irrep", irrep)
        if not alpha:
            raise ValueError("empty multi-index")
        if any(a < 1 for a in alpha):
            raise ValueError(f"multi-index entries start at 1: {list(alpha)}")
        blocks = stabilizer_of(alpha)
        if len(irrep) != len(blocks):
            raise ValueError(f"{len(irrep)} partitions for a stabilizer with {len(blocks)} blocks")
        for p, m in zip(irrep, blocks):
            if sum(p) != m or list(p) != sorted(p, reverse=True) or any(x < 1 for x in p):
                raise ValueError(f"{list(p)} is not a partition of block size {m}")
        if self.omega_parity not in (0, 1):
            raise ValueError("omega_parity must be 0 or 1")

    @property
    def n(self) -> int:
        return len(self.alpha)

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.alpha)))

    def to_json(self) -> dict:
        out = {"alpha": list(self.alpha), "irrep": [list(p) for p in self.irrep]}
        if self.omega_parity:
            out["omega_parity"] = 1
        return out

    @classmethod
    def from_json(cls, data: dict) -> InducedLabel:
        return cls(tuple(data["alpha"]), tuple(tuple(p) for p in data["irrep"]), data.get("omega_parity", 0))

    def __str__(self) -> str:
        irr = ",".join("(" + ",".join(map(str, p)) + ")" for p in self.irrep)
        return f"α=({','.join(map(str, self.alpha))}) V=[{irr}]"


@dataclass(frozen=True)
class InducedCollection:
    base: ExceptionalCollection
    n: int
    labels: tuple[InducedLabel, ...]

    def __len__(self) -> int:
        return len(self.labels)

    def __getitem__(self, i: int) -> InducedLabel:
        return self.labels[i]

    def index(self, label: InducedLabel) -> int:
        return self.labels.index(label)


def _check_base(base: ExceptionalCollection) -> None:
    report = validate(base)
    if not report.ok:
        raise CollectionError("invalid base collection", report.violations)


def enumerate_labels(k: int, n: int, base: ExceptionalCollection | None = None) -> InducedCollection:
    """All labels in canonical order.

    Outer order is ⊴ on non-decreasing multi-indices (plain lexicographic
    there); within one multi-index, irreducible representations are ordered
    by comparing their partition tuples left to right, each partition in
    reverse-lexicographic order.  ``base`` defaults to the completely
    orthogonal collection of length ``k``.
    """
    if base is None:
        base = ExceptionalCollection.from_diagonal(k)
    if base.k != k:
        raise ValueError(f"base collection has {base.k} objects, expected {k}")
    _check_base(base)
    if n < 1:
        raise ValueError("n must be at least 1")
    labels = []
    for alpha in combinations_with_replacement(range(1, k + 1), n):
        for irrep in product(*(partitions(m) for m in stabilizer_of(alpha))):
            labels.append(InducedLabel(alpha, irrep))
    return InducedCollection(base, n, tuple(labels))


def sequence_length(k: int, n: int) -> int:
    """ℓ(k, n): coefficient of x^n in (Σ_m p(m) x^m)^k."""
    if k < 1 or n < 0:
        raise ValueError("need k >= 1 and n >= 0")
    series = [partition_count(m) for m in range(n + 1)]
    acc = [1] + [0] * n
    for _ in range(k):
        acc = [sum(acc[i] * series[j - i] for i in range(j + 1)) for j in range(n + 1)]
    return acc[n]


def _ext_table(base: ExceptionalCollection, twist: bool):
    if not twist:
        return base.ext
    if base.omega_ext is None:
        raise CollectionError("ω-twisted Ext requested but the base carries no omega_ext")
    return base.omega_ext


@lru_cache(maxsize=None)
def _trace(a: GradedDim, mu: Partition) -> SignedLaurent:
    return graded_trace(a, mu)


@lru_cache(maxsize=None)
def _char(lam: Partition, mu: Partition) -> int:
    return mn_character(lam, mu)


def _merge(types) -> Partition:
    return tuple(sorted((x for t in types for x in t), reverse=True))


@lru_cache(maxsize=None)
def _tables(rows: tuple[int, ...], cols: tuple[int, ...]):
    return double_cosets(rows, cols)


@lru_cache(maxsize=None)
def _live_tables(rows: tuple[int, ...], cols: tuple[int, ...], nonzero: tuple[tuple[bool, ...], ...]):
    live = []
    for M in _tables(rows, cols):
        cells = tuple((x, y, M[x][y]) for x in range(len(rows)) for y in range(len(cols)) if M[x][y])
        if all(nonzero[x][y] for x, y, _ in cells):
            live.append(cells)
    return tuple(live)


@lru_cache(maxsize=None)
def _block_info(alpha: MultiIndex) -> tuple[tuple[int, ...], tuple[int, ...]]:
    return tuple(sorted(set(alpha))), stabilizer_of(alpha)


def _live_cells(alpha: MultiIndex, beta: MultiIndex, table) -> list:
    """Double-coset tables whose Künneth factors are all nonzero, with their cells."""
    (va, rows), (vb, cols) = _block_info(alpha), _block_info(beta)
    sub = [[table[u - 1][v - 1] for v in vb] for u in va]
    nonzero = tuple(tuple(not e.is_zero() for e in row) for row in sub)
    live = _live_tables(rows, cols, nonzero)
    return [(cells, [sub[x][y] for x, y, _ in cells]) for cells in live]


def _character_ext(a: InducedLabel, b: InducedLabel, table, live=None) -> GradedDim:
    if live is None:
        live = _live_cells(a.alpha, b.alpha, table)
    nrows, ncols = len(a.irrep), len(b.irrep)
    total = SignedLaurent()
    for cells, entries in live:
        acc = SignedLaurent()
        for types in product(*(partitions(m) for _, _, m in cells)):
            row_types = [[] for _ in range(nrows)]
            col_types = [[] for _ in range(ncols)]
            for (x, y, _), t in zip(cells, types):
                row_types[x].append(t)
                col_types[y].append(t)
            chi = prod(_char(lam, _merge(ts)) for lam, ts in zip(a.irrep, row_types))
            if chi == 0:
                continue
            chi *= prod(_char(rho, _merge(ts)) for rho, ts in zip(b.irrep, col_types))
            if chi == 0:
                continue
            weight = chi * prod(class_size(t) for t in types)
            tr = SignedLaurent({0: 1})
            for e, t in zip(entries, types):
                tr = tr * _trace(e, t)
            acc = acc + tr * weight
        order = prod(factorial(m) for _, _, m in cells)
        for d, v in acc.items():
            if v % order:
                raise ArithmeticError(f"non-integral invariant count {v}/{order} in degree {d}")
        total = total + SignedLaurent((d, v // order) for d, v in acc.items())
    if any(v < 0 for _, v in total.items()):
        raise ArithmeticError(f"negative invariant dimension: {total!r}")
    return total.to_graded_dim()


def equivariant_ext(
    a: InducedLabel,
    b: InducedLabel,
    base: ExceptionalCollection,
    twist_omega: bool = False,
    method: str = "character",
) -> GradedDim:
    """Graded dimension of ``Ext^*_{S_n}(a, b)`` (or ``Ext^*_{S_n}(a, b ⊗ ω)``).

    ``method="character"`` sums over double cosets of the two stabilizers
    (Mackey) and averages Koszul-signed graded traces against irreducible
    characters.  ``method="oracle"`` materializes every Künneth basis vector
    and averages signed permutation traces over all of S_n; it is exponential
    and meant for n ≤ 4.
    """
    if a.n != b.n:
        raise ValueError(f"labels for n={a.n} and n={b.n}")
    k = base.k
    if max(a.alpha + b.alpha) > k:
        raise ValueError(f"multi-index entry exceeds k={k}")
    twist = bool(twist_omega) ^ bool(a.omega_parity ^ b.omega_parity)
    table = _ext_table(base, twist)
    if method == "character":
        return _character_ext(a, b, table)
    if method == "oracle":
        from .oracle import brute_force_ext

        return brute_force_ext(a, b, table)
    raise ValueError(f"unknown method {method!r}")


@dataclass
class VerificationReport:
    n_objects: int
    failures: list[Violation] = field(default_factory=list)
    strength: Strength | None = None
    fullness: str = FULLNESS_NOTE

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "exceptional": self.ok,
            "objects": self.n_objects,
            "strength": self.strength.value if self.strength else None,
            "fullness": self.fullness,
            "failures": [
                {"pair": [f.i, f.j], "degree": f.degree, "expected": f.expected, "actual": f.actual}
                for f in self.failures
            ],
        }


def _compare(i: int, j: int, want: GradedDim, got: GradedDim, kind: str) -> list[Violation]:
    out = []
    for d in sorted(set(want.degrees()) | set(got.degrees())):
        if want[d] != got[d]:
            out.append(Violation(kind, i, j, d, want[d], got[d]))
    return out


def verify_sequence(ic: InducedCollection, method: str = "character") -> VerificationReport:
    """Check exceptionality and semi-orthogonality of the labels in their stored order.

    Every object must have self-Ext ``C[0]``, and Ext from a later object to an
    earlier one must vanish.  Also records whether the sequence is strong or
    completely orthogonal.
    """
    labels = ic.labels
    report = VerificationReport(len(labels))
    strong, orthogonal = True, True
    # labels sharing a multi-index are contiguous; a block pair with no live
    # double-coset table has zero Ext for every pair of irreps in it
    blocks: dict[tuple[MultiIndex, int], list[int]] = {}
    for i, x in enumerate(labels):
        blocks.setdefault((x.alpha, x.omega_parity), []).append(i)
    fast = method == "character"
    for (alpha, pa), rows in blocks.items():
        for (beta, pb), cols in blocks.items():
            if fast and not (pa or pb):
                live = _live_cells(alpha, beta, ic.base.ext)
                if not live:
                    continue
                ext = lambda x, y: _character_ext(x, y, ic.base.ext, live)
            else:
                ext = lambda x, y: equivariant_ext(x, y, ic.base, method=method)
            for i in rows:
                for j in cols:
                    e = ext(labels[i], labels[j])
                    if i == j:
                        report.failures += _compare(i, j, ONE, e, "self-ext")
                    elif i > j:
                        report.failures += _compare(i, j, ZERO, e, "backward-ext")
                    else:
                        strong = strong and e.concentrated_in(0)
                        orthogonal = orthogonal and e.is_zero()
    report.failures.sort(key=lambda f: (f.i, f.j))
    if report.ok:
        if orthogonal:
            report.strength = Strength.COMPLETELY_ORTHOGONAL
        elif strong:
            report.strength = Strength.STRONG
        else:
            report.strength = Strength.GENERAL
    return report


def cy_chain_ext(ic: InducedCollection, i: int, j: int, method: str = "character") -> GradedDim:
    """Ext between the pullbacks of labels ``i`` and ``j`` to the canonical cover."""
    a, b = ic.labels[i], ic.labels[j]
    return direct_sum(
        equivariant_ext(a, b, ic.base, False, method),
        equivariant_ext(a, b, ic.base, True, method),
    )
