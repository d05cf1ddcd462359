"""Formal Fourier–Mukai kernel calculus for the truncated universal ideal functor.

The functor ``G: D(Z) → D_{S_n}(Z^n)`` sits in a triangle ``G → G' → G''``
with ``G' = H^*(-) ⊗ O_{Z^n}`` and ``G''`` the inflation of the pullback along
the last projection.  Compositions of right adjoints with these kernels are
formal sums of three atoms (the diagonal, the box product ``O_Z ⊠ O_Z`` and
``O_Z ⊠ ω_Z``) with graded multiplicities.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Mapping

from .gvs import ONE, ZERO, GradedDim, SignedLaurent, direct_sum, shift, sym_power

__all__ = [
    "KernelAtom",
    "FormalKernel",
    "Case",
    "GeometricInput",
    "FunctorClass",
    "RankInput",
    "compose_kernels",
    "grg",
    "pn_condition1_check",
    "euler_consistency",
    "rank_fr",
    "rank_twist",
    "geometric_series",
]


class KernelAtom(enum.Enum):
    DIAGONAL = "Diagonal"
    PRODUCT = "Product"
    PRODUCT_OMEGA = "ProductOmega"

    @property
    def symbol(self) -> str:
        return {"Diagonal": "Δ", "Product": "O⊠O", "ProductOmega": "O⊠ω"}[self.value]


class FormalKernel:
    """Finite formal sum ``Σ atom · multiplicity``; immutable."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[KernelAtom, GradedDim] | None = None):
        clean = {}
        for atom in KernelAtom:
            g = (terms or {}).get(atom, ZERO)
            if not g.is_zero():
                clean[atom] = g
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("FormalKernel is immutable")

    def __getitem__(self, atom: KernelAtom) -> GradedDim:
        return self._terms.get(atom, ZERO)

    def atoms(self) -> tuple[KernelAtom, ...]:
        return tuple(self._terms)

    def __add__(self, other: FormalKernel) -> FormalKernel:
        return FormalKernel({a: direct_sum(self[a], other[a]) for a in KernelAtom})

    def __eq__(self, other) -> bool:
        return isinstance(other, FormalKernel) and self._terms == other._terms

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    def classes(self) -> dict[KernelAtom, SignedLaurent]:
        return {a: SignedLaurent.euler_class(g) for a, g in self._terms.items()}

    def to_json(self) -> dict:
        return {a.value: g.to_json() for a, g in self._terms.items()}

    def __repr__(self) -> str:
        return f"FormalKernel({ {a.value: g for a, g in self._terms.items()} })"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " ⊕ ".join(f"{a.symbol}·({g})" for a, g in self._terms.items())


class Case(enum.Enum):
    EVEN_CY = "even-cy"
    ODD_CY = "odd-cy"
    TRIVIAL = "trivial"
    OTHER = "other"


@dataclass(frozen=True)
class GeometricInput:
    """``n`` points on a ``d``-dimensional ``Z`` with ``H^*(O_Z) = h``."""

    n: int
    d: int
    h: GradedDim
    case: Case

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("n must be at least 2")
        if self.d < 1:
            raise ValueError("d must be positive")
        cy = GradedDim({0: 1, self.d: 1})
        if self.case is Case.EVEN_CY and (self.d % 2 or self.h != cy):
            raise ValueError("even-CY needs even d and h = C[0]⊕C[-d]")
        if self.case is Case.ODD_CY and (self.d % 2 == 0 or self.h != cy):
            raise ValueError("odd-CY needs odd d and h = C[0]⊕C[-d]")
        if self.case is Case.TRIVIAL and self.h != ONE:
            raise ValueError("trivial-cohomology case needs h = C[0]")

    @classmethod
    def calabi_yau(cls, d: int, n: int) -> GeometricInput:
        return cls(n, d, GradedDim({0: 1, d: 1}), Case.EVEN_CY if d % 2 == 0 else Case.ODD_CY)

    @classmethod
    def trivial(cls, n: int, d: int = 2) -> GeometricInput:
        return cls(n, d, ONE, Case.TRIVIAL)


@dataclass(frozen=True)
class FunctorClass:
    tag: str
    degree: int | None = None

    PN = "PnFunctor"
    SPHERE_LIKE = "SphereLike"
    FULLY_FAITHFUL = "FullyFaithful"
    UNDETERMINED = "Undetermined"

    def __str__(self) -> str:
        if self.tag == self.PN:
            return f"P^{self.degree}-functor"
        return {
            self.SPHERE_LIKE: "sphere-like functor",
            self.FULLY_FAITHFUL: "fully faithful",
            self.UNDETERMINED: "undetermined",
        }[self.tag]

    def to_json(self) -> dict:
        return {"tag": self.tag, "degree": self.degree}


@dataclass(frozen=True)
class RankInput:
    chi: int
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("n must be at least 2")


def geometric_series(d: int, terms: int) -> GradedDim:
    """``C[0] ⊕ C[-d] ⊕ ⋯ ⊕ C[-d(terms-1)]``."""
    return GradedDim({d * i: 1 for i in range(terms)})


def compose_kernels(g: GeometricInput) -> dict[str, FormalKernel]:
    """The four compositions of right adjoints with ``G'`` and ``G''``.

    Keys are ``"G'^RG'"``, ``"G'^RG''"``, ``"G''^RG'"`` and ``"G''^RG''"``.
    """
    n, d, h = g.n, g.d, g.h
    s = {k: sym_power(h, k) for k in (n - 2, n - 1, n)}
    P, PO, D = KernelAtom.PRODUCT, KernelAtom.PRODUCT_OMEGA, KernelAtom.DIAGONAL
    return {
        "G'^RG'": FormalKernel({PO: shift(s[n], d)}),
        "G'^RG''": FormalKernel({PO: shift(s[n - 1], d)}),
        "G''^RG'": FormalKernel({P: s[n - 1]}),
        "G''^RG''": FormalKernel({D: s[n - 1], P: s[n - 2]}),
    }


def grg(g: GeometricInput) -> tuple[FormalKernel | None, FunctorClass]:
    """``G^R G`` and the resulting class of ``G`` in the three resolved cases.

    Anything else, including odd-CY with ``n = 2``, is ``Undetermined`` and no
    kernel is returned.
    """
    D = KernelAtom.DIAGONAL
    if g.case is Case.EVEN_CY:
        return FormalKernel({D: geometric_series(g.d, g.n)}), FunctorClass(FunctorClass.PN, g.n - 1)
    if g.case is Case.ODD_CY and g.n >= 3:
        return FormalKernel({D: g.h}), FunctorClass(FunctorClass.SPHERE_LIKE)
    if g.case is Case.TRIVIAL:
        return FormalKernel({D: ONE}), FunctorClass(FunctorClass.FULLY_FAITHFUL)
    return None, FunctorClass(FunctorClass.UNDETERMINED)


def pn_condition1_check(kernel: FormalKernel, n: int, d: int) -> bool:
    """Is ``kernel`` exactly ``Δ·(id ⊕ H ⊕ ⋯ ⊕ H^{n-1})`` with ``H = [-d]``?"""
    if kernel is None:
        return False
    return kernel.atoms() == (KernelAtom.DIAGONAL,) and kernel[KernelAtom.DIAGONAL] == geometric_series(d, n)


def euler_consistency(g: GeometricInput) -> bool:
    """Alternating class sum over the 3×3 diagram of triangles versus ``grg``.

    ``[G^R G] = [G'^R G'] − [G''^R G'] − [G'^R G''] + [G''^R G'']`` per atom.  For
    Calabi–Yau ``Z`` the canonical bundle is trivial, so ``O⊠ω`` and ``O⊠O``
    are the same atom.
    """
    kernel, cls = grg(g)
    if kernel is None:
        raise ValueError(f"G^R G is undetermined for {g}")
    comp = compose_kernels(g)
    merge = g.case in (Case.EVEN_CY, Case.ODD_CY)

    def classes(k: FormalKernel) -> dict[KernelAtom, SignedLaurent]:
        out: dict[KernelAtom, SignedLaurent] = {}
        for atom, cl in k.classes().items():
            if merge and atom is KernelAtom.PRODUCT_OMEGA:
                atom = KernelAtom.PRODUCT
            out[atom] = out.get(atom, SignedLaurent()) + cl
        return out

    total: dict[KernelAtom, SignedLaurent] = {}
    for key, sign in (("G'^RG'", 1), ("G''^RG'", -1), ("G'^RG''", -1), ("G''^RG''", 1)):
        for atom, cl in classes(comp[key]).items():
            total[atom] = total.get(atom, SignedLaurent()) + cl * sign
    total = {a: c for a, c in total.items() if c}
    return total == classes(kernel)


def rank_fr(r: RankInput) -> int:
    """Rank of ``FR(k(ξ))`` at a reduced point: χ − 2n."""
    return r.chi - 2 * r.n


def rank_twist(r: RankInput) -> int:
    """Rank of the twist applied to ``k(ξ)``.

    The twist is the cone of a map from two copies of ``FR(k(ξ))`` (one per
    counit component) to the rank-zero skyscraper, so its rank is
    ``−2(χ − 2n)``.
    """
    return -2 * rank_fr(r)
