"""Graded dimension vectors.

A :class:`GradedDim` records the dimension of each cohomological degree of a
finite-dimensional graded vector space.  The shift convention follows
``H^*(E) = ⊕ H^i(E)[-i]``: ``C[-d]`` is one dimension sitting in degree ``d``,
and ``(a[m])`` in degree ``i`` equals ``a`` in degree ``i + m``.

Symmetric powers are taken in the graded (super) sense: symmetric on even
degrees, exterior on odd degrees.
"""

from __future__ import annotations

from math import comb
from typing import Iterable, Mapping

__all__ = [
    "GradedDim",
    "SignedLaurent",
    "ZERO",
    "ONE",
    "C",
    "direct_sum",
    "tensor",
    "shift",
    "dual",
    "sym_power",
    "graded_trace",
]


def _clean(items: Iterable[tuple[int, int]]) -> dict[int, int]:
    out: dict[int, int] = {}
    for deg, mult in items:
        if mult:
            out[deg] = out.get(deg, 0) + mult
    return {d: m for d, m in sorted(out.items()) if m}


def _convolve(a: Mapping[int, int], b: Mapping[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, 0) + x * y
    return _clean(out.items())


class _Laurent:
    """Shared storage for finite-support integer functions on degrees."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] | None = None):
        if coeffs is None:
            items: Iterable[tuple[int, int]] = ()
        elif isinstance(coeffs, Mapping):
            items = coeffs.items()
        else:
            items = coeffs
        c = _clean((int(d), int(m)) for d, m in items)
        self._check(c)
        object.__setattr__(self, "_c", c)
        object.__setattr__(self, "_hash", None)

    def _check(self, c: dict[int, int]) -> None:
        pass

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __getitem__(self, degree: int) -> int:
        return self._c.get(degree, 0)

    def items(self):
        return self._c.items()

    def degrees(self) -> tuple[int, ...]:
        return tuple(self._c)

    def as_dict(self) -> dict[int, int]:
        return dict(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((type(self).__name__, tuple(self._c.items())))
            object.__setattr__(self, "_hash", h)
        return h


class GradedDim(_Laurent):
    """Finite-support, non-negative dimension function on integer degrees."""

    __slots__ = ()

    def _check(self, c: dict[int, int]) -> None:
        for d, m in c.items():
            if m < 0:
                raise ValueError(f"negative multiplicity {m} in degree {d}")

    @property
    def total(self) -> int:
        return sum(self._c.values())

    def concentrated_in(self, degree: int) -> bool:
        return all(d == degree for d in self._c)

    def __add__(self, other: GradedDim) -> GradedDim:
        return direct_sum(self, other)

    def __mul__(self, other: GradedDim) -> GradedDim:
        return tensor(self, other)

    def __repr__(self) -> str:
        return f"GradedDim({self._c!r})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for d, m in self._c.items():
            base = "C" if m == 1 else f"C^{m}"
            parts.append(f"{base}[{-d}]")
        return "⊕".join(parts)

    def to_json(self) -> dict[str, int]:
        return {str(d): m for d, m in self._c.items()}

    @classmethod
    def from_json(cls, data) -> GradedDim:
        """Parse ``{"0": 1, "-2": 1}``; keys are decimal degrees, values positive."""
        if not isinstance(data, Mapping):
            raise ValueError(f"graded dimension must be an object, got {type(data).__name__}")
        out = {}
        for key, value in data.items():
            try:
                deg = int(key)
            except (TypeError, ValueError):
                raise ValueError(f"degree key {key!r} is not a decimal integer") from None
            if isinstance(value, bool) or not isinstance(value, int):
                raise ValueError(f"multiplicity at degree {key!r} is not an integer")
            if value < 0:
                raise ValueError(f"negative multiplicity {value} at degree {key!r}")
            out[deg] = value
        return cls(out)


class SignedLaurent(_Laurent):
    """Integer Laurent polynomial in ``t``; the coefficient of ``t^j`` sits at key ``j``."""

    __slots__ = ()

    @classmethod
    def of(cls, a: GradedDim) -> SignedLaurent:
        return cls(a.items())

    @classmethod
    def euler_class(cls, a: GradedDim) -> SignedLaurent:
        """Signed Poincaré polynomial ``Σ (-1)^j dim_j t^j``; at ``t = 1`` it is χ."""
        return cls((d, (-1) ** (d % 2) * m) for d, m in a.items())

    def __add__(self, other: SignedLaurent) -> SignedLaurent:
        return SignedLaurent(list(self.items()) + list(other.items()))

    def __neg__(self) -> SignedLaurent:
        return SignedLaurent((d, -m) for d, m in self.items())

    def __sub__(self, other: SignedLaurent) -> SignedLaurent:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return SignedLaurent((d, m * other) for d, m in self.items())
        return SignedLaurent(_convolve(self._c, other._c))

    __rmul__ = __mul__

    def evaluate_at_one(self) -> int:
        return sum(self._c.values())

    def to_graded_dim(self) -> GradedDim:
        return GradedDim(self._c)

    def __repr__(self) -> str:
        return f"SignedLaurent({self._c!r})"


ZERO = GradedDim()
ONE = GradedDim({0: 1})


def C(shift_by: int = 0, mult: int = 1) -> GradedDim:
    """``C^mult[shift_by]``: ``mult`` dimensions in degree ``-shift_by``."""
    return GradedDim({-shift_by: mult})


def direct_sum(a: GradedDim, b: GradedDim) -> GradedDim:
    return GradedDim(list(a.items()) + list(b.items()))


def tensor(a: GradedDim, b: GradedDim) -> GradedDim:
    """Künneth product: degree-wise convolution."""
    return GradedDim(_convolve(a.as_dict(), b.as_dict()))


def shift(a: GradedDim, m: int) -> GradedDim:
    """``a[m]``; support moves by ``-m``."""
    return GradedDim((d - m, x) for d, x in a.items())


def dual(a: GradedDim) -> GradedDim:
    return GradedDim((-d, x) for d, x in a.items())


def sym_power(a: GradedDim, k: int) -> GradedDim:
    """Graded symmetric power ``S^k a``.

    Coefficient of ``u^k`` in ``∏_{i even} (1 - u t^i)^{-a_i} ∏_{i odd} (1 + u t^i)^{a_i}``.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    # series[m] is the coefficient of u^m, a dict degree -> multiplicity
    series: list[dict[int, int]] = [{0: 1}] + [{} for _ in range(k)]
    for deg, mult in a.items():
        odd = deg % 2 == 1
        factor = []
        for m in range(k + 1):
            c = comb(mult, m) if odd else comb(mult + m - 1, m)
            if c == 0:
                break
            factor.append((m, m * deg, c))
        new: list[dict[int, int]] = [{} for _ in range(k + 1)]
        for i, coeffs in enumerate(series):
            if not coeffs:
                continue
            for m, d_shift, c in factor:
                if i + m > k:
                    break
                target = new[i + m]
                for d, x in coeffs.items():
                    target[d + d_shift] = target.get(d + d_shift, 0) + c * x
        series = new
    return GradedDim(series[k])


def graded_trace(a: GradedDim, cycle_type: Iterable[int]) -> SignedLaurent:
    """Koszul-signed trace of a permutation of the given cycle type on ``a^{⊗n}``.

    Each cycle of length ``l`` contributes ``P_a`` with ``t ↦ (-1)^{l-1} t^l``.
    """
    result = SignedLaurent({0: 1})
    for length in cycle_type:
        if length < 1:
            raise ValueError("cycle lengths must be positive")
        factor = SignedLaurent(
            (length * d, (-1) ** ((d * (length - 1)) % 2) * x) for d, x in a.items()
        )
        result = result * factor
    return result
