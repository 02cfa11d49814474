"""Graded Milnor algebra, Steenbrink spectrum and the s_p invariants.

Everything here is exact integer/rational arithmetic.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Any

from .core import WeightSystem
from .errors import NonIntegerMilnorNumber, NonPolynomialQuotient
from .polyarith import quasi_homogeneous_quotient

__all__ = [
    "PoincarePolynomial",
    "Spectrum",
    "poincare_polynomial",
    "milnor_number",
    "spectrum",
    "s_vector",
]


@dataclass(frozen=True)
class PoincarePolynomial:
    """Hilbert series of the Milnor algebra; ``coeffs[m]`` is the dimension
    of the weighted-degree-``m`` piece."""

    coeffs: tuple[int, ...]

    @property
    def top_degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def milnor_number(self) -> int:
        return sum(self.coeffs)

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def __getitem__(self, m: int) -> int:
        if 0 <= m < len(self.coeffs):
            return self.coeffs[m]
        return 0

    def to_list(self) -> list[int]:
        return list(self.coeffs)


@dataclass(frozen=True)
class Spectrum:
    entries: tuple[tuple[Fraction, int], ...]
    n: int

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.entries)

    @property
    def minimum(self) -> Fraction:
        return self.entries[0][0]

    def as_multiset(self) -> dict[Fraction, int]:
        return dict(self.entries)

    def __iter__(self) -> Iterator[tuple[Fraction, int]]:
        return iter(self.entries)

    def is_symmetric(self) -> bool:
        ms = self.as_multiset()
        return all(ms.get(self.n + 1 - x) == m for x, m in self.entries)

    def to_json(self) -> list[dict[str, int]]:
        return [{"num": x.numerator, "den": x.denominator, "mult": m} for x, m in self.entries]


def poincare_polynomial(ws: WeightSystem) -> PoincarePolynomial:
    coeffs = quasi_homogeneous_quotient(ws.weights, ws.degree)
    if coeffs is None:
        raise NonPolynomialQuotient(
            f"prod (t^(d-a_i)-1)/(t^(a_i)-1) is not a polynomial with non-negative "
            f"coefficients for {ws}"
        )
    return PoincarePolynomial(tuple(coeffs))


def milnor_number(ws: WeightSystem) -> int:
    """mu = prod (d - a_i) / a_i, which must be an integer."""
    num = prod(ws.degree - a for a in ws.weights)
    den = prod(ws.weights)
    if num % den:
        raise NonIntegerMilnorNumber(f"prod (d-a_i)/a_i = {num}/{den} for {ws}")
    return num // den


def spectrum(ws: WeightSystem) -> Spectrum:
    """Spectral number (m + sum a_i)/d with multiplicity coeffs[m]."""
    pp = poincare_polynomial(ws)
    shift = sum(ws.weights)
    merged: dict[Fraction, int] = {}
    for m, c in enumerate(pp.coeffs):
        if c:
            x = Fraction(m + shift, ws.degree)
            merged[x] = merged.get(x, 0) + c
    return Spectrum(tuple(sorted(merged.items())), ws.dim)


def s_vector(ws: WeightSystem) -> tuple[int, ...]:
    """``(s_0, ..., s_n)`` with s_p the number of spectral values in
    the half-open interval (n-p, n-p+1]."""
    n = ws.dim
    s = [0] * (n + 1)
    for x, mult in spectrum(ws):
        # x in (n-p, n-p+1]  <=>  p = n + 1 - ceil(x)
        p = n + 1 - _ceil(x)
        s[p] += mult
    return tuple(s)


def _ceil(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def spectrum_to_dict(sp: Spectrum) -> dict[str, Any]:
    return {"n": sp.n, "entries": sp.to_json()}
