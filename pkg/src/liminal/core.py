"""Weight systems and the minimal-exponent classification of
quasi-homogeneous isolated hypersurface singularities."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .errors import NonPolynomialQuotient, NormalizationError, WeightSystemError
from .polyarith import quasi_homogeneous_quotient

__all__ = [
    "WeightSystem",
    "SingularityClass",
    "liminal_defect",
    "minimal_exponent",
    "classify",
]


def _check_int(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise WeightSystemError(f"{what} must be an integer, got {value!r}")
    return value


@dataclass(frozen=True, eq=False)
class WeightSystem:
    """C*-weights ``a_1..a_{n+1}`` of the coordinates and weighted degree ``d``.

    ``weights`` is stored sorted; ``original`` keeps the input order for
    display. Equality and hashing use the gcd-reduced form, so
    ``(2,2,2,2;8) == (1,1,1,1;4)``.
    """

    weights: tuple[int, ...]
    degree: int
    original: tuple[int, ...] = field(default=(), repr=False)

    def __init__(self, weights, degree):
        ws = tuple(_check_int(a, "weight") for a in weights)
        d = _check_int(degree, "degree")
        if len(ws) < 2:
            raise WeightSystemError("need at least two variables")
        if d < 2:
            raise WeightSystemError(f"degree must be >= 2, got {d}")
        if any(a <= 0 for a in ws):
            raise WeightSystemError(f"weights must be positive, got {ws}")
        if any(a >= d for a in ws):
            raise NormalizationError(f"weights {ws} must be below the degree {d}")
        if any(2 * a > d for a in ws):
            # an impossible quotient is the more fundamental defect
            if quasi_homogeneous_quotient(ws, d) is None:
                raise NonPolynomialQuotient(
                    f"Poincare quotient is not a polynomial for weights {ws}, degree {d}"
                )
            raise NormalizationError(f"require 2*a_i <= d; got weights {ws}, degree {d}")
        object.__setattr__(self, "original", ws)
        object.__setattr__(self, "weights", tuple(sorted(ws)))
        object.__setattr__(self, "degree", d)

    @property
    def ambient_vars(self) -> int:
        return len(self.weights)

    @property
    def dim(self) -> int:
        return len(self.weights) - 1

    @property
    def normalized_weights(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(a, self.degree) for a in self.weights)

    def canonical(self) -> WeightSystem:
        g = math.gcd(self.degree, *self.weights)
        if g == 1:
            return self
        return WeightSystem([a // g for a in self.original], self.degree // g)

    def _key(self) -> tuple[tuple[int, ...], int]:
        g = math.gcd(self.degree, *self.weights)
        return tuple(a // g for a in self.weights), self.degree // g

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightSystem):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __str__(self) -> str:
        return ",".join(map(str, self.original)) + f";{self.degree}"

    @classmethod
    def parse(cls, text: str) -> WeightSystem:
        """Parse ``"a1,a2,...,ak;d"``."""
        head, sep, tail = text.strip().partition(";")
        if not sep:
            raise WeightSystemError(f"expected 'a1,...,ak;d', got {text!r}")
        try:
            weights = [int(tok) for tok in head.split(",")]
            degree = int(tail)
        except ValueError as exc:
            raise WeightSystemError(f"cannot parse weight system {text!r}") from exc
        return cls(weights, degree)

    @classmethod
    def from_dict(cls, obj: Any) -> WeightSystem:
        if not isinstance(obj, dict) or "weights" not in obj or "degree" not in obj:
            raise WeightSystemError(f"expected {{'weights': [...], 'degree': d}}, got {obj!r}")
        if not isinstance(obj["weights"], list):
            raise WeightSystemError("'weights' must be a list")
        return cls(obj["weights"], obj["degree"])

    @classmethod
    def from_json(cls, text: str) -> WeightSystem:
        return cls.from_dict(json.loads(text))

    def to_dict(self) -> dict[str, Any]:
        return {"weights": list(self.original), "degree": self.degree}


@dataclass(frozen=True)
class SingularityClass:
    log_canonical: bool
    zero_liminal: bool
    rational: bool
    max_du_bois: int
    max_rational: int
    liminal_level: int | None

    def label(self) -> str:
        if not self.log_canonical:
            return "not log canonical"
        if self.liminal_level is not None:
            return f"{self.liminal_level}-liminal"
        return f"{self.max_rational}-rational"

    def to_dict(self) -> dict[str, Any]:
        return {
            "log_canonical": self.log_canonical,
            "zero_liminal": self.zero_liminal,
            "rational": self.rational,
            "max_du_bois": self.max_du_bois,
            "max_rational": self.max_rational,
            "liminal_level": self.liminal_level,
            "label": self.label(),
        }


def liminal_defect(ws: WeightSystem) -> int:
    """N = sum(a_i) - d; zero exactly in the 0-liminal case."""
    return sum(ws.weights) - ws.degree


def minimal_exponent(ws: WeightSystem) -> Fraction:
    return Fraction(sum(ws.weights), ws.degree)


def classify(ws: WeightSystem) -> SingularityClass:
    """Du Bois / rational levels from the minimal exponent.

    k-Du Bois iff alpha >= k+1, k-rational iff alpha > k+1; the levels are
    capped below at -1.
    """
    alpha = minimal_exponent(ws)
    max_db = math.floor(alpha) - 1
    max_rat = math.ceil(alpha) - 2
    level = max_db if alpha.denominator == 1 else None
    return SingularityClass(
        log_canonical=alpha >= 1,
        zero_liminal=alpha == 1,
        rational=alpha > 1,
        max_du_bois=max_db,
        max_rational=max_rat,
        liminal_level=level,
    )
