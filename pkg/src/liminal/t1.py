"""C*-weight decomposition of T^1 for a quasi-homogeneous hypersurface.

A monomial z^alpha in the Milnor algebra has weight ``sum(alpha_i a_i) - d``,
so the decomposition is the Poincare polynomial shifted by ``-d``. The derived
dimensions (K, K', the link graded piece, ...) are the partial sums over
nonnegative, zero, positive and negative weights; their cohomological
interpretation is only claimed when the weight system is 0-liminal, which
``valid_labels`` records.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

from .core import WeightSystem, liminal_defect
from .milnor import poincare_polynomial

__all__ = ["T1Decomposition", "weight_of_monomial", "t1_decomposition", "t_minus"]


@dataclass(frozen=True)
class T1Decomposition:
    by_weight: tuple[tuple[int, int], ...]
    valid_labels: bool

    def dim(self, a: int) -> int:
        return dict(self.by_weight).get(a, 0)

    def _sum(self, pred) -> int:
        return sum(dim for a, dim in self.by_weight if pred(a))

    @property
    def total(self) -> int:
        return self._sum(lambda a: True)

    @property
    def h1_log(self) -> int:
        return self._sum(lambda a: a >= 0)

    @property
    def gr_hn_link(self) -> int:
        return self.dim(0)

    @property
    def im_h1_log_minus_E(self) -> int:
        return self._sum(lambda a: a > 0)

    @property
    def dim_K(self) -> int:
        return self._sum(lambda a: a <= 0)

    @property
    def dim_K_prime(self) -> int:
        return self._sum(lambda a: a < 0)

    t_minus = dim_K_prime
    b_1_nm2 = dim_K_prime

    def to_json(self) -> dict[str, Any]:
        return {
            "weights": {str(a): dim for a, dim in self.by_weight},
            "K": self.dim_K,
            "Kprime": self.dim_K_prime,
            "Gr": self.gr_hn_link,
            "H1log": self.h1_log,
            "H1logminusE": self.im_h1_log_minus_E,
            "valid": self.valid_labels,
        }


def weight_of_monomial(ws: WeightSystem, alpha: Sequence[int]) -> int:
    """C*-weight of z^alpha as a class in T^1, in the input variable order."""
    if len(alpha) != ws.ambient_vars or any(e < 0 for e in alpha):
        raise ValueError(f"exponent vector must have {ws.ambient_vars} non-negative entries")
    return sum(e * a for e, a in zip(alpha, ws.original)) - ws.degree


def t1_decomposition(ws: WeightSystem) -> T1Decomposition:
    pp = poincare_polynomial(ws)
    d = ws.degree
    by_weight = tuple((m - d, c) for m, c in enumerate(pp.coeffs) if c)
    return T1Decomposition(by_weight, valid_labels=liminal_defect(ws) == 0)


def t_minus(ws: WeightSystem) -> int:
    return t1_decomposition(ws).dim_K_prime
