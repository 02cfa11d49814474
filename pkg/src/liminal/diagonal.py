"""Diagonal 0-liminal families: exponent tuples with sum(1/p_i) = 1."""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Any

from .core import WeightSystem, classify, liminal_defect
from .errors import DimensionTooLarge
from .milnor import milnor_number, s_vector
from .t1 import t1_decomposition

__all__ = [
    "DEFAULT_NODE_BUDGET",
    "DiagonalFamily",
    "enumerate_diagonal_liminal",
    "family_report",
    "node_budget",
]

DEFAULT_NODE_BUDGET = 10**7


def node_budget() -> int:
    raw = os.environ.get("LIMINAL_NODE_BUDGET")
    return int(raw) if raw else DEFAULT_NODE_BUDGET


@dataclass(frozen=True)
class DiagonalFamily:
    """Brieskorn-Pham type z_1^p_1 + ... + z_k^p_k with sorted exponents."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        if list(self.exponents) != sorted(self.exponents) or min(self.exponents) < 2:
            raise ValueError(f"exponents must be non-decreasing and >= 2: {self.exponents}")

    @property
    def weight_system(self) -> WeightSystem:
        L = lcm(*self.exponents)
        return WeightSystem([L // p for p in self.exponents], L)

    @property
    def dim(self) -> int:
        return len(self.exponents) - 1


def enumerate_diagonal_liminal(dim: int, budget: int | None = None) -> list[DiagonalFamily]:
    """All non-decreasing (p_1..p_{dim+1}) with sum 1/p_i = 1, sorted.

    The recursion keeps the remaining target exactly; with ``r`` slots left and
    target ``T`` the next exponent lies in [max(prev, ceil(1/T)), floor(r/T)].
    Raises DimensionTooLarge once more than ``budget`` nodes are visited.
    """
    if dim < 1:
        raise ValueError("dim must be >= 1")
    budget = node_budget() if budget is None else budget
    found: list[tuple[int, ...]] = []
    visited = 0

    def search(prefix: list[int], target: Fraction, slots: int) -> None:
        nonlocal visited
        visited += 1
        if visited > budget:
            raise DimensionTooLarge(f"dim {dim} exceeds node budget {budget}")
        lo = max(prefix[-1] if prefix else 2, -(-target.denominator // target.numerator))
        if slots == 1:
            if target.numerator == 1 and target.denominator >= lo:
                found.append((*prefix, target.denominator))
            return
        hi = (slots * target.denominator) // target.numerator
        for p in range(lo, hi + 1):
            rest = target - Fraction(1, p)
            if rest > 0:
                prefix.append(p)
                search(prefix, rest, slots - 1)
                prefix.pop()

    search([], Fraction(1), dim + 1)
    return [DiagonalFamily(t) for t in sorted(found)]


def family_report(fam: DiagonalFamily) -> dict[str, Any]:
    ws = fam.weight_system
    return {
        "exponents": list(fam.exponents),
        "weight_system": ws.to_dict(),
        "liminal_defect": liminal_defect(ws),
        "classification": classify(ws).to_dict(),
        "milnor_number": milnor_number(ws),
        "s_vector": list(s_vector(ws)),
        "t1": t1_decomposition(ws).to_json(),
    }
