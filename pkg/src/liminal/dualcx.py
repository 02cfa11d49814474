"""Dual complexes of SNC divisors.

Computes the Mayer-Vietoris E_1 page from per-stratum h^q(E_I, O), the
rational cohomology of the dual complex, and necessary conditions for the
exceptional divisor of a 0-liminal singularity. Higher differentials need
restriction maps that are not part of the input, so only dimensions on E_1
and the bottom row's E_2 are produced.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any

from .errors import InvalidComplex

__all__ = [
    "DualComplexData",
    "e1_page",
    "coboundary_matrix",
    "exact_rank",
    "dual_complex_cohomology",
    "euler_characteristic",
    "check_zero_liminal_constraints",
    "Violation",
]

Face = tuple[int, ...]


@dataclass(frozen=True)
class DualComplexData:
    """Components ``E_i``, the faces ``I`` with ``E_I`` nonempty, and
    ``h^q(E_I; O)``.

    ``strata_h`` lists only explicitly given values; lookups default to 1 for
    q = 0 and 0 otherwise.
    """

    n: int
    components: tuple[str, ...]
    faces: frozenset[Face]
    strata_h: Mapping[tuple[Face, int], int] = field(default_factory=dict)

    def __post_init__(self):
        k = len(self.components)
        if self.n < 1:
            raise InvalidComplex(f"n must be >= 1, got {self.n}")
        faces = frozenset(tuple(sorted(f)) for f in self.faces)
        for f in faces:
            if not f or len(set(f)) != len(f) or any(not 0 <= i < k for i in f):
                raise InvalidComplex(f"bad face {f!r} for {k} components")
            if len(f) > self.n:
                raise InvalidComplex(f"face {f} has dim E_I < 0 (n = {self.n})")
            for r in range(1, len(f)):
                for sub in combinations(f, r):
                    if sub not in faces:
                        raise InvalidComplex(f"face {f} present but {sub} missing")
        for i in range(k):
            if (i,) not in faces:
                raise InvalidComplex(f"component {i} is not a face")
        h = {}
        for (f, q), v in self.strata_h.items():
            f = tuple(sorted(f))
            if f not in faces:
                raise InvalidComplex(f"h given for non-face {f}")
            if q < 0 or v < 0:
                raise InvalidComplex(f"negative entry at face {f}, q = {q}")
            if q > self.face_dim(f) and v:
                raise InvalidComplex(f"h^{q} nonzero above dim E_I for face {f}")
            if q == 0 and v < 1:
                raise InvalidComplex(f"h^0 of stratum {f} must be >= 1")
            h[(f, q)] = v
        object.__setattr__(self, "faces", faces)
        object.__setattr__(self, "strata_h", h)

    def face_dim(self, face: Sequence[int]) -> int:
        return self.n - len(face)

    def h(self, face: Sequence[int], q: int) -> int:
        return self.strata_h.get((tuple(sorted(face)), q), 1 if q == 0 else 0)

    def faces_of_size(self, size: int) -> list[Face]:
        return sorted(f for f in self.faces if len(f) == size)

    @property
    def max_face_size(self) -> int:
        return max(len(f) for f in self.faces)

    @classmethod
    def from_dict(cls, obj: Mapping[str, Any]) -> DualComplexData:
        try:
            n = obj["n"]
            comps = tuple(str(c) for c in obj["components"])
            faces = [tuple(f) for f in obj["faces"]]
            h = {(tuple(e["face"]), e["q"]): e["dim"] for e in obj.get("h", [])}
        except (KeyError, TypeError) as exc:
            raise InvalidComplex(f"malformed dual-complex input: {exc}") from exc
        faces_all = set(faces) | {(i,) for i in range(len(comps))}
        return cls(n, comps, frozenset(faces_all), h)

    @classmethod
    def from_json(cls, text: str) -> DualComplexData:
        return cls.from_dict(json.loads(text))

    @classmethod
    def from_faces(cls, n: int, faces: Iterable[Iterable[int]], h=None) -> DualComplexData:
        """Convenience constructor; closes ``faces`` downward."""
        closed: set[Face] = set()
        for f in faces:
            f = tuple(sorted(f))
            for r in range(1, len(f) + 1):
                closed.update(combinations(f, r))
        k = max(max(f) for f in closed) + 1
        return cls(n, tuple(f"E{i}" for i in range(k)), frozenset(closed), h or {})


def e1_page(D: DualComplexData) -> list[list[int]]:
    """``table[p][q] = sum over #I = p+1 of h^q(E_I)`` for 0 <= p, q <= n-1."""
    n = D.n
    table = [[0] * n for _ in range(n)]
    for f in D.faces:
        p = len(f) - 1
        for q in range(D.face_dim(f) + 1):
            table[p][q] += D.h(f, q)
    return table


def coboundary_matrix(D: DualComplexData, p: int) -> list[list[int]]:
    """Matrix of C^p -> C^{p+1}; rows index (p+1)-simplices, columns p-simplices.

    Simplices are sorted vertex tuples; deleting the vertex in position k of
    a (p+1)-simplex carries sign (-1)^k.
    """
    rows = D.faces_of_size(p + 2)
    cols = D.faces_of_size(p + 1)
    index = {f: j for j, f in enumerate(cols)}
    mat = [[0] * len(cols) for _ in rows]
    for i, f in enumerate(rows):
        for k in range(len(f)):
            mat[i][index[f[:k] + f[k + 1:]]] = (-1) ** k
    return mat


def exact_rank(mat: Sequence[Sequence[int]]) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination."""
    a = [list(r) for r in mat]
    if not a or not a[0]:
        return 0
    nrows, ncols = len(a), len(a[0])
    rank, prev = 0, 1
    for col in range(ncols):
        piv = next((r for r in range(rank, nrows) if a[r][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        pv = a[rank][col]
        for r in range(rank + 1, nrows):
            arc = a[r][col]
            for c in range(col, ncols):
                a[r][c] = (pv * a[r][c] - arc * a[rank][c]) // prev
        prev = pv
        rank += 1
        if rank == nrows:
            break
    return rank


def dual_complex_cohomology(D: DualComplexData) -> list[int]:
    """Betti numbers h^i(|Gamma|; Q), i = 0..max face dimension."""
    top = D.max_face_size - 1
    counts = [len(D.faces_of_size(p + 1)) for p in range(top + 1)]
    ranks = [exact_rank(coboundary_matrix(D, p)) if p < top else 0 for p in range(top + 1)]
    return [counts[p] - ranks[p] - (ranks[p - 1] if p else 0) for p in range(top + 1)]


def euler_characteristic(D: DualComplexData) -> int:
    return sum((-1) ** (len(f) - 1) for f in D.faces)


@dataclass(frozen=True)
class Violation:
    clause: str
    message: str

    def to_dict(self) -> dict[str, str]:
        return {"clause": self.clause, "message": self.message}


def check_zero_liminal_constraints(D: DualComplexData, m: int | None = None) -> list[Violation]:
    """Necessary conditions on the exceptional divisor of a 0-liminal point.

    (a) sum_i h^{n-1}(E_i) is 0 or 1; (b) if it is 1, a single component
    carries it; (c) if h^i(E; O) = 0 is asserted for 0 < i < m, then
    h^i(|Gamma|) = 0 in the same range.
    """
    out: list[Violation] = []
    top = [D.h((i,), D.n - 1) for i in range(len(D.components))]
    total = sum(top)
    if total not in (0, 1):
        out.append(Violation("a", f"sum of h^{D.n - 1}(E_i) is {total}, expected 0 or 1"))
    elif total == 1 and sum(1 for t in top if t) != 1:
        out.append(Violation("b", "h^{n-1} = 1 is not carried by a single component"))
    if m is not None:
        betti = dual_complex_cohomology(D)
        bad = [i for i in range(1, m) if i < len(betti) and betti[i]]
        if bad:
            out.append(
                Violation("c", f"h^i(|Gamma|) nonzero for i in {bad}, but vanishing asserted for 0 < i < {m}")
            )
    return out
