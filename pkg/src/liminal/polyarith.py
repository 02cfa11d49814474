"""Exact integer polynomial helpers (coefficient lists, lowest degree first)."""

from __future__ import annotations

from collections.abc import Sequence


def poly_mul(p: Sequence[int], q: Sequence[int]) -> list[int]:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def binomial_minus_one(k: int) -> list[int]:
    """Coefficients of t**k - 1."""
    out = [0] * (k + 1)
    out[0] = -1
    out[k] += 1
    return out


def poly_divmod(num: Sequence[int], den: Sequence[int]) -> tuple[list[int], list[int]]:
    """Long division over Z.

    The leading coefficient of ``den`` must be +-1 so the quotient stays
    integral. Returns ``(quotient, remainder)`` with trailing zeros stripped.
    """
    den = _strip(list(den))
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    lead = den[-1]
    if lead not in (1, -1):
        raise ValueError("divisor must be monic up to sign")
    rem = _strip(list(num))
    if len(rem) < len(den):
        return [], rem
    quot = [0] * (len(rem) - len(den) + 1)
    for shift in range(len(quot) - 1, -1, -1):
        c = rem[shift + len(den) - 1] * lead
        if c:
            quot[shift] = c
            for j, b in enumerate(den):
                rem[shift + j] -= c * b
    return _strip(quot), _strip(rem)


def _strip(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def mul_t_power_minus_one(p: Sequence[int], k: int) -> list[int]:
    """p * (t**k - 1) in O(len(p))."""
    out = [0] * (len(p) + k)
    for i, c in enumerate(p):
        out[i + k] += c
        out[i] -= c
    return out


def divmod_t_power_minus_one(p: Sequence[int], k: int) -> tuple[list[int], list[int]]:
    """Division by t**k - 1 in O(len(p)); same contract as :func:`poly_divmod`."""
    p = _strip(list(p))
    if len(p) <= k:
        return [], p
    # p[j] = q[j-k] - q[j]; solve from the top down
    q = [0] * (len(p) - k)
    for j in range(len(p) - 1, k - 1, -1):
        q[j - k] = p[j] + (q[j] if j < len(q) else 0)
    rem = [p[j] + (q[j] if j < len(q) else 0) for j in range(k)]
    return _strip(q), _strip(rem)


def quasi_homogeneous_quotient(weights: Sequence[int], degree: int) -> list[int] | None:
    """Coefficients of prod_i (t^(d-a_i) - 1) / (t^(a_i) - 1), or None.

    Numerators are multiplied out first, then denominator factors are divided
    one at a time; the first non-zero remainder or any negative coefficient in
    the final quotient gives None.
    """
    num = [1]
    for a in weights:
        num = mul_t_power_minus_one(num, degree - a)
    for a in weights:
        num, rem = divmod_t_power_minus_one(num, a)
        if rem:
            return None
    if any(c < 0 for c in num):
        return None
    return num
