"""Closed-form zero-count distributions for the two polynomial families.

These are pure combinatorial formulas in (k, d, n); both the criteria-based
sweeps and the brute-force censuses compare their observed counts against
them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class DistributionReport:
    """Observed per-class counts next to the closed-form predictions."""

    counts: dict[int, int]
    predicted: dict[int, int]
    match: bool


def _exact(num: int, den: int) -> int:
    q, r = divmod(num, den)
    assert r == 0, f"closed form is not integral: {num}/{den}"
    return q


def p_predicted_counts(k: int, l: int) -> dict[int, int]:
    """Number of a in GF(2^k)^* giving each zero count of x^(2^l+1)+x+a.

    Keys are the possible counts 0, 1, 2 and 2^d+1 with d = gcd(l, k).
    """
    d = math.gcd(l, k)
    n = k // d
    if n % 2 == 1:
        m0 = _exact(((1 << k) + 1) * (1 << (d - 1)), (1 << d) + 1)
        m1 = (1 << (k - d)) - 1
        mt = _exact((1 << (k - d)) - 1, (1 << (2 * d)) - 1)
    else:
        m0 = _exact(((1 << k) - 1) * (1 << (d - 1)), (1 << d) + 1)
        m1 = 1 << (k - d)
        mt = _exact((1 << (k - d)) - (1 << d), (1 << (2 * d)) - 1)
    m2 = _exact(((1 << k) - 1) * ((1 << (d - 1)) - 1), (1 << d) - 1)
    out = {0: m0, 1: m1, 2: m2, (1 << d) + 1: mt}
    assert sum(out.values()) == (1 << k) - 1
    return out


def f_predicted_counts(k: int, l: int) -> dict[int, int]:
    """Number of a in GF(2^k)^* giving each zero count of the affine family.

    Keys are the possible counts 1, 2^d and 2^2d with d = gcd(l, k).
    """
    d = math.gcd(l, k)
    n = k // d
    den = (1 << (2 * d)) - 1
    if n % 2 == 1:
        n1 = _exact((1 << (k + 2 * d)) - (1 << (k + d)) - (1 << k) + 1, den)
        nd = (1 << (k - d)) - 1
        ndd = _exact((1 << (k - d)) - 1, den)
    else:
        n1 = _exact(
            (1 << (k + 2 * d)) - (1 << (k + d)) - (1 << k) - (1 << (2 * d)) + (1 << d) + 1,
            den,
        )
        nd = 1 << (k - d)
        ndd = _exact((1 << (k - d)) - (1 << d), den)
    out = {1: n1, 1 << d: nd, 1 << (2 * d): ndd}
    assert sum(out.values()) == (1 << k) - 1
    return out


def cn_zero_count(k: int, l: int) -> int:
    """Closed-form number of distinct zeros of C_n(x) in GF(2^k)."""
    d = math.gcd(l, k)
    n = k // d
    if n % 2 == 1:
        return _exact((1 << ((n - 1) * d)) - 1, (1 << (2 * d)) - 1)
    return _exact((1 << ((n - 1) * d)) - (1 << d), (1 << (2 * d)) - 1)


def zn_zero_count(k: int, l: int) -> int:
    """Closed-form number of distinct zeros of Z_n(x) in GF(2^k)."""
    d = math.gcd(l, k)
    n = k // d
    if n % 2 == 1:
        return _exact((1 << ((n + 1) * d)) - (1 << (2 * d)), (1 << (2 * d)) - 1)
    return _exact((1 << ((n + 1) * d)) - (1 << d), (1 << (2 * d)) - 1)
