"""Pure-Python exhaustive-scan kernels over table-backed fields.

Same signatures as the compiled backend in _scanc.pyx: exp/log are the
discrete-log tables, m = 2^k - 1, and Frobenius exponents are already
reduced modulo k by the caller.
"""

from __future__ import annotations


def roots_p(exp, log, m, a, el):
    """Roots of x^(2^el+1) + x + a, by scanning every field element."""
    expo = (1 << el) + 1
    out = [0] if a == 0 else []
    for x in range(1, m + 1):
        if exp[(log[x] * expo) % m] ^ x ^ a == 0:
            out.append(x)
    return out


def count_p(exp, log, m, a, el):
    """Number of roots of x^(2^el+1) + x + a."""
    expo = (1 << el) + 1
    cnt = 1 if a == 0 else 0
    for x in range(1, m + 1):
        if exp[(log[x] * expo) % m] ^ x ^ a == 0:
            cnt += 1
    return cnt


def census_p(exp, log, m, el, a_lo, a_hi, hist):
    """hist[root count] += 1 for every a in [a_lo, a_hi)."""
    expo = (1 << el) + 1
    for a in range(a_lo, a_hi):
        cnt = 1 if a == 0 else 0
        for x in range(1, m + 1):
            if exp[(log[x] * expo) % m] ^ x ^ a == 0:
                cnt += 1
        hist[cnt] += 1


def roots_affine3(exp, log, m, c2, e2, c1, e1, c0, const_term):
    """Roots of c2*x^(2^e2) + c1*x^(2^e1) + c0*x + const_term by full scan."""
    out = [0] if const_term == 0 else []
    l2 = log[c2] if c2 else 0
    l1 = log[c1] if c1 else 0
    l0 = log[c0] if c0 else 0
    s2 = 1 << e2
    s1 = 1 << e1
    for x in range(1, m + 1):
        t = log[x]
        v = const_term
        if c2:
            v ^= exp[(l2 + t * s2) % m]
        if c1:
            v ^= exp[(l1 + t * s1) % m]
        if c0:
            v ^= exp[(l0 + t) % m]
        if v == 0:
            out.append(x)
    return out


def count_affine3(exp, log, m, c2, e2, c1, e1, c0):
    """Kernel size of c2*x^(2^e2) + c1*x^(2^e1) + c0*x (x = 0 included)."""
    cnt = 1
    l2 = log[c2] if c2 else 0
    l1 = log[c1] if c1 else 0
    l0 = log[c0] if c0 else 0
    s2 = 1 << e2
    s1 = 1 << e1
    for x in range(1, m + 1):
        t = log[x]
        v = 0
        if c2:
            v ^= exp[(l2 + t * s2) % m]
        if c1:
            v ^= exp[(l1 + t * s1) % m]
        if c0:
            v ^= exp[(l0 + t) % m]
        if v == 0:
            cnt += 1
    return cnt
