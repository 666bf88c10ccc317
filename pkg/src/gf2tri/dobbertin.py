"""Dobbertin's permutation machinery for the coprime case gcd(l, k) = 1.

Evaluates the A_i/B_i recursions, R, the rational maps q^(eps), the reduced
polynomials H_i and the partial-trace map T_l, all numerically at points via
Frobenius/multiplication chains (nothing is expanded symbolically).  The
image-multiset helper feeds the empirical check of the q-vs-V multiset
relation.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

from .cnz import v_map
from .errors import DivisionByZero, NotCoprime, RangeError
from .field import FieldCtx


def l_inverse(ctx: FieldCtx, l: int) -> int:
    """l' = l^(-1) mod k; raises NotCoprime when gcd(l, k) != 1."""
    if math.gcd(l, ctx.k) != 1:
        raise NotCoprime(f"gcd({l}, {ctx.k}) != 1")
    return pow(l, -1, ctx.k)


@dataclass(frozen=True)
class CoprimeParams:
    """The exponent parameter l together with its inverse modulo k."""

    l: int
    l_prime: int

    @classmethod
    def for_field(cls, ctx: FieldCtx, l: int) -> "CoprimeParams":
        return cls(l, l_inverse(ctx, l))


def e_exp(ctx: FieldCtx, i: int, l: int) -> int:
    """e(i) = 1 + 2^l + ... + 2^((i-1)l) as a plain integer, for 1 <= i <= l'."""
    lp = l_inverse(ctx, l)
    if not 1 <= i <= lp:
        raise RangeError(f"i must be in [1, l'={lp}], got {i}")
    return sum(1 << (t * l) for t in range(i))


def AB_eval(ctx: FieldCtx, i: int, x: int, l: int) -> tuple[int, int]:
    """(A_i(x), B_i(x)) by the defining recursions; A_i(0) = B_i(0) = 0."""
    assert i >= 1
    if x == 0:
        return 0, 0
    a_prev, a_cur = x, ctx.mul(ctx.frob(x, l), x)  # A_1, A_2
    b_prev, b_cur = 0, ctx.mul(ctx.frob(x, l), ctx.inv(x))  # B_1, B_2
    if i == 1:
        return a_prev, b_prev
    for j in range(1, i - 1):
        # step factors x^(2^((j+1)l)) and x^(2^((j+1)l) - 2^(jl))
        f1 = ctx.frob(x, (j + 1) * l)
        f0 = ctx.mul(f1, ctx.inv(ctx.frob(x, j * l)))
        a_prev, a_cur = a_cur, ctx.mul(f1, a_cur) ^ ctx.mul(f0, a_prev)
        b_prev, b_cur = b_cur, ctx.mul(f1, b_cur) ^ ctx.mul(f0, b_prev)
    return a_cur, b_cur


def R_eval(ctx: FieldCtx, x: int, l: int) -> int:
    """R(x) = A_1(x) + ... + A_l'(x) + B_l'(x)."""
    lp = l_inverse(ctx, l)
    if x == 0:
        return 0
    total = 0
    a_prev, a_cur = x, ctx.mul(ctx.frob(x, l), x)
    b_prev, b_cur = 0, ctx.mul(ctx.frob(x, l), ctx.inv(x))
    for j in range(1, lp):
        total ^= a_prev
        f1 = ctx.frob(x, (j + 1) * l)
        f0 = ctx.mul(f1, ctx.inv(ctx.frob(x, j * l)))
        a_prev, a_cur = a_cur, ctx.mul(f1, a_cur) ^ ctx.mul(f0, a_prev)
        b_prev, b_cur = b_cur, ctx.mul(f1, b_cur) ^ ctx.mul(f0, b_prev)
    return total ^ a_prev ^ b_prev


def q_eval(ctx: FieldCtx, x: int, l: int, eps: int) -> int:
    """q^(eps)(x) = (x^(2^l) + ... + x^(2^(l'l)) + eps) / x^(2^l+1)."""
    lp = l_inverse(ctx, l)
    if x == 0:
        raise DivisionByZero("q is undefined at 0")
    num = eps & 1
    for i in range(1, lp + 1):
        num ^= ctx.frob(x, i * l)
    return ctx.mul(num, ctx.pow(x, -((1 << l) + 1)))


def q_perm(ctx: FieldCtx, x: int, l: int) -> int:
    """The permutation branch q = q^(eps) with eps = l'+1 mod 2."""
    return q_eval(ctx, x, l, (l_inverse(ctx, l) + 1) & 1)


def H_eval(ctx: FieldCtx, i: int, x: int, l: int) -> int:
    """H_i(x) = x * (1 + (1+x)^(2^l) + (1+x)^(2^l+2^2l) + ... + (1+x)^(e(i)-1))."""
    lp = l_inverse(ctx, l)
    if not 1 <= i <= lp:
        raise RangeError(f"i must be in [1, l'={lp}], got {i}")
    y = x ^ 1
    total = 1
    term = 1
    for j in range(1, i):
        term = ctx.mul(term, ctx.frob(y, j * l))
        total ^= term
    return ctx.mul(x, total)


def T_l_eval(ctx: FieldCtx, x: int, l: int) -> int:
    """T_l(x) = x + x^2 + ... + x^(2^(l-1))."""
    assert 1 <= l < ctx.k
    t = 0
    cur = x
    for _ in range(l):
        t ^= cur
        cur = ctx.frob(cur, 1)
    return t


@dataclass(frozen=True)
class TraceClassSets:
    """The trace classes T_i over GF(2^k)^** and H_i = {x != 0 : Tr(1/x) = i}."""

    t0: frozenset[int]
    t1: frozenset[int]
    h0: frozenset[int]
    h1: frozenset[int]

    @classmethod
    def for_field(cls, ctx: FieldCtx) -> "TraceClassSets":
        t0, t1, h0, h1 = set(), set(), set(), set()
        for x in range(1, ctx.order):
            (h0 if ctx.trace(ctx.inv(x)) == 0 else h1).add(x)
            if x != 1:
                (t0 if ctx.trace(x) == 0 else t1).add(x)
        return cls(frozenset(t0), frozenset(t1), frozenset(h0), frozenset(h1))


def multiset_image(ctx: FieldCtx, l: int, map_id: str, domain_id: str,
                   eps: int | None = None) -> Counter:
    """Multiset (with repetitions) of images of a trace class under q^(eps) or V.

    map_id is "q" (eps required) or "V"; domain_id is "T0" or "T1".
    """
    if math.gcd(l, ctx.k) != 1:
        raise NotCoprime(f"gcd({l}, {ctx.k}) != 1")
    want = 0 if domain_id == "T0" else 1
    out: Counter = Counter()
    for x in range(2, ctx.order):
        if ctx.trace(x) != want:
            continue
        if map_id == "q":
            assert eps is not None, "q needs an epsilon"
            out[q_eval(ctx, x, l, eps)] += 1
        elif map_id == "V":
            out[v_map(ctx, x, l)] += 1
        else:
            raise ValueError(f"unknown map {map_id!r}")
    return out
