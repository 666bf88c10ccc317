"""Classify and solve P_a(x) = x^(2^l+1) + x + a over GF(2^k).

The decision tree is: C_n(a) = 0 gives 2^d+1 zeros; else Z_n(a) = 0 gives
one zero; else the bit Tr_d(N_d^k(a)/Z_n(a)^2) splits two zeros (bit 0)
from none (bit 1).  Closed forms cover the one-zero case and, for odd d,
the two-zero case; everything else goes through GF(2) linear algebra.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .cnz import CnzValues, cnz_values, dn_params
from .distributions import DistributionReport, p_predicted_counts
from .dobbertin import R_eval
from .errors import NotCoprime, ZeroInput
from .field import FieldCtx, RootSet, linearized_solutions, solve_artin_schreier
from .oracle import roots_p as oracle_roots_p


class PaClass(str, Enum):
    ZERO = "zero"
    ONE = "one"
    TWO = "two"
    MANY = "manyd"  # 2^d + 1 zeros


ARITY = {PaClass.ZERO: 0, PaClass.ONE: 1, PaClass.TWO: 2}


@dataclass(frozen=True)
class PaClassification:
    """Zero-count class of P_a plus the witnesses that produced it."""

    cls: PaClass
    z_val: int
    c_val: int
    trace_bit: int | None  # Tr_d(N_d^k(a)/Z_n^2(a)); None when Z_n(a) = 0
    gcd1_trace: int | None  # Tr_k(R(a^(-1)) + 1); None unless gcd(l, k) = 1, a != 0

    def arity(self, d: int) -> int:
        return (1 << d) + 1 if self.cls is PaClass.MANY else ARITY[self.cls]


def classify(ctx: FieldCtx, a: int, l: int) -> PaClassification:
    """Classify by the Z_n/C_n/trace criteria alone (no root search).

    a = 0 is allowed and lands in class TWO, matching its roots {0, 1}.
    """
    d, n = dn_params(ctx, l)
    vals = cnz_values(ctx, a, l)
    cn, z = vals.C(n), vals.z
    trace_bit = None
    if cn == 0:
        cls = PaClass.MANY
    elif z == 0:
        cls = PaClass.ONE
    else:
        zi = ctx.inv(z)
        w = ctx.mul(ctx.norm(a, d), ctx.mul(zi, zi))
        trace_bit = ctx.abs_trace(w, d)
        cls = PaClass.TWO if trace_bit == 0 else PaClass.ZERO
    gcd1 = None
    if a != 0 and math.gcd(l, ctx.k) == 1:
        gcd1 = gcd1_criterion(ctx, a, l)
    return PaClassification(cls=cls, z_val=z, c_val=cn, trace_bit=trace_bit, gcd1_trace=gcd1)


def gcd1_criterion(ctx: FieldCtx, a: int, l: int) -> int:
    """The coprime-case bit Tr_k(R(a^(-1)) + 1); 1 exactly in class ONE."""
    if math.gcd(l, ctx.k) != 1:
        raise NotCoprime(f"gcd({l}, {ctx.k}) != 1")
    if a == 0:
        raise ZeroInput("criterion needs a != 0")
    return ctx.trace(R_eval(ctx, ctx.inv(a), l) ^ 1)


def _solve_two(ctx: FieldCtx, vals: CnzValues, a: int, l: int, d: int, n: int) -> RootSet:
    if d % 2 == 1:
        # closed form: roots (W + mu) * Z_n/C_n for mu in {0, 1}
        z, cn = vals.z, vals.C(n)
        zi = ctx.inv(z)
        w = ctx.mul(vals.C(n + 1), zi)
        nz = ctx.mul(ctx.norm(a, d), ctx.mul(zi, zi))
        for i in range((d - 1) // 2 + 1):
            w ^= ctx.frob(nz, (2 * i) % ctx.k)
        scale = ctx.mul(z, ctx.inv(cn))
        return RootSet.make(
            [ctx.mul(w, scale), ctx.mul(w ^ 1, scale)], "closed-form"
        )
    # even d: reduce the companion equation a^(2^l)u^(2^l+1) + u + a = 0,
    # a = sqrt(input), to the quadratic aC^2 u^2 + Z^2 u + a(C^2)^(2^l) = 0
    # and solve it by linear algebra; roots of P are a*u.
    sa = ctx.sqrt(a)
    sv = cnz_values(ctx, sa, l)
    z2 = ctx.sqr(sv.z)
    c2 = ctx.sqr(sv.C(n))
    alpha = ctx.mul(z2, ctx.inv(ctx.mul(sa, c2)))
    beta = ctx.pow(sv.C(n), (1 << (l + 1)) - 2)
    ts = solve_artin_schreier(ctx, ctx.mul(beta, ctx.sqr(ctx.inv(alpha))), 1)
    roots = [ctx.mul(sa, ctx.mul(alpha, t)) for t in ts]
    return RootSet.make(roots, "linear-algebra")


def _solve_many(ctx: FieldCtx, a: int, l: int) -> RootSet:
    # one root from the kernel of the companion linearized map at sqrt(a),
    # the rest from the reciprocal affine equation at that root
    sa = ctx.sqrt(a)
    kernel = linearized_solutions(
        ctx, [(ctx.frob(sa, l), 2 * l), (1, l), (sa, 0)], 0
    )
    x0 = ctx.mul(sa, ctx.pow(kernel[1], (1 << l) - 1))
    ys = linearized_solutions(ctx, [(ctx.frob(x0, l) ^ 1, l), (x0, 0)], 1)
    return RootSet.make([x0] + [x0 ^ ctx.inv(y) for y in ys], "linear-algebra")


def solve(ctx: FieldCtx, a: int, l: int) -> RootSet:
    """The exact root set of P_a, chosen strategy depending on the class."""
    d, n = dn_params(ctx, l)
    if a == 0:
        return RootSet.make([0, 1], "closed-form")
    vals = cnz_values(ctx, a, l)
    cn, z = vals.C(n), vals.z
    if cn == 0:
        out = _solve_many(ctx, a, l)
    elif z == 0:
        root = ctx.frob(ctx.mul(a, ctx.pow(cn, (1 << l) - 1)), ctx.k - 1)
        out = RootSet.make([root], "closed-form")
    else:
        zi = ctx.inv(z)
        w = ctx.mul(ctx.norm(a, d), ctx.mul(zi, zi))
        if ctx.abs_trace(w, d) != 0:
            return RootSet.make([], "closed-form")
        out = _solve_two(ctx, vals, a, l, d, n)
    for r in out:
        assert ctx.mul(ctx.frob(r, l), r) ^ r ^ a == 0, "solver produced a non-root"
    return out


def la_correspondence_check(ctx: FieldCtx, a: int, l: int) -> bool:
    """Exhaustively test: L_a(x) = 0 for x != 0 iff P_(a^2)(a * x^(2^l-1)) = 0."""
    if a == 0:
        raise ZeroInput("correspondence needs a != 0")
    a1 = ctx.frob(a, l)
    a2 = ctx.sqr(a)
    for x in range(1, ctx.order):
        lval = ctx.mul(a1, ctx.frob(x, 2 * l)) ^ ctx.frob(x, l) ^ ctx.mul(a, x)
        y = ctx.mul(a, ctx.pow(x, (1 << l) - 1))
        pval = ctx.mul(ctx.frob(y, l), y) ^ y ^ a2
        if (lval == 0) != (pval == 0):
            return False
    return True


def distribution(ctx: FieldCtx, l: int) -> DistributionReport:
    """Observed class counts over a != 0 via the criteria, next to the closed forms."""
    d, _ = dn_params(ctx, l)
    predicted = p_predicted_counts(ctx.k, l)
    counts = {key: 0 for key in predicted}
    for a in range(1, ctx.order):
        counts[classify(ctx, a, l).arity(d)] += 1
    return DistributionReport(counts=counts, predicted=predicted, match=counts == predicted)


def solve_checked(ctx: FieldCtx, a: int, l: int) -> RootSet:
    """solve() with the exhaustive oracle as a cross-check (small fields only)."""
    got = solve(ctx, a, l)
    want = oracle_roots_p(ctx, a, l).roots
    assert got.roots == want.roots, f"solver disagrees with oracle at a={a:#x}"
    return got
