"""Classify and solve F_a(x) = a^(2^l)x^(2^2l) + x^(2^l) + ax + c, c in GF(2^d).

F_a always has at least one zero; the zero set is a coset of the kernel of
the homogeneous part L_a, so its size is 1, 2^d or 2^2d, decided by the
same Z_n/C_n witnesses as the trinomial family.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cnz import cnz_values, dn_params
from .distributions import DistributionReport, f_predicted_counts
from .errors import BadConstant, NoRoots
from .field import FieldCtx, RootSet, linearized_solutions


@dataclass(frozen=True)
class FaSolution:
    """Complete zero set of F_a plus the common subfield trace of the zeros."""

    arity: int
    roots: RootSet
    trace_class: int


def classify_f(ctx: FieldCtx, a: int, l: int) -> int:
    """Zero count of F_a: 1 if Z_n(a) != 0; 2^d if only C_n(a) != 0; else 2^2d."""
    d, n = dn_params(ctx, l)
    vals = cnz_values(ctx, a, l)
    if vals.z != 0:
        return 1
    if vals.C(n) != 0:
        return 1 << d
    return 1 << (2 * d)


def _l_terms(ctx: FieldCtx, a: int, l: int):
    return [(ctx.frob(a, l), 2 * l), (1, l), (a, 0)]


def _v_mu_roots(ctx: FieldCtx, a: int, c: int, l: int, d: int, n: int) -> list[int]:
    # n odd: v_mu = c * sum C_(n-1)^(2^((2i+1)l)) / C_n^(2^((2i+1)l)+2^(2il)-1) + mu*C_n
    vals = cnz_values(ctx, a, l)
    cn, cn1 = vals.C(n), vals.C(n - 1)
    base = 0
    for i in range((n - 1) // 2 + 1):
        j1 = ((2 * i + 1) * l) % ctx.k
        j0 = (2 * i * l) % ctx.k
        expo = (1 << j1) + (1 << j0) - 1
        base ^= ctx.mul(ctx.frob(cn1, j1), ctx.pow(cn, -expo))
    base = ctx.mul(c, base)
    return [base ^ ctx.mul(mu, cn) for mu in ctx.subfield_elements(d)]


def solve_f(ctx: FieldCtx, a: int, c: int, l: int) -> FaSolution:
    """The complete zero set of F_a for a constant c in GF(2^d).

    Closed forms: the unique zero c*C_n/Z_n, and for n odd the v_mu family;
    the remaining cases solve the affine system L_a(x) = c over GF(2).
    """
    d, n = dn_params(ctx, l)
    if not ctx.in_subfield(c, d):
        raise BadConstant(f"c={c:#x} is not in GF(2^{d})")
    vals = cnz_values(ctx, a, l)
    arity = classify_f(ctx, a, l)
    if arity == 1:
        root = ctx.mul(c, ctx.mul(vals.C(n), ctx.inv(vals.z)))
        roots = RootSet.make([root], "closed-form")
    elif arity == (1 << d) and n % 2 == 1:
        roots = RootSet.make(_v_mu_roots(ctx, a, c, l, d, n), "closed-form")
    else:
        roots = RootSet.make(
            linearized_solutions(ctx, _l_terms(ctx, a, l), c), "linear-algebra"
        )
    assert len(roots) == arity, "zero set size disagrees with the criteria"
    a1 = ctx.frob(a, l)
    for v in roots:
        val = ctx.mul(a1, ctx.frob(v, 2 * l)) ^ ctx.frob(v, l) ^ ctx.mul(a, v) ^ c
        assert val == 0, "solver produced a non-root"
    return FaSolution(arity=arity, roots=roots, trace_class=ctx.trace(roots.roots[0], d))


def root_trace_class(ctx: FieldCtx, a: int, c: int, l: int) -> int:
    """Common Tr_d^k of all zeros of F_a (checked to actually be common)."""
    d, _ = dn_params(ctx, l)
    sol = solve_f(ctx, a, c, l)
    traces = {ctx.trace(v, d) for v in sol.roots}
    assert len(traces) == 1, "zeros do not share one subfield trace"
    return traces.pop()


def character_sum(ctx: FieldCtx, a: int, c: int, l: int) -> int:
    """Sum of (-1)^Tr_k(a c^(-2) v^(2^l+1)) over the exact zero set of F_a."""
    d, _ = dn_params(ctx, l)
    if c == 0 or not ctx.in_subfield(c, d):
        raise BadConstant(f"c={c:#x} must be a nonzero element of GF(2^{d})")
    sol = solve_f(ctx, a, c, l)
    if sol.arity < (1 << d):
        raise NoRoots(f"character sum needs at least 2^{d} zeros, got {sol.arity}")
    ci2 = ctx.sqr(ctx.inv(c))
    total = 0
    for v in sol.roots:
        bit = ctx.trace(ctx.mul(ctx.mul(a, ci2), ctx.mul(ctx.frob(v, l), v)))
        total += -1 if bit else 1
    return total


def f_census(ctx: FieldCtx, l: int) -> DistributionReport:
    """Observed |N_i| counts over a != 0 via the criteria, next to the closed forms."""
    predicted = f_predicted_counts(ctx.k, l)
    counts = {key: 0 for key in predicted}
    for a in range(1, ctx.order):
        counts[classify_f(ctx, a, l)] += 1
    return DistributionReport(counts=counts, predicted=predicted, match=counts == predicted)
