"""The C_i / Z_n / Y_n recursion engine and the V-map.

Writing u_i = u^(2^(il)), the sequence is C_1 = C_2 = 1 and
C_(i+2) = C_(i+1) + u_i * C_i, with Z_n = C_(n+1) + u * C_(n-1)^(2^l) and
Y_n = Z_n^2 + N_d^k(u) * (delta + delta^(-1)).  Z_n and Y_n land in the
subfield GF(2^d), d = gcd(l, k), n = k/d.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import BadRootOfUnity, InSubfield, RangeError
from .field import FieldCtx
from .tower import ExtContext


def dn_params(ctx: FieldCtx, l: int) -> tuple[int, int]:
    """(d, n) = (gcd(l, k), k/d) for the exponent parameter l."""
    assert 1 <= l < ctx.k, f"l must satisfy 1 <= l < k, got {l}"
    d = math.gcd(l, ctx.k)
    return d, ctx.k // d


@dataclass(frozen=True)
class CnzValues:
    """The full array C_1(a)..C_(n+1)(a) plus Z_n(a) for one point a."""

    a: int
    c: tuple[int, ...]
    z: int

    def C(self, i: int) -> int:
        if not 1 <= i <= len(self.c):
            raise RangeError(f"C_i defined for 1 <= i <= {len(self.c)}, got {i}")
        return self.c[i - 1]


def cnz_values(ctx: FieldCtx, a: int, l: int) -> CnzValues:
    """Evaluate the whole recursion at a in O(n) field operations."""
    _, n = dn_params(ctx, l)
    cs = [1, 1]
    for i in range(1, n):
        ui = ctx.frob(a, (i * l) % ctx.k)
        cs.append(cs[i] ^ ctx.mul(ui, cs[i - 1]))
    z = cs[n] ^ ctx.mul(a, ctx.frob(cs[n - 2], l))
    return CnzValues(a=a, c=tuple(cs), z=z)


def c_eval(ctx: FieldCtx, i: int, a: int, l: int) -> int:
    """C_i(a) for 1 <= i <= n+1."""
    return cnz_values(ctx, a, l).C(i)


def z_eval(ctx: FieldCtx, a: int, l: int) -> int:
    """Z_n(a); always lies in GF(2^d) and Z_n(0) = 1."""
    return cnz_values(ctx, a, l).z


@dataclass(frozen=True)
class YnValue:
    """Y_n(a) together with the root of unity delta that produced it."""

    y: int
    delta: int


def y_eval(tw: ExtContext, a: int, delta: int, l: int) -> int:
    """Y_n(a) = Z_n(a)^2 + N_d^k(a) * (delta + delta^(-1)), inside GF(2^2k).

    delta must be a (2^d+1)-th root of unity in the extension; the result is
    the image of an element of GF(2^d) under the embedding.
    """
    base, ext = tw.base, tw.ext
    d, _ = dn_params(base, l)
    if delta == 0 or ext.pow(delta, (1 << d) + 1) != 1:
        raise BadRootOfUnity(f"delta={delta:#x} is not a (2^{d}+1)-th root of unity")
    ze = tw.embed(z_eval(base, a, l))
    ne = tw.embed(base.norm(a, d))
    return ext.mul(ze, ze) ^ ext.mul(ne, delta ^ ext.inv(delta))


def v_map(ctx: FieldCtx, v: int, l: int) -> int:
    """V = v^(2^2l+1) / (v + v^(2^l))^(2^l+1); defined for v outside GF(2^d).

    Z_n(V) = 0 for every such v, and C_n(V) = 0 exactly when Tr_d^k(v) = 0.
    """
    d, _ = dn_params(ctx, l)
    v1 = ctx.frob(v, l)
    if ctx.frob(v, d) == v:
        raise InSubfield(f"v={v:#x} lies in GF(2^{d})")
    num = ctx.mul(ctx.frob(v, 2 * l), v)
    s = v ^ v1
    den = ctx.mul(ctx.frob(s, l), s)
    return ctx.mul(num, ctx.inv(den))


def count_zeros_cn(ctx: FieldCtx, l: int) -> int:
    """Observed number of x in GF(2^k) with C_n(x) = 0."""
    _, n = dn_params(ctx, l)
    return sum(1 for x in ctx.elements() if cnz_values(ctx, x, l).C(n) == 0)


def count_zeros_zn(ctx: FieldCtx, l: int) -> int:
    """Observed number of x in GF(2^k) with Z_n(x) = 0."""
    return sum(1 for x in ctx.elements() if cnz_values(ctx, x, l).z == 0)


# ------------------------------------------------------------------
# Tridiagonal determinants
# ------------------------------------------------------------------

def delta_row(ctx: FieldCtx, u: int, l: int, j: int, upto: int) -> list[int]:
    """[Delta_u(j, i) for i = j..upto] by the minor-expansion recursion.

    Delta_u(j, i) is the determinant of the (i-j+2)-sized symmetric
    tridiagonal matrix with unit diagonal and off-diagonal entries
    u_j, ..., u_i (indices of u_i reduced modulo n).
    """
    _, n = dn_params(ctx, l)
    prev2, prev1 = 1, 1  # Delta(j, j-2), Delta(j, j-1)
    out = []
    for i in range(j, upto + 1):
        ui = ctx.frob(u, (i % n) * l)
        ui2 = ctx.mul(ui, ui)
        cur = prev1 ^ ctx.mul(ui2, prev2)
        out.append(cur)
        prev2, prev1 = prev1, cur
    return out


def delta_det(ctx: FieldCtx, u: int, l: int, j: int, i: int) -> int:
    """Delta_u(j, i); equals 1 when i - j is -1 or -2."""
    if i - j in (-1, -2):
        return 1
    assert i >= j
    return delta_row(ctx, u, l, j, i)[-1]


def tridiag_det_dense(ctx: FieldCtx, offdiag: list[int]) -> int:
    """Determinant of the unit-diagonal symmetric tridiagonal matrix, by
    Gaussian elimination on the dense matrix (independent of the recursion).
    """
    s = len(offdiag) + 1
    rows = [[0] * s for _ in range(s)]
    for t in range(s):
        rows[t][t] = 1
    for t, e in enumerate(offdiag):
        rows[t][t + 1] = e
        rows[t + 1][t] = e
    det = 1
    for col in range(s):
        piv = next((r for r in range(col, s) if rows[r][col]), None)
        if piv is None:
            return 0
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
        pval = rows[col][col]
        det = ctx.mul(det, pval)
        pinv = ctx.inv(pval)
        for r in range(col + 1, s):
            if rows[r][col]:
                f = ctx.mul(rows[r][col], pinv)
                for cc in range(col, s):
                    rows[r][cc] ^= ctx.mul(f, rows[col][cc])
    return det


def delta_det_dense(ctx: FieldCtx, u: int, l: int, j: int, i: int) -> int:
    """Delta_u(j, i) computed from the actual matrix, for cross-checking."""
    if i - j in (-1, -2):
        return 1
    _, n = dn_params(ctx, l)
    offdiag = [ctx.frob(u, ((j + t) % n) * l) for t in range(i - j + 1)]
    return tridiag_det_dense(ctx, offdiag)
