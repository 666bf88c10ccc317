"""Brute-force ground truth by exhaustive scanning.

Every root set here comes from evaluating the polynomial at each field
element; nothing in this module consults the recursion criteria or the
closed forms, so the rest of the library can be tested against it.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import _scan
from .distributions import DistributionReport, f_predicted_counts, p_predicted_counts
from .errors import CapExceeded
from .field import FieldCtx, RootSet
from .tower import ExtContext

DEFAULT_CAP = 1 << 24


@dataclass(frozen=True)
class OracleResult:
    """Scan outcome plus the number of field multiplications it spent."""

    roots: RootSet
    evaluations: int

    def __iter__(self):
        return iter(self.roots)

    def __len__(self) -> int:
        return len(self.roots)


def _check_cap(ctx: FieldCtx, cap: int) -> None:
    if ctx.order > cap:
        raise CapExceeded(f"scan of 2^{ctx.k} elements exceeds cap {cap}")


def roots_p(ctx: FieldCtx, a: int, l: int, cap: int = DEFAULT_CAP) -> OracleResult:
    """All x with x^(2^l+1) + x + a = 0, one multiplication per element."""
    _check_cap(ctx, cap)
    found = _scan.p_roots(ctx, a, l)
    return OracleResult(RootSet.make(found, "oracle"), ctx.order)


def roots_f(ctx: FieldCtx, a: int, c: int, l: int, cap: int = DEFAULT_CAP) -> OracleResult:
    """All x with a^(2^l)*x^(2^2l) + x^(2^l) + a*x + c = 0, two mults per element."""
    _check_cap(ctx, cap)
    found = _scan.affine3_roots(ctx, ctx.frob(a, l), 2 * l, 1, l, a, c)
    return OracleResult(RootSet.make(found, "oracle"), 2 * ctx.order)


def kernel_q(tw: ExtContext, a: int, r: int, l: int, cap: int = DEFAULT_CAP) -> OracleResult:
    """All x in GF(2^2k) with r^(2^l)a^(2^l)x^(2^2l) + x^(2^(k+l)) + rax = 0."""
    ext = tw.ext
    _check_cap(ext, cap)
    ae = tw.embed(a)
    c2 = ext.mul(ext.frob(r, l), ext.frob(ae, l))
    c0 = ext.mul(r, ae)
    found = _scan.affine3_roots(ext, c2, 2 * l, 1, tw.base.k + l, c0, 0)
    return OracleResult(RootSet.make(found, "oracle"), 2 * ext.order)


def _p_census_counts(ctx: FieldCtx, l: int, threads: int) -> dict[int, int]:
    hist = _scan.new_hist(ctx.order + 1)
    if threads <= 1:
        _scan.p_census(ctx, l, 1, ctx.order, hist)
    else:
        hists = [_scan.new_hist(ctx.order + 1) for _ in range(threads)]
        bounds = [1 + (ctx.order - 1) * i // threads for i in range(threads + 1)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            futs = [
                pool.submit(_scan.p_census, ctx, l, bounds[i], bounds[i + 1], hists[i])
                for i in range(threads)
            ]
            for f in futs:
                f.result()
        for h in hists:
            for i, v in enumerate(h):
                hist[i] += v
    return {i: int(v) for i, v in enumerate(hist) if v}


def _f_census_counts(ctx: FieldCtx, c: int, l: int, threads: int) -> dict[int, int]:
    def count_range(lo: int, hi: int) -> dict[int, int]:
        out: dict[int, int] = {}
        for a in range(lo, hi):
            n = len(roots_f(ctx, a, c, l).roots)
            out[n] = out.get(n, 0) + 1
        return out

    if threads <= 1:
        return count_range(1, ctx.order)
    bounds = [1 + (ctx.order - 1) * i // threads for i in range(threads + 1)]
    merged: dict[int, int] = {}
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futs = [pool.submit(count_range, bounds[i], bounds[i + 1]) for i in range(threads)]
        for f in futs:
            for key, v in f.result().items():
                merged[key] = merged.get(key, 0) + v
    return merged


def census(ctx: FieldCtx, family: str, l: int, c: int = 1, threads: int = 1,
           cap: int = DEFAULT_CAP) -> DistributionReport:
    """Observed zero-count distribution over a in GF(2^k)^*, next to the closed forms."""
    _check_cap(ctx, cap)
    if family == "p":
        counts = _p_census_counts(ctx, l, threads)
        predicted = p_predicted_counts(ctx.k, l)
    elif family == "f":
        counts = _f_census_counts(ctx, c, l, threads)
        predicted = f_predicted_counts(ctx.k, l)
    else:
        raise ValueError(f"unknown census family {family!r}")
    full = {key: counts.get(key, 0) for key in predicted}
    match = full == predicted and sum(counts.values()) == sum(full.values())
    return DistributionReport(counts=full, predicted=predicted, match=match)
