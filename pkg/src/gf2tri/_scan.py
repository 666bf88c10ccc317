"""Backend selection and context-level wrappers for the scan kernels.

The compiled Cython backend is picked when its extension module imported
successfully; otherwise the pure-Python twin is used.  Fields too large for
tables (k > TABLE_MAX_K) take a generic path through FieldCtx arithmetic.
"""

from __future__ import annotations

from .field import FieldCtx

try:
    from . import _scanc as _impl

    BACKEND = "compiled"
except ImportError:  # pragma: no cover - depends on the build
    from . import _scan_py as _impl

    BACKEND = "python"

# numpy table cache, keyed by field modulus (contexts are immutable)
_NP_TABLES: dict[int, tuple] = {}


def _tables(ctx: FieldCtx):
    tabs = ctx.tables
    if tabs is None:
        return None
    if BACKEND == "python":
        return tabs
    cached = _NP_TABLES.get(ctx.modulus)
    if cached is None:
        import numpy as np

        exp, log = tabs
        cached = (np.asarray(exp, dtype=np.int64), np.asarray(log, dtype=np.int64))
        _NP_TABLES[ctx.modulus] = cached
    return cached


def new_hist(size: int):
    """Histogram buffer in the representation the active backend expects."""
    if BACKEND == "python":
        return [0] * size
    import numpy as np

    return np.zeros(size, dtype=np.int64)


def p_roots(ctx: FieldCtx, a: int, l: int) -> list[int]:
    tabs = _tables(ctx)
    if tabs is None:
        return [x for x in ctx.elements() if ctx.mul(ctx.frob(x, l), x) ^ x ^ a == 0]
    return _impl.roots_p(tabs[0], tabs[1], ctx.order - 1, a, l % ctx.k)


def p_count(ctx: FieldCtx, a: int, l: int) -> int:
    tabs = _tables(ctx)
    if tabs is None:
        return len(p_roots(ctx, a, l))
    return _impl.count_p(tabs[0], tabs[1], ctx.order - 1, a, l % ctx.k)


def p_census(ctx: FieldCtx, l: int, a_lo: int, a_hi: int, hist) -> None:
    tabs = _tables(ctx)
    if tabs is None:
        for a in range(a_lo, a_hi):
            hist[p_count(ctx, a, l)] += 1
        return
    _impl.census_p(tabs[0], tabs[1], ctx.order - 1, l % ctx.k, a_lo, a_hi, hist)


def affine3_roots(ctx: FieldCtx, c2: int, e2: int, c1: int, e1: int,
                  c0: int, const: int) -> list[int]:
    """Roots of c2*x^(2^e2) + c1*x^(2^e1) + c0*x + const by full scan."""
    e2 %= ctx.k
    e1 %= ctx.k
    tabs = _tables(ctx)
    if tabs is None:
        out = []
        for x in ctx.elements():
            v = ctx.mul(c2, ctx.frob(x, e2)) ^ ctx.mul(c1, ctx.frob(x, e1))
            v ^= ctx.mul(c0, x) ^ const
            if v == 0:
                out.append(x)
        return out
    return _impl.roots_affine3(tabs[0], tabs[1], ctx.order - 1, c2, e2, c1, e1, c0, const)


def affine3_count(ctx: FieldCtx, c2: int, e2: int, c1: int, e1: int, c0: int) -> int:
    """Kernel size of c2*x^(2^e2) + c1*x^(2^e1) + c0*x (x = 0 included)."""
    e2 %= ctx.k
    e1 %= ctx.k
    tabs = _tables(ctx)
    if tabs is None:
        return len(affine3_roots(ctx, c2, e2, c1, e1, c0, 0))
    return _impl.count_affine3(tabs[0], tabs[1], ctx.order - 1, c2, e2, c1, e1, c0)
