"""The brute-force oracle itself, plus backend equivalence."""

import pytest

from gf2tri import census, kernel_q, make_field, roots_f, roots_p
from gf2tri import _scan, _scan_py
from gf2tri.errors import CapExceeded
from gf2tri.tower import ExtContext

G = 0b010


def test_roots_p_examples(gf8):
    assert roots_p(gf8, 0, 1).roots.roots == (0, 1)
    g3 = gf8.pow(G, 3)
    res = roots_p(gf8, g3, 1)
    assert res.roots.roots == (0b101,)
    assert res.roots.provenance == "oracle"
    assert res.evaluations == 8


def test_roots_f_examples(gf8):
    assert roots_f(gf8, 0, 1, 1).roots.roots == (1,)
    assert roots_f(gf8, G, 1, 1).roots.roots == (gf8.pow(G, 6),)


def test_census_examples(gf8):
    rep = census(gf8, "p", 1)
    assert rep.counts == {0: 3, 1: 3, 2: 0, 3: 1}
    assert rep.match
    rep = census(gf8, "f", 1, c=1)
    assert rep.counts == {1: 3, 2: 3, 4: 1}
    assert rep.match
    assert sum(rep.counts.values()) == 7


def test_census_threads_agree(gf8):
    ctx = make_field(6)
    assert census(ctx, "p", 2, threads=3).counts == census(ctx, "p", 2).counts
    assert census(ctx, "f", 2, threads=2).counts == census(ctx, "f", 2).counts


def test_frobenius_conjugation_symmetry():
    for k, l in [(4, 1), (5, 2), (6, 2)]:
        ctx = make_field(k)
        for a in range(0, ctx.order, 3):
            base = roots_p(ctx, a, l).roots
            conj = roots_p(ctx, ctx.frob(a, 1), l).roots
            assert tuple(sorted(ctx.frob(x, 1) for x in base)) == conj.roots


def test_cap():
    ctx = make_field(8)
    with pytest.raises(CapExceeded):
        roots_p(ctx, 1, 1, cap=100)
    with pytest.raises(CapExceeded):
        census(ctx, "p", 1, cap=100)


def test_kernel_q_contains_zero():
    tw = ExtContext(make_field(3))
    res = kernel_q(tw, 1, 1, 1)
    assert 0 in res.roots
    assert res.evaluations == 2 * tw.ext.order


def test_backends_agree():
    # the pure-Python kernels and whatever backend is active give identical
    # answers on the same tables
    ctx = make_field(7)
    exp, log = ctx.tables
    m = ctx.order - 1
    for l in (1, 2, 3):
        for a in (0, 1, 5, 77, 126):
            via_active = _scan.p_roots(ctx, a, l)
            via_python = _scan_py.roots_p(exp, log, m, a, l)
            assert via_active == via_python
            assert _scan.p_count(ctx, a, l) == _scan_py.count_p(exp, log, m, a, l)
    hist_py = [0] * (ctx.order + 1)
    _scan_py.census_p(exp, log, m, 1, 1, ctx.order, hist_py)
    hist_active = _scan.new_hist(ctx.order + 1)
    _scan.p_census(ctx, 1, 1, ctx.order, hist_active)
    assert list(hist_py) == [int(v) for v in hist_active]
    for coeffs in [(3, 2, 1, 1, 9), (0, 2, 1, 3, 5), (4, 1, 0, 2, 0)]:
        c2, e2, c1, e1, c0 = coeffs
        assert (_scan.affine3_roots(ctx, c2, e2, c1, e1, c0, 6)
                == _scan_py.roots_affine3(exp, log, m, c2, e2, c1, e1, c0, 6))
        assert (_scan.affine3_count(ctx, c2, e2, c1, e1, c0)
                == _scan_py.count_affine3(exp, log, m, c2, e2, c1, e1, c0))


def test_generic_tableless_path(monkeypatch):
    # fields above the table limit scan through FieldCtx arithmetic; force
    # that branch on a small field and compare with the table-backed answer
    ctx = make_field(5)
    want_p = {a: _scan.p_roots(ctx, a, 2) for a in ctx.elements()}
    want_f = _scan.affine3_roots(ctx, 7, 4, 1, 2, 9, 1)
    want_c = _scan.affine3_count(ctx, 7, 4, 1, 2, 9)
    monkeypatch.setattr(_scan, "_tables", lambda _ctx: None)
    for a in ctx.elements():
        assert _scan.p_roots(ctx, a, 2) == want_p[a]
        assert _scan.p_count(ctx, a, 2) == len(want_p[a])
    assert _scan.affine3_roots(ctx, 7, 4, 1, 2, 9, 1) == want_f
    assert _scan.affine3_count(ctx, 7, 4, 1, 2, 9) == want_c
    hist = [0] * (ctx.order + 1)
    _scan.p_census(ctx, 2, 1, ctx.order, hist)
    from collections import Counter

    assert Counter({i: v for i, v in enumerate(hist) if v}) == Counter(
        len(want_p[a]) for a in range(1, ctx.order))


def test_element_hex_io():
    from gf2tri.field import fe_from_hex, fe_to_hex

    ctx = make_field(6)
    for x in (0, 1, 0x2A, 0x3F):
        assert fe_from_hex(fe_to_hex(x)) == x
        assert ctx.parse_element(fe_to_hex(x)) == x
    with pytest.raises(ValueError):
        ctx.parse_element("0x40")


def test_compiled_backend_if_built():
    try:
        from gf2tri import _scanc
    except ImportError:
        pytest.skip("compiled backend not built")
    import numpy as np

    ctx = make_field(6)
    exp, log = ctx.tables
    np_exp = np.asarray(exp, dtype=np.int64)
    np_log = np.asarray(log, dtype=np.int64)
    m = ctx.order - 1
    for a in range(0, ctx.order, 5):
        assert (_scanc.roots_p(np_exp, np_log, m, a, 2)
                == _scan_py.roots_p(exp, log, m, a, 2))
