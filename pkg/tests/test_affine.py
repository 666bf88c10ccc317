"""The affine companion family: classification, roots, traces, character sums."""

import pytest

from gf2tri import (
    character_sum,
    classify_f,
    f_census,
    make_field,
    root_trace_class,
    solve_f,
)
from gf2tri.cnz import dn_params
from gf2tri.dobbertin import R_eval
from gf2tri.errors import BadConstant, NoRoots
from gf2tri.field import linearized_solutions
from gf2tri.oracle import roots_f

G = 0b010


def test_classify_f_gf8(gf8):
    g3 = gf8.pow(G, 3)
    assert classify_f(gf8, G, 1) == 1
    assert classify_f(gf8, g3, 1) == 2
    assert classify_f(gf8, 0, 1) == 1


def test_solve_f_gf8_examples(gf8):
    g3 = gf8.pow(G, 3)
    sol = solve_f(gf8, G, 1, 1)
    assert sol.roots.roots == (gf8.pow(G, 6),)
    sol = solve_f(gf8, g3, 1, 1)
    assert set(sol.roots) == {gf8.pow(G, 4), G}
    sol = solve_f(gf8, G, 0, 1)
    assert sol.roots.roots == (0,)
    assert solve_f(gf8, 0, 1, 1).roots.roots == (1,)


def test_solve_f_rejects_bad_constant():
    ctx = make_field(4)
    with pytest.raises(BadConstant):
        solve_f(ctx, 1, G, 1)  # d = 1 but G is outside GF(2)


def test_solve_f_matches_oracle_exhaustive():
    for k in range(2, 7):
        ctx = make_field(k)
        for l in range(1, k):
            d, _ = dn_params(ctx, l)
            for a in ctx.elements():
                for c in ctx.subfield_elements(d):
                    got = solve_f(ctx, a, c, l)
                    want = roots_f(ctx, a, c, l).roots
                    assert got.roots.roots == want.roots
                    assert got.arity == len(want)
                    assert len(want) >= 1


def test_v_mu_closed_form_used_for_odd_n():
    ctx = make_field(6)  # l = 2: d = 2, n = 3 odd
    hits = 0
    for a in range(1, ctx.order):
        sol = solve_f(ctx, a, 1, 2)
        if sol.arity == 4:
            hits += 1
            assert sol.roots.provenance == "closed-form"
            want = linearized_solutions(
                ctx, [(ctx.frob(a, 2), 4), (1, 2), (a, 0)], 1)
            assert list(sol.roots) == want
    assert hits > 0


def test_root_trace_class_predictions(gf8):
    g3 = gf8.pow(G, 3)
    assert root_trace_class(gf8, G, 1, 1) == 1   # arity 1: n*c with n=3
    assert root_trace_class(gf8, g3, 1, 1) == 0  # arity 2^d: (n-1)*c
    assert gf8.trace(gf8.pow(G, 6)) == 1


def test_trace_class_sweep():
    for k, l in [(4, 2), (6, 2), (6, 3), (5, 2)]:
        ctx = make_field(k)
        d, n = dn_params(ctx, l)
        for a in range(1, ctx.order):
            for c in ctx.subfield_elements(d):
                sol = solve_f(ctx, a, c, l)
                mult = n if sol.arity != (1 << d) else n - 1
                assert sol.trace_class == (mult % 2) * c
                assert root_trace_class(ctx, a, c, l) == sol.trace_class


def test_character_sums(gf8):
    g3 = gf8.pow(G, 3)
    assert character_sum(gf8, g3, 1, 1) == 0  # arity 2^d, n odd
    assert character_sum(gf8, 1, 1, 1) == 2   # arity 2^2d, n odd: 2^d
    with pytest.raises(NoRoots):
        character_sum(gf8, G, 1, 1)  # arity 1
    with pytest.raises(BadConstant):
        character_sum(gf8, g3, 0, 1)


def test_character_sums_sweep():
    for k, l in [(6, 2), (9, 3)]:  # n = 3 odd, d > 1
        ctx = make_field(k)
        d, n = dn_params(ctx, l)
        for a in range(1, ctx.order):
            arity = classify_f(ctx, a, l)
            if arity == 1:
                continue
            for c in ctx.subfield_elements(d):
                if c == 0:
                    continue
                s = character_sum(ctx, a, c, l)
                assert s == (0 if arity == (1 << d) else 1 << d)


def test_character_constant_for_even_n():
    ctx = make_field(4)  # l = 2: d = 2, n = 2
    for a in range(1, ctx.order):
        if classify_f(ctx, a, 2) != 4:
            continue
        sol = solve_f(ctx, a, 1, 2)
        bits = {ctx.trace(ctx.mul(a, ctx.mul(ctx.frob(v, 2), v))) for v in sol.roots}
        assert len(bits) == 1


def test_f_census_checkpoint():
    rep = f_census(make_field(3), 1)
    assert rep.counts == {1: 3, 2: 3, 4: 1}
    assert rep.match
    assert sum(rep.counts.values()) == 7


def test_coprime_seed_root():
    # gcd(l,k)=1, c=1: R(a^(-1)) is always among the zeros
    for k, l in [(3, 2), (5, 2), (7, 3)]:
        ctx = make_field(k)
        for a in range(1, ctx.order):
            sol = solve_f(ctx, a, 1, l)
            assert R_eval(ctx, ctx.inv(a), l) in sol.roots


def test_root_trace_second_identity_coprime():
    # Tr(a v^(2^l+1)) = l'*Tr(R(1/a)) + Tr(l'+1) at v = R(1/a), else + Tr(l')
    from gf2tri.dobbertin import l_inverse

    for k, l in [(5, 2), (7, 3), (4, 3)]:
        ctx = make_field(k)
        lp = l_inverse(ctx, l)
        tr_one = ctx.k & 1  # Tr(1) = k mod 2
        for a in range(1, ctx.order):
            v0 = R_eval(ctx, ctx.inv(a), l)
            base = (lp & 1) * ctx.trace(v0)
            for v in solve_f(ctx, a, 1, l).roots:
                got = ctx.trace(ctx.mul(a, ctx.mul(ctx.frob(v, l), v)))
                shift = (lp + 1) & 1 if v == v0 else lp & 1
                assert got == (base + shift * tr_one) % 2
