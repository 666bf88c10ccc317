"""Classification and root computation for the trinomial family."""

import pytest

from gf2tri import (
    PaClass,
    classify,
    distribution,
    gcd1_criterion,
    la_correspondence_check,
    make_field,
    solve,
)
from gf2tri.cnz import cnz_values, dn_params
from gf2tri.dobbertin import R_eval, e_exp, l_inverse
from gf2tri.errors import NotCoprime, ZeroInput
from gf2tri.oracle import roots_p
from gf2tri.psolver import _solve_two

G = 0b010


def test_classify_gf8(gf8):
    g3 = gf8.pow(G, 3)
    cls = classify(gf8, g3, 1)
    assert cls.cls is PaClass.ONE
    assert cls.z_val == 0 and cls.c_val == 0b100
    assert cls.gcd1_trace == 1
    # a = 1 is the unique 3-root point of GF(8): P_1 is the field modulus
    cls = classify(gf8, 1, 1)
    assert cls.cls is PaClass.MANY
    assert cls.c_val == 0
    # a = 0 classifies as TWO, matching roots {0, 1}
    assert classify(gf8, 0, 1).cls is PaClass.TWO


def test_solve_gf8(gf8):
    g3 = gf8.pow(G, 3)
    rs = solve(gf8, g3, 1)
    assert rs.roots == (0b101,) and rs.provenance == "closed-form"
    assert solve(gf8, 0, 1).roots == (0, 1)
    assert solve(gf8, 1, 1).roots == (0b010, 0b100, 0b110)  # conjugates of x
    assert solve(gf8, G, 1).roots == ()


def test_solve_matches_oracle_exhaustive():
    for k in range(2, 7):
        ctx = make_field(k)
        for l in range(1, k):
            for a in ctx.elements():
                assert solve(ctx, a, l).roots == roots_p(ctx, a, l).roots.roots


def test_root_arity_matches_class():
    for k, l in [(4, 2), (6, 2), (6, 3), (5, 2)]:
        ctx = make_field(k)
        d, _ = dn_params(ctx, l)
        for a in range(1, ctx.order):
            cls = classify(ctx, a, l)
            assert len(solve(ctx, a, l)) == cls.arity(d)
            assert cls.arity(d) in (0, 1, 2, (1 << d) + 1)


def test_two_root_closed_form_matches_linear_algebra():
    # d odd and > 1 so class TWO is populated and the W formula applies
    for k, l in [(6, 3), (9, 3), (12, 3)]:
        ctx = make_field(k)
        d, n = dn_params(ctx, l)
        assert d % 2 == 1 and d > 1
        seen = 0
        for a in range(1, ctx.order):
            cls = classify(ctx, a, l)
            if cls.cls is not PaClass.TWO:
                continue
            seen += 1
            vals = cnz_values(ctx, a, l)
            closed = _solve_two(ctx, vals, a, l, d, n)
            assert closed.provenance == "closed-form"
            for r in closed:
                assert ctx.mul(ctx.frob(r, l), r) ^ r ^ a == 0
            assert closed.roots == roots_p(ctx, a, l).roots.roots
            if seen > 500:
                break
        assert seen > 0


def test_gcd1_criterion_gf8(gf8):
    g3 = gf8.pow(G, 3)
    assert gcd1_criterion(gf8, g3, 1) == 1
    assert gcd1_criterion(gf8, 1, 1) == 0
    assert gcd1_criterion(gf8, G, 1) == 0
    with pytest.raises(NotCoprime):
        gcd1_criterion(make_field(4), 1, 2)
    with pytest.raises(ZeroInput):
        gcd1_criterion(gf8, 0, 1)


def test_gcd1_criterion_equivalences():
    for k, l in [(3, 2), (5, 2), (7, 4), (8, 3)]:
        ctx = make_field(k)
        for a in range(1, ctx.order):
            bit = gcd1_criterion(ctx, a, l)
            n_roots = len(roots_p(ctx, a, l).roots)
            assert (bit == 1) == (n_roots == 1)
            vals = cnz_values(ctx, a, l)
            assert (bit == 1) == (vals.z == 0 and vals.C(ctx.k) != 0)


def test_theorem_trace_identities():
    # if P_a(x0) = 0 then Tr(R(1/a)) = Tr(H_l'(1/x0)) = Tr((1+1/x0)^e(l') + 1)
    from gf2tri.dobbertin import H_eval

    for k, l in [(5, 2), (7, 3)]:
        ctx = make_field(k)
        lp = l_inverse(ctx, l)
        for a in range(1, ctx.order):
            lhs = ctx.trace(R_eval(ctx, ctx.inv(a), l))
            for x0 in roots_p(ctx, a, l).roots:
                if x0 == 0:
                    continue
                xi = ctx.inv(x0)
                assert ctx.trace(H_eval(ctx, lp, xi, l)) == lhs
                assert ctx.trace(ctx.pow(xi ^ 1, e_exp(ctx, lp, l)) ^ 1) == lhs


def test_distribution_checkpoints():
    assert distribution(make_field(3), 1).counts == {0: 3, 1: 3, 2: 0, 3: 1}
    assert distribution(make_field(2), 1).counts == {0: 1, 1: 2, 2: 0, 3: 0}
    assert distribution(make_field(4), 2).counts == {0: 6, 1: 4, 2: 5, 5: 0}
    assert distribution(make_field(6), 2).counts == {0: 26, 1: 15, 2: 21, 5: 1}
    for rep in (distribution(make_field(6), 2), distribution(make_field(5), 1)):
        assert rep.match
        assert sum(rep.counts.values()) == sum(rep.predicted.values())


def test_la_correspondence():
    for k, l in [(3, 1), (4, 2), (5, 2)]:
        ctx = make_field(k)
        for a in range(1, ctx.order):
            assert la_correspondence_check(ctx, a, l)
    with pytest.raises(ZeroInput):
        la_correspondence_check(make_field(3), 0, 1)


def test_solve_checked():
    from gf2tri import solve_checked

    ctx = make_field(5)
    for a in ctx.elements():
        rs = solve_checked(ctx, a, 2)
        assert rs.roots == solve(ctx, a, 2).roots


def test_classes_square_invariant():
    # a and a^2 always classify identically (Frobenius conjugation)
    ctx = make_field(6)
    for l in (2, 3):
        for a in range(1, ctx.order):
            assert classify(ctx, a, l).cls == classify(ctx, ctx.sqr(a), l).cls
