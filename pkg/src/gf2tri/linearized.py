"""Kernels of Q_a(x) = r^(2^l)a^(2^l)x^(2^2l) + x^(2^(k+l)) + rax over GF(2^2k).

Here a != 0 lives in the base field and r is on the unit circle
(r^(2^k+1) = 1).  The kernel size is predicted from the zero count of the
companion z^(2^(k+l)+1) + z + a^2 over the extension, whether r is a
(2^(k+l)-1)-th power, and the determinant witness Y_n; the brute-force
2k-dimensional kernel stays the authority in every test.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cnz import y_eval
from .errors import BadUnitCircle
from .field import RootSet, linearized_solutions
from .psolver import PaClass, classify
from .tower import ExtContext


def unit_circle(tw: ExtContext) -> list[int]:
    """All 2^k+1 elements r of GF(2^2k) with r^(2^k+1) = 1, as generator powers."""
    ext = tw.ext
    k = tw.base.k
    tabs = ext.tables
    if tabs is not None:
        exp, _ = tabs
        step = (1 << k) - 1
        return [exp[j * step] for j in range((1 << k) + 1)]
    gen = ext.generator
    g = ext.pow(gen, (1 << k) - 1)
    out = [1]
    for _ in range(1 << k):
        out.append(ext.mul(out[-1], g))
    assert out.pop() == 1
    return out


def _check_unit_circle(tw: ExtContext, r: int) -> None:
    if r == 0 or tw.ext.pow(r, (1 << tw.base.k) + 1) != 1:
        raise BadUnitCircle(f"r={r:#x} does not satisfy r^(2^k+1) = 1")


def r_power_test(tw: ExtContext, r: int, l: int) -> bool:
    """Whether r is a (2^(k+l)-1)-th power in GF(2^2k).

    Computed from the parity criterion ((k+l)/d odd, or the (2^d+1)-th power
    residue of r) and independently from the subgroup-order test; the two
    must agree.
    """
    _check_unit_circle(tw, r)
    ext = tw.ext
    k = tw.base.k
    d = math.gcd(l, k)
    if (k + l) // d % 2 == 1:
        by_lemma = True
    else:
        by_lemma = ext.pow(r, ((1 << k) + 1) // ((1 << d) + 1)) == 1
    d1 = tw.d1(l)
    by_order = ext.pow(r, (ext.order - 1) // ((1 << d1) - 1)) == 1
    assert by_lemma == by_order, "parity criterion disagrees with the order test"
    return by_lemma


def q_kernel(tw: ExtContext, a: int, r: int, l: int) -> RootSet:
    """The full kernel, by GF(2) linear algebra on 2k dimensions."""
    _check_unit_circle(tw, r)
    ext = tw.ext
    ae = tw.embed(a)
    terms = [
        (ext.mul(ext.frob(r, l), ext.frob(ae, l)), 2 * l),
        (1, tw.base.k + l),
        (ext.mul(r, ae), 0),
    ]
    return RootSet.make(linearized_solutions(ext, terms, 0), "linear-algebra")


@dataclass(frozen=True)
class QClassification:
    """Predicted kernel size with the witnesses that produced it."""

    kernel_size: int
    r_is_power: bool
    f_zero_count: int
    y_val: int | None  # Y_n(a) in the extension; None when (k+l)/d is odd


def f_zero_count(tw: ExtContext, a: int, l: int) -> int:
    """Zero count of z^(2^(k+l)+1) + z + a^2 over GF(2^2k), via the criteria."""
    ext = tw.ext
    ae2 = tw.embed(tw.base.sqr(a))
    cls = classify(ext, ae2, tw.base.k + l).cls
    if cls is PaClass.MANY:
        return (1 << tw.d1(l)) + 1
    return {PaClass.ZERO: 0, PaClass.ONE: 1, PaClass.TWO: 2}[cls]


def classify_q(tw: ExtContext, a: int, r: int, l: int) -> QClassification:
    """Predict the kernel size of Q_a from the section's criteria."""
    _check_unit_circle(tw, r)
    ext = tw.ext
    k = tw.base.k
    d = math.gcd(l, k)
    d1 = tw.d1(l)
    zf = f_zero_count(tw, a, l)
    is_power = r_power_test(tw, r, l)
    y = None
    if (k + l) // d % 2 == 0:
        delta = ext.pow(r, ((1 << k) + 1) // ((1 << d) + 1))
        y = y_eval(tw, a, delta, l)
    if is_power:
        size = {0: 1, 1: 1 << d1, 2: 1}.get(zf, 1 << (2 * d1))
    elif zf == 2:
        size = 1 if y != 0 else 1 << (2 * d)
    else:
        size = 1
    return QClassification(kernel_size=size, r_is_power=is_power, f_zero_count=zf, y_val=y)
