"""Invariant suites: the library's derived identities as executable checks.

Each check function sweeps a (k, l) grid up to its max_k and returns
(cases, failures); a failure is a short human-readable string.  The CLI
`verify` subcommand and the acceptance test module both run these.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor

from . import _scan, affine, cnz, dobbertin, oracle, psolver
from .distributions import cn_zero_count, zn_zero_count
from .field import make_field
from .linearized import classify_q, r_power_test, unit_circle
from .tower import ExtContext

MAX_LISTED_FAILURES = 20


def _fields(max_k: int, min_k: int = 2):
    for k in range(min_k, max_k + 1):
        yield make_field(k)


def _coprime_ls(k: int):
    return [l for l in range(1, k) if math.gcd(l, k) == 1]


class _Tally:
    def __init__(self) -> None:
        self.cases = 0
        self.n_failed = 0
        self.failures: list[str] = []

    def check(self, ok: bool, msg: str) -> None:
        self.cases += 1
        if not ok:
            self.n_failed += 1
            if len(self.failures) < MAX_LISTED_FAILURES:
                self.failures.append(msg)

    def result(self) -> tuple[int, list[str]]:
        if self.n_failed > len(self.failures):
            self.failures.append(f"... and {self.n_failed - len(self.failures)} more failures")
        return self.cases, self.failures


# ------------------------------------------------------------------
# Criterion 1: solver equals the exhaustive oracle for the P family
# ------------------------------------------------------------------

def check_p_oracle_equivalence(max_k: int = 10) -> tuple[int, list[str]]:
    t = _Tally()
    for ctx in _fields(max_k):
        for l in range(1, ctx.k):
            for a in ctx.elements():
                got = psolver.solve(ctx, a, l).roots
                want = tuple(_scan.p_roots(ctx, a, l))
                t.check(got == want,
                        f"P k={ctx.k} l={l} a={a:#x}: solve {got} != oracle {want}")
    return t.result()


# ------------------------------------------------------------------
# Criterion 2: distribution reproduction
# ------------------------------------------------------------------

def check_p_distribution(max_k: int = 14, oracle_max_k: int = 10,
                         threads: int = 1) -> tuple[int, list[str]]:
    t = _Tally()
    for ctx in _fields(max_k):
        for l in range(1, ctx.k):
            rep = psolver.distribution(ctx, l)
            t.check(rep.match,
                    f"P census k={ctx.k} l={l}: {rep.counts} != {rep.predicted}")
            t.check(sum(rep.counts.values()) == ctx.order - 1,
                    f"P census k={ctx.k} l={l}: counts do not sum to 2^k-1")
            if ctx.k <= oracle_max_k:
                orep = oracle.census(ctx, "p", l, threads=threads)
                t.check(orep.counts == rep.counts,
                        f"P census k={ctx.k} l={l}: oracle {orep.counts} != criteria {rep.counts}")
    return t.result()


# ------------------------------------------------------------------
# Criterion 3: the coprime-case trace criterion
# ------------------------------------------------------------------

def check_gcd1_criterion(max_k: int = 12) -> tuple[int, list[str]]:
    t = _Tally()
    for ctx in _fields(max_k):
        for l in _coprime_ls(ctx.k):
            for a in range(1, ctx.order):
                bit = psolver.gcd1_criterion(ctx, a, l)
                n_roots = _scan.p_count(ctx, a, l)
                t.check((bit == 1) == (n_roots == 1),
                        f"gcd1 k={ctx.k} l={l} a={a:#x}: bit={bit} roots={n_roots}")
                vals = cnz.cnz_values(ctx, a, l)
                zc = vals.z == 0 and vals.C(ctx.k) != 0
                t.check((bit == 1) == zc,
                        f"gcd1-ZC k={ctx.k} l={l} a={a:#x}: bit={bit} Z/C={zc}")
    return t.result()


# ------------------------------------------------------------------
# Criterion 4: closed-form roots
# ------------------------------------------------------------------

def check_closed_form_roots(max_k: int = 14) -> tuple[int, list[str]]:
    t = _Tally()
    for ctx in _fields(max_k):
        for l in range(1, ctx.k):
            d, n = cnz.dn_params(ctx, l)
            for a in range(1, ctx.order):
                vals = cnz.cnz_values(ctx, a, l)
                cn, z = vals.C(n), vals.z
                if cn != 0 and z == 0:
                    r = ctx.frob(ctx.mul(a, ctx.pow(cn, (1 << l) - 1)), ctx.k - 1)
                    ok = ctx.mul(ctx.frob(r, l), r) ^ r ^ a == 0
                    t.check(ok, f"one-root k={ctx.k} l={l} a={a:#x}")
                elif z != 0 and d % 2 == 1:
                    zi = ctx.inv(z)
                    w = ctx.mul(ctx.norm(a, d), ctx.mul(zi, zi))
                    if ctx.abs_trace(w, d) == 0:
                        roots = psolver.solve(ctx, a, l)
                        ok = len(roots) == 2 and roots.provenance == "closed-form"
                        t.check(ok, f"two-root k={ctx.k} l={l} a={a:#x}")
    return t.result()


# ------------------------------------------------------------------
# Criterion 5: the C/Z identity suite
# ------------------------------------------------------------------

def check_cz_identities(max_k: int = 12, dense_max_k: int = 6) -> tuple[int, list[str]]:
    t = _Tally()
    for ctx in _fields(max_k):
        for l in range(1, ctx.k):
            d, n = cnz.dn_params(ctx, l)
            bad_dc2 = bad_c2l = bad_zsub = bad_det = 0
            for u in ctx.elements():
                vals = cnz.cnz_values(ctx, u, l)
                u1 = ctx.frob(u, l)
                prod = 1
                for i in range(1, n):
                    lhs = vals.C(i + 2)
                    rhs = ctx.frob(vals.C(i + 1), l) ^ ctx.mul(u1, ctx.frob(vals.C(i), 2 * l))
                    bad_dc2 += lhs != rhs
                    prod = ctx.mul(prod, ctx.frob(u, (i * l) % ctx.k))
                    pl = ctx.mul(ctx.frob(vals.C(i), l), vals.C(i + 2))
                    pr = ctx.mul(ctx.frob(vals.C(i + 1), l), vals.C(i + 1))
                    bad_c2l += pl ^ pr != prod
                bad_zsub += ctx.frob(vals.z, d) != vals.z
                drow = cnz.delta_row(ctx, u, l, 1, n - 1)
                for i in range(1, n):
                    bad_det += drow[i - 1] != ctx.sqr(vals.C(i + 2))
            t.check(bad_dc2 == 0, f"dual recursion k={ctx.k} l={l}: {bad_dc2} points")
            t.check(bad_c2l == 0, f"product identity k={ctx.k} l={l}: {bad_c2l} points")
            t.check(bad_zsub == 0, f"Z subfield k={ctx.k} l={l}: {bad_zsub} points")
            t.check(bad_det == 0, f"determinant k={ctx.k} l={l}: {bad_det} points")

            if ctx.k <= dense_max_k:
                bad = 0
                for u in ctx.elements():
                    for i in range(1, n):
                        if cnz.delta_det(ctx, u, l, 1, i) != cnz.delta_det_dense(ctx, u, l, 1, i):
                            bad += 1
                t.check(bad == 0, f"dense determinant k={ctx.k} l={l}: {bad} points")

            # V-map facts: Z_n(V)=0; C_n(V)=0 iff Tr(v)=0; the closed form for
            # C_n(V) when n >= 3; the trace corollary when Tr(v) != 0, n > 2
            bad_v = bad_cf = bad_tr = 0
            for v in ctx.elements():
                if ctx.frob(v, d) == v:
                    continue
                V = cnz.v_map(ctx, v, l)
                vv = cnz.cnz_values(ctx, V, l)
                trv = ctx.trace(v, d)
                bad_v += vv.z != 0 or (vv.C(n) == 0) != (trv == 0)
                if n >= 3:
                    v1 = ctx.frob(v, l)
                    v2 = ctx.frob(v, 2 * l)
                    ratio = ctx.mul(v, ctx.inv(v ^ v1))
                    rhs = ctx.mul(trv, ctx.inv(v1 ^ v2))
                    for j in range(2, n):
                        rhs = ctx.mul(rhs, ctx.frob(ratio, (j * l) % ctx.k))
                    bad_cf += vv.C(n) != rhs
                if n > 2 and trv != 0:
                    w = ctx.mul(ctx.frob(vv.C(n - 1), l),
                                ctx.inv(ctx.mul(ctx.frob(vv.C(n), l), vv.C(n))))
                    bad_tr += ctx.trace(w, d) != 0
            t.check(bad_v == 0, f"V-map zeros k={ctx.k} l={l}: {bad_v} points")
            t.check(bad_cf == 0, f"C_n(V) closed form k={ctx.k} l={l}: {bad_cf} points")
            t.check(bad_tr == 0, f"trace corollary k={ctx.k} l={l}: {bad_tr} points")

            if ctx.k <= 10:
                t.check(cnz.count_zeros_cn(ctx, l) == cn_zero_count(ctx.k, l),
                        f"C zero count k={ctx.k} l={l}")
                t.check(cnz.count_zeros_zn(ctx, l) == zn_zero_count(ctx.k, l),
                        f"Z zero count k={ctx.k} l={l}")
    return t.result()


# ------------------------------------------------------------------
# Criterion 6: the Dobbertin suite
# ------------------------------------------------------------------

def check_dobbertin(max_k: int = 12) -> tuple[int, list[str]]:
    t = _Tally()
    for ctx in _fields(max_k):
        for l in _coprime_ls(ctx.k):
            lp = dobbertin.l_inverse(ctx, l)
            t.check((dobbertin.e_exp(ctx, lp, l) * ((1 << l) - 1)) % (ctx.order - 1) == 1,
                    f"e(l') inverse k={ctx.k} l={l}")
            image = set()
            bad_inv = 0
            for u in range(1, ctx.order):
                qu = dobbertin.q_perm(ctx, u, l)
                image.add(qu)
                if qu == 0 or dobbertin.R_eval(ctx, ctx.inv(qu), l) != u:
                    bad_inv += 1
            t.check(len(image) == ctx.order - 1 and 0 not in image,
                    f"q bijection k={ctx.k} l={l}")
            t.check(bad_inv == 0, f"q/R inverse k={ctx.k} l={l}: {bad_inv} points")

            bad_h = 0
            for x in ctx.elements():
                y = x ^ 1
                for i in range(1, lp + 1):
                    lhs = ctx.trace(dobbertin.H_eval(ctx, i, x, l))
                    rhs = ctx.trace(1 ^ ctx.pow(y, dobbertin.e_exp(ctx, i, l)))
                    bad_h += lhs != rhs
            t.check(bad_h == 0, f"H trace identity k={ctx.k} l={l}: {bad_h} points")

            bad_v = bad_t = 0
            for a in range(1, ctx.order):
                v = dobbertin.R_eval(ctx, ctx.inv(a), l)
                fa = ctx.mul(ctx.frob(a, l), ctx.frob(v, 2 * l)) ^ ctx.frob(v, l)
                fa ^= ctx.mul(a, v) ^ 1
                bad_v += fa != 0
            for x in ctx.elements():
                tl = dobbertin.T_l_eval(ctx, x, l)
                bad_t += ctx.mul(tl ^ 1, tl) != x ^ ctx.frob(x, l)
            t.check(bad_v == 0, f"R(a^-1) is an F_a zero k={ctx.k} l={l}: {bad_v} points")
            t.check(bad_t == 0, f"T_l identity k={ctx.k} l={l}: {bad_t} points")
    return t.result()


# ------------------------------------------------------------------
# Criterion 7: the affine family
# ------------------------------------------------------------------

def check_f_family(max_k: int = 10) -> tuple[int, list[str]]:
    t = _Tally()
    for ctx in _fields(max_k):
        for l in range(1, ctx.k):
            d, n = cnz.dn_params(ctx, l)
            subfield = ctx.subfield_elements(d)
            bad_roots = bad_trace = bad_char = 0
            for a in ctx.elements():
                for c in subfield:
                    sol = affine.solve_f(ctx, a, c, l)
                    want = tuple(_scan.affine3_roots(
                        ctx, ctx.frob(a, l), 2 * l, 1, l, a, c))
                    if sol.roots.roots != want or len(want) == 0:
                        bad_roots += 1
                        continue
                    mult = n if sol.arity != (1 << d) else n - 1
                    if sol.trace_class != ((mult % 2) * c):
                        bad_trace += 1
                    if c != 0 and sol.arity >= (1 << d):
                        ci2 = ctx.sqr(ctx.inv(c))
                        bits = [ctx.trace(ctx.mul(ctx.mul(a, ci2),
                                                  ctx.mul(ctx.frob(v, l), v)))
                                for v in sol.roots]
                        s = sum(-1 if b else 1 for b in bits)
                        if n % 2 == 1:
                            wanted = 0 if sol.arity == (1 << d) else 1 << d
                            if s != wanted:
                                bad_char += 1
                        elif sol.arity == (1 << d) and len(set(bits)) != 1:
                            bad_char += 1  # n even: the summand is constant
            t.check(bad_roots == 0, f"F roots k={ctx.k} l={l}: {bad_roots} cases")
            t.check(bad_trace == 0, f"F trace class k={ctx.k} l={l}: {bad_trace} cases")
            t.check(bad_char == 0, f"F character sums k={ctx.k} l={l}: {bad_char} cases")
            rep = affine.f_census(ctx, l)
            orep = oracle.census(ctx, "f", l)
            t.check(rep.match, f"F census k={ctx.k} l={l}: {rep.counts} != {rep.predicted}")
            t.check(orep.counts == rep.counts,
                    f"F census oracle k={ctx.k} l={l}: {orep.counts} != {rep.counts}")
    return t.result()


# ------------------------------------------------------------------
# Criterion 8: the linearized family over the quadratic extension
# ------------------------------------------------------------------

def check_q_family(max_k: int = 6, threads: int = 1) -> tuple[int, list[str]]:
    t = _Tally()
    for k in range(2, max_k + 1):
        tw = ExtContext(make_field(k))
        tw.base.tables  # prewarm before any thread pool touches the context
        tw.ext.tables
        circle = unit_circle(tw)
        t.check(len(circle) == (1 << k) + 1 and 1 in circle,
                f"unit circle size k={k}")
        for l in range(1, k):
            d = math.gcd(l, k)
            bad_rp = 0
            for r in circle:
                try:
                    r_power_test(tw, r, l)  # asserts lemma-vs-order agreement
                except AssertionError:
                    bad_rp += 1
            t.check(bad_rp == 0, f"r-power agreement k={k} l={l}: {bad_rp} bad")

            def cell(a: int, r: int):
                pred = classify_q(tw, a, r, l)
                ae = tw.embed(a)
                c2 = tw.ext.mul(tw.ext.frob(r, l), tw.ext.frob(ae, l))
                got = _scan.affine3_count(tw.ext, c2, 2 * l, 1, k + l,
                                          tw.ext.mul(r, ae))
                odd_one = (k + l) // d % 2 == 1 and pred.f_zero_count == 1
                return pred.kernel_size == got and not odd_one

            pairs = [(a, r) for a in range(1, 1 << k) for r in circle]
            if threads > 1:
                with ThreadPoolExecutor(max_workers=threads) as pool:
                    oks = list(pool.map(lambda p: cell(*p), pairs, chunksize=64))
            else:
                oks = [cell(a, r) for a, r in pairs]
            bad = len(oks) - sum(oks)
            t.check(bad == 0, f"Q kernel prediction k={k} l={l}: {bad} of {len(pairs)} pairs")
    return t.result()


# ------------------------------------------------------------------
# Criterion 9 (advisory): the truncated-proof multiset corollary
# ------------------------------------------------------------------

def check_multiset_corollary(max_k: int = 10) -> tuple[int, list[str]]:
    t = _Tally()
    for ctx in _fields(max_k):
        for l in _coprime_ls(ctx.k):
            lp = dobbertin.l_inverse(ctx, l)
            eps = lp & 1
            dom = f"T{ctx.k & 1}"
            qm = dobbertin.multiset_image(ctx, l, "q", dom, eps)
            vm = dobbertin.multiset_image(ctx, l, "V", "T0")
            t.check(qm == vm, f"multiset q^({eps})({dom}) != V(T0) k={ctx.k} l={l}")
            t.check(all(m == 3 for m in qm.values()),
                    f"q not 3-to-1 on {dom} k={ctx.k} l={l}")
            if ctx.k % 2 == 1:
                q0 = dobbertin.multiset_image(ctx, l, "q", "T0", 0)
                v1 = dobbertin.multiset_image(ctx, l, "V", "T1")
                t.check(q0 == v1, f"multiset q^(0)(T0) != V(T1) k={ctx.k} l={l}")
                t.check(all(m == 1 for m in q0.values()),
                        f"q^(0) not injective on T0 k={ctx.k} l={l}")
    return t.result()


# ------------------------------------------------------------------
# Suite registry for the CLI
# ------------------------------------------------------------------

SUITES = {
    "p-oracle": (check_p_oracle_equivalence, False),
    "p-distribution": (check_p_distribution, False),
    "gcd1": (check_gcd1_criterion, False),
    "closed-roots": (check_closed_form_roots, False),
    "cz-identities": (check_cz_identities, False),
    "dobbertin": (check_dobbertin, False),
    "f-family": (check_f_family, False),
    "q-family": (check_q_family, False),
    "multiset": (check_multiset_corollary, True),
}

# per-suite criterion ceilings; the CLI --max-k is clipped against these
SUITE_DEFAULT_MAX_K = {
    "p-oracle": 10,
    "p-distribution": 14,
    "gcd1": 12,
    "closed-roots": 14,
    "cz-identities": 12,
    "dobbertin": 12,
    "f-family": 10,
    "q-family": 6,
    "multiset": 10,
}


def run_suites(names=None, max_k: int | None = None, threads: int = 1,
               budget_s: float | None = None) -> dict:
    """Run the named suites (all by default) and report one entry per suite."""
    picked = list(SUITES) if not names else list(names)
    started = time.perf_counter()
    out = []
    all_ok = True
    truncated = False
    for name in picked:
        fn, advisory = SUITES[name]
        if budget_s is not None and time.perf_counter() - started > budget_s:
            truncated = True
            break
        cap = SUITE_DEFAULT_MAX_K[name] if max_k is None else min(max_k, SUITE_DEFAULT_MAX_K[name])
        t0 = time.perf_counter()
        kwargs = {"max_k": cap}
        if name in ("q-family", "p-distribution"):
            kwargs["threads"] = threads
        cases, failures = fn(**kwargs)
        ok = not failures
        if not ok and not advisory:
            all_ok = False
        out.append({
            "suite": name,
            "ok": ok,
            "advisory": advisory,
            "cases": cases,
            "failures": failures,
            "elapsed_ms": int((time.perf_counter() - t0) * 1000),
        })
    return {"ok": all_ok, "truncated": truncated, "suites": out}
