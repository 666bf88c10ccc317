"""Arithmetic in GF(2^k) for 2 <= k <= 32, with elements as plain ints.

Bit i of an element is the coefficient of x^i in the polynomial basis, so
addition is XOR and the ints 0 and 1 are the field's zero and one.  A
FieldCtx carries the irreducible modulus and, for k <= 20, lazily built
discrete-log/antilog tables; multiplication falls back to shift-and-reduce
above that (both paths are exposed and tested against each other).

A FieldCtx is immutable after construction (the table cache fills in at
most once) and safe to share between threads; every operation is a pure
function of (context, inputs).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    DegreeMismatch,
    DivisionByZero,
    NotASubfield,
    NotIrreducible,
    OddDegreeRequired,
)

TABLE_MAX_K = 20

__all__ = [
    "TABLE_MAX_K",
    "FieldCtx",
    "RootSet",
    "make_field",
    "is_irreducible",
    "smallest_irreducible",
    "linearized_columns",
    "solve_gf2",
    "linearized_solutions",
    "solve_artin_schreier",
    "artin_schreier_shortcut",
    "half_trace",
    "fe_to_hex",
    "fe_from_hex",
]


# ------------------------------------------------------------------
# GF(2)[x] helpers on int bit patterns (bit i = coefficient of x^i)
# ------------------------------------------------------------------

def _poly_mul(a: int, b: int) -> int:
    """Carryless product of two GF(2) polynomials."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def _poly_mod(p: int, m: int) -> int:
    """Remainder of p modulo m over GF(2)."""
    dm = m.bit_length()
    dp = p.bit_length()
    while dp >= dm:
        p ^= m << (dp - dm)
        dp = p.bit_length()
    return p


def _poly_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _poly_mod(a, b)
    return a


def _poly_sqr_mod(p: int, m: int) -> int:
    """Square a GF(2) polynomial (spread its bits) and reduce modulo m."""
    r = 0
    i = 0
    while p:
        if p & 1:
            r |= 1 << (2 * i)
        p >>= 1
        i += 1
    return _poly_mod(r, m)


def _x_pow_pow2_mod(e: int, m: int) -> int:
    """x^(2^e) modulo m over GF(2)."""
    t = 0b10
    for _ in range(e):
        t = _poly_sqr_mod(t, m)
    return t


def _poly_invmod(p: int, m: int) -> int:
    """Inverse of p modulo the irreducible m, by the extended Euclid."""
    t0, t1 = 0, 1
    r0, r1 = m, p
    while r1:
        shift = r0.bit_length() - r1.bit_length()
        if shift < 0:
            r0, r1 = r1, r0
            t0, t1 = t1, t0
            continue
        r0 ^= r1 << shift
        t0 ^= t1 << shift
    assert r0 == 1, "modulus not irreducible or p == 0"
    return t0


def _prime_factors(n: int) -> list[int]:
    """Distinct prime factors by trial division (n < 2^64 scale)."""
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out.append(n)
    return out


def is_irreducible(m: int) -> bool:
    """Rabin irreducibility test for a GF(2) polynomial of degree >= 1."""
    k = m.bit_length() - 1
    if k <= 0:
        return False
    if k == 1:
        return True
    if not m & 1:
        return False  # divisible by x
    if _x_pow_pow2_mod(k, m) != 0b10:
        return False
    for p in _prime_factors(k):
        if _poly_gcd(_x_pow_pow2_mod(k // p, m) ^ 0b10, m) != 1:
            return False
    return True


def smallest_irreducible(k: int) -> int:
    """Lexicographically smallest (as a bit pattern) irreducible of degree k."""
    for m in range((1 << k) + 1, 1 << (k + 1), 2):
        if is_irreducible(m):
            return m
    raise AssertionError("unreachable: irreducible polynomials exist for every degree")


# ------------------------------------------------------------------
# Field context
# ------------------------------------------------------------------

class FieldCtx:
    """GF(2^k) given by an irreducible modulus; elements are ints in [0, 2^k)."""

    __slots__ = ("k", "modulus", "order", "_exp", "_log", "_gen")

    def __init__(self, k: int, modulus: int | None = None):
        if not 2 <= k <= 32:
            raise DegreeMismatch(f"k must be in [2, 32], got {k}")
        if modulus is None:
            modulus = smallest_irreducible(k)
        else:
            if modulus.bit_length() - 1 != k:
                raise DegreeMismatch(
                    f"modulus {modulus:#x} has degree {modulus.bit_length() - 1}, expected {k}"
                )
            if not is_irreducible(modulus):
                raise NotIrreducible(f"modulus {modulus:#x} is reducible over GF(2)")
        self.k = k
        self.modulus = modulus
        self.order = 1 << k
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._gen: int | None = None

    # -------------------------------------------------- construction

    @classmethod
    def from_spec(cls, spec: str) -> "FieldCtx":
        """Parse a field spec string "k=<int>[,poly=0x<hex>]"."""
        k = None
        poly = None
        for part in spec.split(","):
            key, _, val = part.strip().partition("=")
            if key == "k":
                k = int(val)
            elif key == "poly":
                poly = int(val, 16)
            else:
                raise ValueError(f"unknown field spec key {key!r}")
        if k is None:
            raise ValueError("field spec must contain k=<int>")
        return cls(k, poly)

    @property
    def spec(self) -> str:
        return f"k={self.k},poly={self.modulus:#x}"

    def __repr__(self) -> str:
        return f"FieldCtx({self.spec})"

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldCtx) and self.modulus == other.modulus

    def __hash__(self) -> int:
        return hash(("FieldCtx", self.modulus))

    # -------------------------------------------------- tables

    @property
    def generator(self) -> int:
        """Smallest primitive element (by bit pattern), found by order testing."""
        if self._gen is None:
            m = self.order - 1
            primes = _prime_factors(m)
            g = 2
            while True:
                if all(self.pow_raw(g, m // p) != 1 for p in primes):
                    break
                g += 1
            self._gen = g
        return self._gen

    def _build_tables(self) -> None:
        m = self.order - 1
        g = self.generator
        exp = [0] * m
        log = [0] * self.order
        v = 1
        for i in range(m):
            exp[i] = v
            log[v] = i
            v = self.mul_raw(v, g)
        assert v == 1
        # _log before _exp: readers key off _exp, so a concurrent first build
        # never observes tables half-assigned
        self._log = log
        self._exp = exp

    @property
    def tables(self) -> tuple[list[int], list[int]] | None:
        """(exp, log) discrete-log tables, or None for k > TABLE_MAX_K.

        exp[i] = g^i for 0 <= i < 2^k - 1 and log[exp[i]] = i, with g the
        smallest primitive element; antilog/log round-trip for every x != 0.
        """
        if self._exp is None:
            if self.k > TABLE_MAX_K:
                return None
            self._build_tables()
        return self._exp, self._log

    # -------------------------------------------------- core arithmetic

    @staticmethod
    def add(a: int, b: int) -> int:
        return a ^ b

    def mul_raw(self, a: int, b: int) -> int:
        """Shift-and-reduce product; works for every k, never touches tables."""
        r = 0
        mod = self.modulus
        top = self.order
        while b:
            if b & 1:
                r ^= a
            a <<= 1
            if a & top:
                a ^= mod
            b >>= 1
        return r

    def mul(self, a: int, b: int) -> int:
        if self._exp is None:
            if self.k > TABLE_MAX_K:
                return self.mul_raw(a, b)
            self._build_tables()
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]

    def sqr(self, a: int) -> int:
        return self.mul(a, a)

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inv(0)")
        if self._exp is None and self.k <= TABLE_MAX_K:
            self._build_tables()
        if self._exp is not None:
            m = self.order - 1
            return self._exp[(m - self._log[a]) % m]
        return _poly_invmod(a, self.modulus)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow_raw(self, a: int, e: int) -> int:
        """Square-and-multiply power with e >= 0, never touching tables."""
        r = 1
        while e:
            if e & 1:
                r = self.mul_raw(r, a)
            a = self.mul_raw(a, a)
            e >>= 1
        return r

    def pow(self, a: int, e: int) -> int:
        """a^e; the exponent is reduced modulo 2^k - 1 for nonzero a."""
        if a == 0:
            if e < 0:
                raise DivisionByZero("0 raised to a negative power")
            return 1 if e == 0 else 0
        m = self.order - 1
        e %= m
        if self._exp is None and self.k <= TABLE_MAX_K:
            self._build_tables()
        if self._exp is not None:
            return self._exp[(self._log[a] * e) % m]
        return self.pow_raw(a, e)

    def frob(self, a: int, j: int) -> int:
        """a^(2^j), the j-fold Frobenius; j is taken modulo k."""
        j %= self.k
        if a == 0 or j == 0:
            return a
        if self._exp is None and self.k <= TABLE_MAX_K:
            self._build_tables()
        if self._exp is not None:
            m = self.order - 1
            return self._exp[(self._log[a] << j) % m]
        for _ in range(j):
            a = self.mul_raw(a, a)
        return a

    def sqrt(self, a: int) -> int:
        """The unique square root, a^(2^(k-1))."""
        return self.frob(a, self.k - 1)

    # -------------------------------------------------- trace / norm

    def _check_subfield_degree(self, d: int) -> None:
        if d < 1 or self.k % d != 0:
            raise NotASubfield(f"GF(2^{d}) is not a subfield of GF(2^{self.k})")

    def trace(self, a: int, d: int = 1) -> int:
        """Tr_d^k(a) = sum of a^(2^(i*d)) over i < k/d; lands in GF(2^d)."""
        self._check_subfield_degree(d)
        t = 0
        cur = a
        for _ in range(self.k // d):
            t ^= cur
            cur = self.frob(cur, d)
        return t

    def norm(self, a: int, d: int = 1) -> int:
        """N_d^k(a) = product of a^(2^(i*d)) over i < k/d; lands in GF(2^d)."""
        self._check_subfield_degree(d)
        t = 1
        cur = a
        for _ in range(self.k // d):
            t = self.mul(t, cur)
            cur = self.frob(cur, d)
        return t

    def abs_trace(self, a: int, d: int) -> int:
        """Absolute trace Tr_1^d of an element a already lying in GF(2^d).

        Returns 0 or 1.  The caller guarantees a in GF(2^d); the sum of the
        first d Frobenius images then equals the GF(2^d) trace of a.
        """
        t = 0
        cur = a
        for _ in range(d):
            t ^= cur
            cur = self.frob(cur, 1)
        return t

    def in_subfield(self, a: int, d: int) -> bool:
        """Membership test a in GF(2^d), i.e. a^(2^d) = a."""
        self._check_subfield_degree(d)
        return self.frob(a, d) == a

    def subfield_elements(self, d: int) -> list[int]:
        """All 2^d elements of the subfield GF(2^d), sorted."""
        self._check_subfield_degree(d)
        tabs = self.tables
        if tabs is not None and d < self.k:
            exp, _ = tabs
            step = (self.order - 1) // ((1 << d) - 1)
            out = [0] + [exp[j * step] for j in range((1 << d) - 1)]
            return sorted(out)
        return [x for x in self.elements() if self.frob(x, d) == x]

    # -------------------------------------------------- enumeration / IO

    def elements(self) -> range:
        """All 2^k elements in bit order; restartable and sliceable."""
        return range(self.order)

    def parse_element(self, s: str) -> int:
        x = int(s, 16)
        if not 0 <= x < self.order:
            raise ValueError(f"element {s} out of range for GF(2^{self.k})")
        return x


def make_field(k: int, modulus: int | None = None) -> FieldCtx:
    """Build GF(2^k); with no modulus the lexicographically smallest is used."""
    return FieldCtx(k, modulus)


def fe_to_hex(x: int) -> str:
    return f"{x:#x}"


def fe_from_hex(s: str) -> int:
    return int(s, 16)


@dataclass(frozen=True)
class SubfieldParams:
    """The pair d = gcd(l, k), n = k/d attached to an exponent parameter l."""

    d: int
    n: int

    def __post_init__(self):
        assert self.d >= 1 and self.n >= 1

    @classmethod
    def for_exponent(cls, ctx: FieldCtx, l: int) -> "SubfieldParams":
        d = math.gcd(l, ctx.k)
        return cls(d=d, n=ctx.k // d)


# ------------------------------------------------------------------
# Root sets
# ------------------------------------------------------------------

@dataclass(frozen=True)
class RootSet:
    """Exact, duplicate-free, sorted roots plus how they were obtained."""

    roots: tuple[int, ...]
    provenance: str  # "closed-form" | "linear-algebra" | "oracle"

    @classmethod
    def make(cls, xs, provenance: str) -> "RootSet":
        return cls(tuple(sorted(set(xs))), provenance)

    def __iter__(self):
        return iter(self.roots)

    def __len__(self) -> int:
        return len(self.roots)

    def __contains__(self, x: int) -> bool:
        return x in self.roots


# ------------------------------------------------------------------
# GF(2)-linear algebra for linearized polynomials
# ------------------------------------------------------------------

def linearized_columns(ctx: FieldCtx, terms) -> list[int]:
    """Matrix columns (as ints) of x -> sum coef * x^(2^e) in the polynomial basis.

    terms is an iterable of (coef, e) pairs.
    """
    cols = []
    for i in range(ctx.k):
        b = 1 << i
        v = 0
        for coef, e in terms:
            v ^= ctx.mul(coef, ctx.frob(b, e))
        cols.append(v)
    return cols


def solve_gf2(columns: list[int], rhs: int, dim: int):
    """Solve sum_i x_i * columns[i] = rhs over GF(2).

    Vectors are ints (bit t = coordinate t, t < dim).  Returns (particular,
    kernel_basis); particular is None when the system is inconsistent, and
    kernel_basis is a list of ints over the x-coordinates.
    """
    n = len(columns)
    rows = []
    for t in range(dim):
        r = 0
        for i in range(n):
            r |= ((columns[i] >> t) & 1) << i
        r |= ((rhs >> t) & 1) << n
        rows.append(r)

    pivots: dict[int, int] = {}
    ri = 0
    for col in range(n):
        piv = None
        for j in range(ri, dim):
            if (rows[j] >> col) & 1:
                piv = j
                break
        if piv is None:
            continue
        rows[ri], rows[piv] = rows[piv], rows[ri]
        for j in range(dim):
            if j != ri and ((rows[j] >> col) & 1):
                rows[j] ^= rows[ri]
        pivots[col] = ri
        ri += 1

    for j in range(ri, dim):
        if rows[j]:
            return None, _kernel_basis(rows, pivots, n)
    part = 0
    for col, r in pivots.items():
        if (rows[r] >> n) & 1:
            part |= 1 << col
    return part, _kernel_basis(rows, pivots, n)


def _kernel_basis(rows, pivots, n):
    basis = []
    for free in range(n):
        if free in pivots:
            continue
        v = 1 << free
        for col, r in pivots.items():
            if (rows[r] >> free) & 1:
                v |= 1 << col
        basis.append(v)
    return basis


def linearized_solutions(ctx: FieldCtx, terms, rhs: int) -> list[int]:
    """All x with sum coef * x^(2^e) = rhs, by Gaussian elimination over GF(2).

    Solution coordinates are polynomial-basis coefficients, so they already
    are field elements.  Returns a sorted list, empty when inconsistent.
    """
    part, basis = solve_gf2(linearized_columns(ctx, terms), rhs, ctx.k)
    if part is None:
        return []
    sols = [part]
    for b in basis:
        sols += [s ^ b for s in sols]
    return sorted(sols)


def solve_artin_schreier(ctx: FieldCtx, u: int, l: int) -> RootSet:
    """All x in GF(2^k) with x^(2^l) + x = u.

    Empty exactly when Tr_d^k(u) != 0 with d = gcd(l, k); otherwise the 2^d
    solutions form a coset of GF(2^d).  Solved as a k x k GF(2)-linear
    system; when k/d is odd the summation shortcut is cross-checked.
    """
    if not 0 <= l < ctx.k:
        raise ValueError(f"l must satisfy 0 <= l < k, got l={l}")
    sols = linearized_solutions(ctx, [(1, l), (1, 0)], u)
    if sols and l:
        d = math.gcd(l, ctx.k)
        if (ctx.k // d) % 2 == 1:
            s = artin_schreier_shortcut(ctx, u, l)
            assert s in sols, "summation shortcut disagrees with linear algebra"
    return RootSet.make(sols, "linear-algebra")


def artin_schreier_shortcut(ctx: FieldCtx, u: int, l: int) -> int:
    """Summation solution sum u^(2^(2*i*l)), i <= (n-1)/2, valid for n = k/gcd(l,k) odd.

    Satisfies s^(2^l) + s = u + Tr_d^k(u); a genuine solution when the trace
    vanishes.
    """
    n = ctx.k // math.gcd(l, ctx.k)
    assert n % 2 == 1, "shortcut requires k/gcd(l,k) odd"
    s = 0
    for i in range((n - 1) // 2 + 1):
        s ^= ctx.frob(u, (2 * i * l) % ctx.k)
    return s


def half_trace(ctx: FieldCtx, u: int) -> int:
    """Half-trace sum u^(2^(2i)), i <= (k-1)/2, for odd k.

    The result w satisfies w^2 + w = u + Tr_k(u); if Tr_k(u) = 0 then
    w^2 + w = u exactly.
    """
    if ctx.k % 2 == 0:
        raise OddDegreeRequired(f"half-trace needs odd k, got k={ctx.k}")
    w = 0
    for i in range((ctx.k - 1) // 2 + 1):
        w ^= ctx.frob(u, (2 * i) % ctx.k)
    return w
