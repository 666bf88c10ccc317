"""The quadratic extension tower GF(2^k) -> GF(2^2k) with an explicit embedding.

The extension field is built independently with its own smallest irreducible
modulus; the embedding sends the base generator class-of-x to the smallest
(by bit pattern) root of the base modulus inside the extension, which makes
it deterministic.
"""

from __future__ import annotations

import math

from .field import FieldCtx, linearized_solutions, make_field


class ExtContext:
    """Base field GF(2^k), extension GF(2^2k), and the ring embedding between them."""

    __slots__ = ("base", "ext", "_rho_pows")

    def __init__(self, base: FieldCtx, ext: FieldCtx | None = None):
        if ext is None:
            ext = make_field(2 * base.k)
        assert ext.k == 2 * base.k, "extension degree must be 2k"
        self.base = base
        self.ext = ext
        rho = self._smallest_modulus_root()
        pows = [1]
        for _ in range(base.k - 1):
            pows.append(ext.mul(pows[-1], rho))
        self._rho_pows = pows

    def _subfield_copy(self) -> list[int]:
        """The unique GF(2^k) subfield of the extension, i.e. fixed points of frob k."""
        ext = self.ext
        k = self.base.k
        tabs = ext.tables
        if tabs is not None:
            exp, _ = tabs
            step = (ext.order - 1) // ((1 << k) - 1)
            return [0] + [exp[j * step] for j in range((1 << k) - 1)]
        return linearized_solutions(ext, [(1, k), (1, 0)], 0)

    def _smallest_modulus_root(self) -> int:
        ext = self.ext
        mod = self.base.modulus
        roots = []
        for y in self._subfield_copy():
            acc = 0
            for i in range(mod.bit_length() - 1, -1, -1):
                acc = ext.mul(acc, y) ^ ((mod >> i) & 1)
            if acc == 0:
                roots.append(y)
        assert len(roots) == self.base.k, "base modulus must split in the extension"
        return min(roots)

    def embed(self, x: int) -> int:
        """Image of a base-field element in the extension (injective ring map)."""
        v = 0
        i = 0
        while x:
            if x & 1:
                v ^= self._rho_pows[i]
            x >>= 1
            i += 1
        return v

    def d1(self, l: int) -> int:
        """gcd(k+l, 2k), the subfield degree governing the extension criteria."""
        return math.gcd(self.base.k + l, 2 * self.base.k)
