"""Exception types raised by the library."""


class Gf2TriError(Exception):
    """Base class for all errors raised by gf2tri."""


class NotIrreducible(Gf2TriError):
    """A supplied field modulus is reducible over GF(2)."""


class DegreeMismatch(Gf2TriError):
    """A polynomial or extension degree is outside the supported range."""


class DivisionByZero(Gf2TriError, ZeroDivisionError):
    """Inversion (or a negative power) of the zero element."""


class NotASubfield(Gf2TriError):
    """GF(2^d) is not a subfield of GF(2^k), i.e. d does not divide k."""


class OddDegreeRequired(Gf2TriError):
    """The half-trace shortcut only exists for odd extension degree."""


class RangeError(Gf2TriError, ValueError):
    """A sequence index is outside its defined range."""


class NotCoprime(Gf2TriError):
    """An operation requires gcd(l, k) = 1."""


class ZeroInput(Gf2TriError):
    """a = 0 is outside the stated domain of this criterion."""


class InSubfield(Gf2TriError):
    """The V-map is undefined on elements of the subfield GF(2^d)."""


class BadRootOfUnity(Gf2TriError):
    """delta is not a (2^d+1)-th root of unity."""


class BadUnitCircle(Gf2TriError):
    """r does not satisfy r^(2^k+1) = 1."""


class BadConstant(Gf2TriError):
    """The affine constant c must lie in the subfield GF(2^d)."""


class NoRoots(Gf2TriError):
    """A character sum was requested for a case with too few roots."""


class CapExceeded(Gf2TriError):
    """An exhaustive scan would exceed the configured size cap."""
