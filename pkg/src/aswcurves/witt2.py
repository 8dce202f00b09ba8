"""Length-2 Witt vectors over binary fields and their order-4 character.

A pair (a, b) of field elements adds and multiplies by

    (a, b) + (c, d) = (a + c, b + d + a*c)
    (a, b) * (c, d) = (a*c, a^2*d + c^2*b)

which over F_2 gives the ring Z/4 with (1, 0) as 1. The character xi
sends (1, 0) to the imaginary unit i, so characters and character sums
live in exact Gaussian integers; no floating point appears anywhere.

Down-to-earth consequences used constantly upstream: the length-2 trace
Tr(x, 0) of a pure first component has the explicit shape
(sum of conjugates, second elementary symmetric function of conjugates),
and the quadratic character Q(x) = xi(Tr(x, 0)) obeys
Q(x+y) = Q(x) Q(y) psi(xy) with psi the usual parity character.
"""

from __future__ import annotations

import re
from typing import Iterable

import numpy as np

from . import bitvec
from .errors import CtxMismatch, DegreeMismatch, NonRealCount, ParseError
from .gf2field import Element, FieldCtx, make_field


class GaussInt:
    """Exact Gaussian integer re + im*i."""

    __slots__ = ("re", "im")

    def __init__(self, re: int, im: int = 0):
        self.re = re
        self.im = im

    def __repr__(self) -> str:
        return f"GaussInt({self.re}, {self.im})"

    def __str__(self) -> str:
        return f"{self.re}{self.im:+d}i"

    def __eq__(self, other: object) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussInt(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussInt(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __neg__(self):
        return GaussInt(-self.re, -self.im)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers stay outside Z[i]")
        r, b = GaussInt(1), self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def conj(self) -> "GaussInt":
        return GaussInt(self.re, -self.im)

    def abs2(self) -> int:
        """Norm re^2 + im^2."""
        return self.re * self.re + self.im * self.im

    def as_int(self) -> int:
        """The integer value; NonRealCount if the imaginary part is nonzero."""
        if self.im != 0:
            raise NonRealCount(f"{self} is not a rational integer")
        return self.re


def _coerce(x) -> GaussInt:
    if isinstance(x, GaussInt):
        return x
    if isinstance(x, int):
        return GaussInt(x)
    if isinstance(x, GaussUnit):
        return x.gauss()
    return NotImplemented


_GAUSS_RE = re.compile(r"^\s*(-?\d+)\s*([+-]\s*\d+)\s*i\s*$")


def parse_gauss_int(text: str) -> GaussInt:
    """Parse the canonical "a+bi" form (also accepts bare integers)."""
    m = _GAUSS_RE.match(text)
    if m:
        return GaussInt(int(m.group(1)), int(m.group(2).replace(" ", "")))
    try:
        return GaussInt(int(text.strip()))
    except ValueError:
        raise ParseError(f"bad Gaussian integer {text!r}") from None


class GaussUnit:
    """A power of i, stored as the exponent mod 4."""

    __slots__ = ("k",)
    _NAMES = ("1", "i", "-1", "-i")

    def __init__(self, k: int):
        self.k = k & 3

    def __repr__(self) -> str:
        return f"GaussUnit({self.k})"

    def __str__(self) -> str:
        return self._NAMES[self.k]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GaussUnit):
            return self.k == other.k
        if isinstance(other, (GaussInt, int)):
            return self.gauss() == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.gauss())

    def __mul__(self, other):
        if isinstance(other, GaussUnit):
            return GaussUnit(self.k + other.k)
        return self.gauss() * other

    __rmul__ = __mul__

    def __neg__(self) -> "GaussUnit":
        return GaussUnit(self.k + 2)

    def inv(self) -> "GaussUnit":
        return GaussUnit(-self.k)

    def __pow__(self, e: int) -> "GaussUnit":
        return GaussUnit(self.k * (e & 3))

    def gauss(self) -> GaussInt:
        return (GaussInt(1), GaussInt(0, 1), GaussInt(-1), GaussInt(0, -1))[self.k]

    @classmethod
    def parse(cls, text: str) -> "GaussUnit":
        t = text.strip()
        if t not in cls._NAMES:
            raise ParseError(f"bad Gaussian unit {text!r}")
        return cls(cls._NAMES.index(t))


ONE = GaussUnit(0)
I_UNIT = GaussUnit(1)
MINUS_ONE = GaussUnit(2)


# ---------------------------------------------------------------------------


class WittPair:
    """Length-2 Witt vector over a field context."""

    __slots__ = ("ctx", "a", "b")

    def __init__(self, ctx: FieldCtx, a: Element, b: Element):
        self.ctx = ctx
        self.a = ctx.check(a)
        self.b = ctx.check(b)

    def __repr__(self) -> str:
        return f"WittPair({self.a:#x}, {self.b:#x})"

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, WittPair)
            and self.ctx == other.ctx
            and (self.a, self.b) == (other.a, other.b)
        )

    def __hash__(self) -> int:
        return hash((self.ctx, self.a, self.b))

    def _peer(self, other: "WittPair") -> None:
        if not isinstance(other, WittPair):
            raise TypeError("expected a WittPair")
        if self.ctx != other.ctx:
            raise CtxMismatch("Witt pairs over different contexts")

    def __add__(self, other: "WittPair") -> "WittPair":
        self._peer(other)
        K = self.ctx
        return WittPair(
            K, self.a ^ other.a, self.b ^ other.b ^ K.mul(self.a, other.a)
        )

    def __neg__(self) -> "WittPair":
        return WittPair(self.ctx, self.a, self.b ^ self.ctx.sqr(self.a))

    def __sub__(self, other: "WittPair") -> "WittPair":
        return self + (-other)

    def __mul__(self, other: "WittPair") -> "WittPair":
        self._peer(other)
        K = self.ctx
        return WittPair(
            K,
            K.mul(self.a, other.a),
            K.mul(K.sqr(self.a), other.b) ^ K.mul(K.sqr(other.a), self.b),
        )

    def frob(self, j: int) -> "WittPair":
        """Componentwise 2-power Frobenius."""
        K = self.ctx
        return WittPair(K, K.frob(self.a, j), K.frob(self.b, j))


def witt_zero(ctx: FieldCtx) -> WittPair:
    return WittPair(ctx, 0, 0)


def witt_sum(pairs: Iterable[WittPair], ctx: FieldCtx) -> WittPair:
    acc = witt_zero(ctx)
    for x in pairs:
        acc = acc + x
    return acc


def witt_trace(x: WittPair, from_deg: int, to_deg: int) -> WittPair:
    """Witt-vector trace from the degree-from_deg subfield down to to_deg."""
    K = x.ctx
    if from_deg % to_deg or K.n % from_deg:
        raise DegreeMismatch(f"need {to_deg} | {from_deg} | {K.n} for a trace")
    if not (K.in_subfield(x.a, from_deg) and K.in_subfield(x.b, from_deg)):
        raise DegreeMismatch("components outside the source subfield")
    acc = witt_zero(K)
    y = x
    for _ in range(from_deg // to_deg):
        acc = acc + y
        y = y.frob(to_deg)
    assert K.in_subfield(acc.a, to_deg) and K.in_subfield(acc.b, to_deg)
    return acc


# ---------------------------------------------------------------------------
# Characters. All of them take the working-subfield degree explicitly, so
# one ambient context serves every subfield level.


def xi2(pair: WittPair) -> GaussUnit:
    """The order-4 character on length-2 Witt vectors over F_2."""
    if not (pair.a in (0, 1) and pair.b in (0, 1)):
        raise DegreeMismatch("xi2 needs components in F_2")
    return GaussUnit(pair.a + 2 * pair.b)


def xi_q(pair: WittPair, deg: int) -> GaussUnit:
    """xi composed with the Witt trace from the degree-deg subfield."""
    return xi2(witt_trace(pair, deg, 1))


def q_char(ctx: FieldCtx, x: Element, deg: int) -> GaussUnit:
    """The quadratic character Q(x) = xi(Tr(x, 0)); values are 4th roots."""
    return xi_q(WittPair(ctx, x, 0), deg)


def psi_char(ctx: FieldCtx, x: Element, deg: int) -> GaussUnit:
    """The parity character psi(x) = (-1)^Tr(x) = xi(Tr(0, x))."""
    return GaussUnit(2 * ctx.trace(x, deg, 1))


def bq_char(ctx: FieldCtx, x: Element, y: Element, deg: int) -> GaussUnit:
    """The bilinear defect of Q: B(x, y) = Q(x+y)/Q(x)Q(y) = psi(x*y)."""
    return psi_char(ctx, ctx.mul(x, y), deg)


def q_exponent_table(deg: int) -> np.ndarray:
    """i-exponents of Q over all of F_{2^deg}, as a uint8 array.

    Index j is the exponent of Q at the element with bit pattern j in
    the dedicated degree-deg context. Computed by the explicit shape of
    the length-2 trace: first component is the field trace, second the
    second elementary symmetric function of the Frobenius conjugates.
    """
    K = make_field(deg)
    x = bitvec.arange_field(K)
    conj = x.copy()
    s = np.zeros_like(x)  # running sum of conjugates
    e2 = np.zeros_like(x)  # running second symmetric function
    for _ in range(deg):
        e2 ^= bitvec.field_mul(K, s, conj)
        s ^= conj
        conj = bitvec.field_mul(K, conj, conj)
    assert int((s | e2).max()) <= 1  # both land in F_2
    return (s + 2 * e2).astype(np.uint8)


def hd_sum(deg: int) -> GaussInt:
    """Minus the full-field sum of Q over F_{2^deg}, exactly.

    Equals (-1-i)^deg; the closed form is checked against this sum in the
    acceptance suite rather than assumed here.
    """
    counts = np.bincount(q_exponent_table(deg), minlength=4)
    total = GaussInt(int(counts[0]) - int(counts[2]), int(counts[1]) - int(counts[3]))
    return -total
