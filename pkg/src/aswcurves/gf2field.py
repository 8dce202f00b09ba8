"""Arithmetic in ambient binary fields F_{2^N} with marked subfields.

All field elements are plain Python ints holding the bit pattern of a
polynomial residue: bit i is the coefficient of x^i, so 0 and 1 are the
additive and multiplicative identities of every field and addition is
xor. A FieldCtx fixes the ambient degree N (<= 32), the defining
polynomial, and p_log, the log2 of the semilinear base field
F_p = F_{2^p_log}; the context is passed around explicitly alongside the
raw ints rather than wrapping every element in an object.

Defining polynomials come from a frozen table: for each degree N the
modulus is the least bit pattern with constant term 1 that is
irreducible over F_2. That makes contexts reproducible from scratch
(F_4 uses 0b111, F_16 uses 0x13, and so on) and keeps x invertible in
the quotient.

F_2-linear algebra on bit-pattern vectors (canonical reduced bases,
kernels, lexicographically least solutions) lives here too, since
F_p-subspaces of the field are the main currency of the higher layers.
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .errors import (
    AmbientTooSmall,
    CtxMismatch,
    DegreeMismatch,
    NoSolution,
    ParseError,
    ReduciblePolynomial,
)

# Elements are bare ints; the alias only documents intent in signatures.
Element = int

MAX_DEGREE = 32


def _check_field_degree(n: int) -> None:
    if n > MAX_DEGREE:
        raise AmbientTooSmall(f"field degree {n} exceeds the ambient cap {MAX_DEGREE}")
    if n < 1:
        raise DegreeMismatch(f"field degree {n} must be >= 1")


# ---------------------------------------------------------------------------
# GF(2)[x] on int bit patterns (no field object needed).


def clmul(a: int, b: int) -> int:
    """Carry-less product of two GF(2)[x] bit patterns."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def clmod(a: int, m: int) -> int:
    """Remainder of a modulo m in GF(2)[x]."""
    mn = m.bit_length()
    while a.bit_length() >= mn:
        a ^= m << (a.bit_length() - mn)
    return a


def clgcd(a: int, b: int) -> int:
    """GCD of two GF(2)[x] bit patterns."""
    while b:
        a, b = b, clmod(a, b)
    return a


def _clpowmod_x(e: int, m: int) -> int:
    """x^(2^e) modulo m in GF(2)[x], by repeated squaring."""
    r = 2  # the polynomial x
    for _ in range(e):
        r = clmod(clmul(r, r), m)
    return r


def poly_is_irreducible(f: int) -> bool:
    """Test irreducibility of f over F_2 (Rabin's test on bit patterns)."""
    n = f.bit_length() - 1
    if n <= 0:
        return False
    if _clpowmod_x(n, f) != clmod(2, f):  # x^(2^n) == x mod f
        return False
    for ell in _prime_divisors(n):
        if clgcd(_clpowmod_x(n // ell, f) ^ 2, f) != 1:
            return False
    return True


def _prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@lru_cache(maxsize=None)
def default_modulus(n: int) -> int:
    """Least irreducible degree-n bit pattern with constant term 1."""
    _check_field_degree(n)
    f = (1 << n) | 1
    while not poly_is_irreducible(f):
        f += 2  # keep the constant term
    return f


# ---------------------------------------------------------------------------
# F_2-linear algebra on bit-pattern vectors.
#
# A linear map F_2^nbits -> F_2^m is given by the list of images of the
# unit vectors: images[j] is where bit j goes. A subspace is a tuple of
# basis vectors in canonical reduced form: distinct leading bits, each
# leading bit cleared in all the other vectors, sorted by decreasing
# leading bit. That form is unique per subspace, which the higher layers
# rely on for deterministic tie-breaking.


def rref_basis(vectors: Iterable[int]) -> tuple[int, ...]:
    """Canonical reduced basis of the span of the given bit vectors."""
    # invariant: each pivot bit occurs in exactly one stored vector, so a
    # single pass of xors fully reduces any incoming vector
    pivots: dict[int, int] = {}
    for v in vectors:
        for b, w in pivots.items():
            if (v >> b) & 1:
                v ^= w
        if v:
            b = v.bit_length() - 1
            for b2, w in pivots.items():
                if (w >> b) & 1:
                    pivots[b2] = w ^ v
            pivots[b] = v
    return tuple(sorted(pivots.values(), reverse=True))


def reduce_vector(basis: Sequence[int], v: int) -> int:
    """Reduce v by a canonical basis; 0 means v is in the span."""
    for w in basis:
        if (v >> (w.bit_length() - 1)) & 1:
            v ^= w
    return v


def span_contains(basis: Sequence[int], v: int) -> bool:
    """Whether v lies in the span of a canonical basis."""
    return reduce_vector(basis, v) == 0


def span_elements(basis: Sequence[int]) -> list[int]:
    """All elements of the span, ascending (2^len(basis) of them)."""
    out = [0]
    for w in basis:
        out += [x ^ w for x in out]
    out.sort()
    return out


class _Eliminator:
    """Shared Gaussian elimination for kernel/solve over F_2."""

    def __init__(self, images: Sequence[int], nbits: int):
        self.pivots: dict[int, tuple[int, int]] = {}
        kernel = []
        for j in range(nbits):
            img, ind = images[j], 1 << j
            while img:
                b = img.bit_length() - 1
                if b not in self.pivots:
                    self.pivots[b] = (img, ind)
                    break
                pimg, pind = self.pivots[b]
                img ^= pimg
                ind ^= pind
            else:
                kernel.append(ind)
        self.kernel = rref_basis(kernel)

    def solve(self, target: int) -> int:
        sol = 0
        while target:
            b = target.bit_length() - 1
            if b not in self.pivots:
                raise NoSolution(f"target bit {b} outside the image")
            img, ind = self.pivots[b]
            target ^= img
            sol ^= ind
        for w in self.kernel:  # lexicographically least in the coset
            if (sol >> (w.bit_length() - 1)) & 1:
                sol ^= w
        return sol


def kernel_basis(images: Sequence[int], nbits: int) -> tuple[int, ...]:
    """Canonical basis of the kernel of the map bit j -> images[j]."""
    return _Eliminator(images, nbits).kernel


def solve_linear_f2(images: Sequence[int], nbits: int, target: int) -> int:
    """Lexicographically least x with map(x) == target, else NoSolution."""
    return _Eliminator(images, nbits).solve(target)


def intersect_spans(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """Canonical basis of span(a) & span(b) (Zassenhaus on bit pairs)."""
    nbits = 0
    for v in (*a, *b):
        nbits = max(nbits, v.bit_length())
    shift = nbits
    rows = [(v << shift) | v for v in a] + [(v << shift) for v in b]
    mask = (1 << shift) - 1
    pivots: dict[int, int] = {}
    for v in rows:
        while v:
            b2 = v.bit_length() - 1
            if b2 not in pivots:
                pivots[b2] = v
                break
            v ^= pivots[b2]
    # rows whose top half is zero carry intersection vectors in the low half
    inter = [v & mask for v in pivots.values() if (v >> shift) == 0]
    return rref_basis(inter)


# ---------------------------------------------------------------------------


class FieldCtx:
    """Ambient field F_{2^n} with a marked semilinear base F_{2^p_log}.

    Elements are ints in range(2^n). All methods take and return those
    ints; nothing here allocates wrappers. Instances are immutable and
    hash/compare by (n, poly, p_log).
    """

    __slots__ = ("n", "poly", "p_log", "_sub_basis", "_sub_elems", "_sub_gen")

    def __init__(self, n: int, poly: int | None = None, p_log: int = 1):
        _check_field_degree(n)
        if poly is None:
            poly = default_modulus(n)
        if poly.bit_length() - 1 != n:
            raise DegreeMismatch(f"modulus degree {poly.bit_length() - 1} != {n}")
        if not poly_is_irreducible(poly):
            raise ReduciblePolynomial(f"modulus {poly:#x} is reducible")
        if p_log < 1 or n % p_log != 0:
            raise DegreeMismatch(f"p_log {p_log} must divide the degree {n}")
        self.n = n
        self.poly = poly
        self.p_log = p_log
        self._sub_basis: dict[int, tuple[int, ...]] = {}
        self._sub_elems: dict[int, list[int]] = {}
        self._sub_gen: dict[int, int] = {}

    # -- identity ----------------------------------------------------------

    def __repr__(self) -> str:
        return f"FieldCtx(n={self.n}, poly={self.poly:#x}, p_log={self.p_log})"

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FieldCtx)
            and (self.n, self.poly, self.p_log) == (other.n, other.poly, other.p_log)
        )

    def __hash__(self) -> int:
        return hash((self.n, self.poly, self.p_log))

    @property
    def order(self) -> int:
        return 1 << self.n

    @property
    def p(self) -> int:
        """The semilinear base field order 2^p_log."""
        return 1 << self.p_log

    def check(self, a: Element) -> Element:
        """Validate that a is a legal bit pattern for this field."""
        if not 0 <= a < (1 << self.n):
            raise CtxMismatch(f"{a:#x} is not an element of F_{{2^{self.n}}}")
        return a

    # -- ring operations ----------------------------------------------------

    def mul(self, a: Element, b: Element) -> Element:
        r = 0
        while b:
            if b & 1:
                r ^= a
            a <<= 1
            b >>= 1
        n, poly = self.n, self.poly
        while r.bit_length() > n:
            r ^= poly << (r.bit_length() - 1 - n)
        return r

    def sqr(self, a: Element) -> Element:
        return self.mul(a, a)

    def pow(self, a: Element, e: int) -> Element:
        if e < 0:
            a, e = self.inv(a), -e
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def inv(self, a: Element) -> Element:
        if a == 0:
            raise ZeroDivisionError("inverting 0")
        return self.pow(a, (1 << self.n) - 2)

    def sqrt(self, a: Element) -> Element:
        """The unique square root (Frobenius is bijective)."""
        return self.frob(a, self.n - 1)

    def frob(self, a: Element, j: int) -> Element:
        """a^(2^j) for any integer j; negative j inverts Frobenius."""
        for _ in range(j % self.n):
            a = self.mul(a, a)
        return a

    def frob_p(self, a: Element, i: int) -> Element:
        """a^(p^i) for any integer i, p = 2^p_log."""
        return self.frob(a, i * self.p_log)

    # -- subfields and traces ------------------------------------------------

    def in_subfield(self, a: Element, deg: int) -> bool:
        """Whether a lies in the subfield of degree deg over F_2."""
        if self.n % deg != 0:
            raise DegreeMismatch(f"degree {deg} does not divide {self.n}")
        return self.frob(a, deg) == a

    def trace(self, a: Element, from_deg: int, to_deg: int) -> Element:
        """Additive trace from the degree-from_deg subfield down to to_deg."""
        if from_deg % to_deg != 0 or self.n % from_deg != 0:
            raise DegreeMismatch(
                f"need {to_deg} | {from_deg} | {self.n} for a trace"
            )
        if not self.in_subfield(a, from_deg):
            raise DegreeMismatch(f"{a:#x} not in the degree-{from_deg} subfield")
        t = 0
        x = a
        for _ in range(from_deg // to_deg):
            t ^= x
            x = self.frob(x, to_deg)
        return t

    def subfield_basis(self, deg: int) -> tuple[int, ...]:
        """Canonical F_2-basis of the degree-deg subfield."""
        if deg not in self._sub_basis:
            if self.n % deg != 0:
                raise DegreeMismatch(f"degree {deg} does not divide {self.n}")
            images = [self.frob(1 << j, deg) ^ (1 << j) for j in range(self.n)]
            self._sub_basis[deg] = kernel_basis(images, self.n)
        return self._sub_basis[deg]

    def subfield_elements(self, deg: int) -> list[int]:
        """All elements of the degree-deg subfield, ascending."""
        if deg not in self._sub_elems:
            self._sub_elems[deg] = span_elements(self.subfield_basis(deg))
        return self._sub_elems[deg]

    def subfield_generator(self, deg: int) -> int:
        """Least root of the default degree-deg modulus in this field.

        This pins down one canonical copy of F_{2^deg} inside every
        context, which is what makes cross-context transport of subfield
        elements well defined.
        """
        if deg not in self._sub_gen:
            m = default_modulus(deg)
            for cand in self.subfield_elements(deg):
                acc = 0
                for bit in range(m.bit_length() - 1, -1, -1):
                    acc = self.mul(acc, cand) ^ ((m >> bit) & 1)
                if acc == 0:
                    self._sub_gen[deg] = cand
                    break
            else:
                raise DegreeMismatch(f"no degree-{deg} root found")  # unreachable
        return self._sub_gen[deg]

    # -- linear-map helpers ---------------------------------------------------

    def linear_images(self, fn: Callable[[Element], Element]) -> list[int]:
        """Images of the F_2 unit vectors under an additive map."""
        return [fn(1 << j) for j in range(self.n)]

    def solve_additive(self, fn: Callable[[Element], Element], target: Element) -> Element:
        """Least x with fn(x) == target for an additive fn, else NoSolution."""
        return solve_linear_f2(self.linear_images(fn), self.n, target)


@lru_cache(maxsize=None)
def make_field(n: int, poly: int | None = None, p_log: int = 1) -> FieldCtx:
    """Shared, cached context for F_{2^n} (default modulus unless given)."""
    return FieldCtx(n, poly, p_log)


def transport(src: FieldCtx, a: Element, dst: FieldCtx, deg: int | None = None) -> Element:
    """Carry an element of the degree-deg subfield of src into dst.

    Both contexts must contain F_{2^deg}; the canonical embedding sends
    the least root of the default degree-deg modulus in src to the least
    root in dst, so transports compose consistently across contexts.
    deg defaults to src.n (transport of the whole source field).
    """
    if deg is None:
        deg = src.n
    if src.n % deg or dst.n % deg:
        raise DegreeMismatch(f"degree {deg} must divide {src.n} and {dst.n}")
    if not src.in_subfield(a, deg):
        raise DegreeMismatch(f"{a:#x} not in the degree-{deg} subfield")
    if src.n == dst.n and src.poly == dst.poly:
        return a
    g_src = src.subfield_generator(deg)
    images = [src.pow(g_src, j) for j in range(deg)]
    coords = solve_linear_f2(images, deg, a)
    g_dst = dst.subfield_generator(deg)
    out = 0
    for j in range(deg):
        if (coords >> j) & 1:
            out ^= dst.pow(g_dst, j)
    return out


# ---------------------------------------------------------------------------


class Fp2Subspace:
    """An F_p-subspace of the ambient field, p = 2^p_log.

    Stored as the canonical reduced F_2-basis of the underlying
    F_2-space; construction closes the span under multiplication by
    F_p, so the F_2 dimension is always p_log times the F_p dimension.
    """

    __slots__ = ("ctx", "p_log", "basis")

    def __init__(self, ctx: FieldCtx, p_log: int, basis: tuple[int, ...]):
        self.ctx = ctx
        self.p_log = p_log
        self.basis = basis

    @classmethod
    def from_vectors(
        cls, ctx: FieldCtx, vecs: Iterable[Element], p_log: int | None = None
    ) -> "Fp2Subspace":
        if p_log is None:
            p_log = ctx.p_log
        scalars = ctx.subfield_basis(p_log)
        closed = [ctx.mul(c, v) for v in vecs for c in scalars]
        basis = rref_basis(closed)
        assert len(basis) % p_log == 0
        return cls(ctx, p_log, basis)

    def __repr__(self) -> str:
        vecs = ", ".join(f"{v:#x}" for v in self.basis)
        return f"Fp2Subspace(p=2^{self.p_log}, [{vecs}])"

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Fp2Subspace)
            and self.ctx == other.ctx
            and self.p_log == other.p_log
            and self.basis == other.basis
        )

    def __hash__(self) -> int:
        return hash((self.ctx, self.p_log, self.basis))

    def _check_peer(self, other: "Fp2Subspace") -> None:
        if self.ctx != other.ctx or self.p_log != other.p_log:
            raise CtxMismatch("subspaces live over different contexts")

    @property
    def dim2(self) -> int:
        """Dimension over F_2."""
        return len(self.basis)

    @property
    def dim_p(self) -> int:
        """Dimension over F_p."""
        return len(self.basis) // self.p_log

    def contains(self, v: Element) -> bool:
        return span_contains(self.basis, v)

    def elements(self) -> list[int]:
        """All p^dim_p elements, ascending."""
        return span_elements(self.basis)

    def fp_basis(self) -> tuple[int, ...]:
        """A deterministic F_p-basis: greedy scan of the reduced basis."""
        ctx, picked = self.ctx, []
        scalars = ctx.subfield_basis(self.p_log)
        spanned: tuple[int, ...] = ()
        for v in self.basis:
            if not span_contains(spanned, v):
                picked.append(v)
                spanned = rref_basis(
                    list(spanned) + [ctx.mul(c, v) for c in scalars]
                )
        assert len(picked) == self.dim_p
        return tuple(picked)

    def intersect(self, other: "Fp2Subspace") -> "Fp2Subspace":
        self._check_peer(other)
        inter = intersect_spans(self.basis, other.basis)
        return Fp2Subspace(self.ctx, self.p_log, inter)

    def add(self, other: "Fp2Subspace") -> "Fp2Subspace":
        self._check_peer(other)
        return Fp2Subspace(
            self.ctx, self.p_log, rref_basis(self.basis + other.basis)
        )

    def is_subspace_of(self, other: "Fp2Subspace") -> bool:
        self._check_peer(other)
        return all(other.contains(v) for v in self.basis)

    def in_subfield(self, deg: int) -> bool:
        """Whether every element lies in the degree-deg subfield."""
        return all(self.ctx.in_subfield(v, deg) for v in self.basis)

    def intersect_subfield(self, deg: int) -> "Fp2Subspace":
        """Intersection with the degree-deg subfield (an F_p-space again)."""
        sub = self.ctx.subfield_basis(deg)
        inter = intersect_spans(self.basis, sub)
        return Fp2Subspace(self.ctx, self.p_log, inter)


# ---------------------------------------------------------------------------
# Field spec strings: "F<2^N>[:<modulus>][:p=<2^k>]", e.g. "F16:0x13:p=4".

_FIELD_RE = re.compile(r"^F(\d+)(?::(0[xX][0-9a-fA-F]+|\d+))?(?::p=(\d+))?$")


def parse_field_spec(text: str) -> FieldCtx:
    """Parse a field spec string into a (cached) context."""
    m = _FIELD_RE.match(text.strip())
    if not m:
        raise ParseError(f"bad field spec {text!r}")
    order = int(m.group(1))
    n = order.bit_length() - 1
    if order <= 1 or (1 << n) != order:
        raise ParseError(f"field order {order} is not a power of 2")
    poly = int(m.group(2), 0) if m.group(2) else None
    p_log = 1
    if m.group(3):
        p = int(m.group(3))
        p_log = p.bit_length() - 1
        if p <= 1 or (1 << p_log) != p:
            raise ParseError(f"base order {p} is not a power of 2")
        if n % p_log:
            raise ParseError(f"base field F_{p} does not sit inside F_{order}")
    return make_field(n, poly, p_log)


def format_field_spec(ctx: FieldCtx) -> str:
    """Canonical field spec string for a context."""
    s = f"F{1 << ctx.n}"
    if ctx.poly != default_modulus(ctx.n):
        s += f":{ctx.poly:#x}"
    if ctx.p_log != 1:
        s += f":p={1 << ctx.p_log}"
    return s
