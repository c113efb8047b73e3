"""Binary polynomials and GF(2^m) extension fields.

A polynomial over GF(2) is stored as an int bitset: bit i is the
coefficient of x^i, so x^3+x+1 is 0b1011.  An extension field is a
quotient ring GF(2)[x]/(modulus) with an irreducible modulus; its
elements are residues of degree below m kept eagerly reduced.

Elements stay in polynomial basis throughout -- no global log/antilog
tables -- so fields up to GF(2^31) and beyond remain memory-light.
Discrete logarithms are only ever taken inside the small order-n
subgroup that carries a transform, via an n-entry lookup table built
lazily per (field, base) pair.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import cached_property

from . import kernels

__all__ = [
    "BinaryPoly",
    "FieldCtx",
    "FieldElt",
    "make_field",
    "is_irreducible",
    "find_irreducible",
    "find_primitive",
    "poly_gcd",
    "element_order",
    "order_n_element",
    "dlog",
    "element_min_poly",
    "order_of_two_mod",
]


@dataclass(frozen=True, order=True)
class BinaryPoly:
    """Polynomial over GF(2) as a coefficient bitset.

    `degree` is the index of the highest set bit; the zero polynomial
    reports degree -1 (the conventional "minus infinity" sentinel).
    """

    bits: int

    def __post_init__(self):
        if self.bits < 0:
            raise ValueError("polynomial bitset must be non-negative")

    @property
    def degree(self) -> int:
        return self.bits.bit_length() - 1

    def is_zero(self) -> bool:
        return self.bits == 0

    @classmethod
    def from_exponents(cls, exponents) -> "BinaryPoly":
        bits = 0
        for e in exponents:
            bits |= 1 << e
        return cls(bits)

    @classmethod
    def from_hex(cls, text: str) -> "BinaryPoly":
        return cls(int(text, 16))

    @classmethod
    def parse(cls, token: str) -> "BinaryPoly":
        """Parse either serialized form.

        A token with commas is a list of exponents ("3,1,0" is x^3+x+1);
        anything else is the hex bitset ("B" is x^3+x+1).  Both are
        case-insensitive.
        """
        token = token.strip()
        if not token:
            raise ValueError("empty polynomial token")
        if "," in token:
            return cls.from_exponents(int(t) for t in token.split(","))
        return cls.from_hex(token)

    def to_hex(self) -> str:
        return format(self.bits, "X")

    def exponents(self) -> list[int]:
        return [i for i in range(self.bits.bit_length()) if (self.bits >> i) & 1]

    def __add__(self, other: "BinaryPoly") -> "BinaryPoly":
        return BinaryPoly(self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other: "BinaryPoly") -> "BinaryPoly":
        return BinaryPoly(kernels.gf2_clmul(self.bits, other.bits))

    def __mod__(self, other: "BinaryPoly") -> "BinaryPoly":
        if other.bits == 0:
            raise ValueError("zero modulus")
        return BinaryPoly(kernels.gf2_mod(self.bits, other.bits))

    def __str__(self) -> str:
        if self.bits == 0:
            return "0"
        terms = []
        for i in reversed(self.exponents()):
            terms.append("1" if i == 0 else ("x" if i == 1 else f"x^{i}"))
        return "+".join(terms)

    def __repr__(self) -> str:
        return f"BinaryPoly(0x{self.bits:X})"


X = BinaryPoly(0b10)
ONE = BinaryPoly(1)


def poly_gcd(a: BinaryPoly, b: BinaryPoly) -> BinaryPoly:
    """Greatest common divisor in GF(2)[x] (every non-zero result is monic)."""
    x, y = a.bits, b.bits
    while y:
        x, y = y, kernels.gf2_mod(x, y)
    return BinaryPoly(x)


# ---------------------------------------------------------------------------
# integer factorization helpers (for multiplicative orders)

_SMALL_PRIME_BOUND = 1 << 16


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic Miller-Rabin bases for n < 3.3e24
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n: int) -> int:
    """One non-trivial factor of an odd composite n (deterministic retries)."""
    import math

    for c in range(1, 64):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho failed to factor {n}")


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division then Brent's rho."""
    factors: dict[int, int] = {}

    def add(p: int):
        factors[p] = factors.get(p, 0) + 1

    d = 2
    while d * d <= n and d <= _SMALL_PRIME_BOUND:
        while n % d == 0:
            add(d)
            n //= d
        d += 1 if d == 2 else 2
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if _is_probable_prime(m):
            add(m)
        else:
            f = _brent_rho(m)
            stack += [f, m // f]
    return factors


def order_of_two_mod(n: int) -> int:
    """Multiplicative order of 2 modulo an odd n."""
    if n < 1 or n % 2 == 0:
        raise ValueError("order of 2 requires odd n >= 1")
    if n == 1:
        return 1
    order, acc = 1, 2 % n
    while acc != 1:
        acc = acc * 2 % n
        order += 1
    return order


# ---------------------------------------------------------------------------
# irreducibility and field construction


def is_irreducible(p: BinaryPoly) -> bool:
    """Rabin's test: p of degree m is irreducible iff x^(2^m) = x (mod p)
    and gcd(x^(2^(m/q)) - x, p) = 1 for every prime q dividing m."""
    m = p.degree
    if m < 1:
        raise ValueError("degenerate degree")
    mod = p.bits
    x_reduced = kernels.gf2_mod(0b10, mod)

    def x_to_pow2(k: int) -> int:
        t = x_reduced
        for _ in range(k):
            t = kernels.gf2_mulmod(t, t, mod)
        return t

    if x_to_pow2(m) != x_reduced:
        return False
    for q in factorize(m):
        t = x_to_pow2(m // q)
        if poly_gcd(BinaryPoly(t ^ x_reduced), p).bits != 1:
            return False
    return True


def find_irreducible(degree: int) -> BinaryPoly:
    """First irreducible of the given degree, by ascending bitset value."""
    if degree < 1:
        raise ValueError("degenerate degree")
    # constant term must be 1, else x divides the candidate
    for c in range(1, 1 << degree, 2):
        p = BinaryPoly((1 << degree) | c)
        if is_irreducible(p):
            return p
    raise ArithmeticError(f"no irreducible of degree {degree}")  # unreachable


def find_primitive(degree: int) -> BinaryPoly:
    """First primitive polynomial of the given degree (x has maximal order)."""
    if degree < 1:
        raise ValueError("degenerate degree")
    full = (1 << degree) - 1
    for c in range(1, 1 << degree, 2):
        p = BinaryPoly((1 << degree) | c)
        if is_irreducible(p) and element_order(make_field(p).x) == full:
            return p
    raise ArithmeticError(f"no primitive polynomial of degree {degree}")


class FieldCtx:
    """GF(2^m) defined by an irreducible modulus.

    Immutable after construction except for the lazily built discrete-log
    tables, which are created once under a lock and read-only afterwards;
    contexts and elements are safe to share across threads.
    """

    def __init__(self, modulus: BinaryPoly):
        if not is_irreducible(modulus):
            raise ValueError("reducible modulus")
        self.modulus = modulus
        self.m = modulus.degree
        self.group_order = (1 << self.m) - 1
        self.subgroup_order: int | None = None
        self._mod_bits = modulus.bits
        self._dlog_tables: dict[int, dict[int, int]] = {}
        self._lock = threading.Lock()

    @cached_property
    def _group_order_factors(self) -> dict[int, int]:
        return factorize(self.group_order)

    def elt(self, value) -> "FieldElt":
        """Wrap an int bitset or BinaryPoly as a reduced field element."""
        bits = value.bits if isinstance(value, BinaryPoly) else int(value)
        if bits < 0:
            raise ValueError("element bitset must be non-negative")
        if bits >> self.m:
            bits = kernels.gf2_mod(bits, self._mod_bits)
        return FieldElt(self, bits)

    @property
    def zero(self) -> "FieldElt":
        return FieldElt(self, 0)

    @property
    def one(self) -> "FieldElt":
        return FieldElt(self, 1)

    @property
    def x(self) -> "FieldElt":
        return self.elt(0b10)

    def elements(self):
        """All 2^m elements, ascending by bitset."""
        return (FieldElt(self, b) for b in range(1 << self.m))

    def _dlog_table(self, base: "FieldElt", n: int) -> dict[int, int]:
        key = base.bits
        table = self._dlog_tables.get(key)
        if table is not None:
            if len(table) != n:
                raise ValueError("base order != n")
            return table
        with self._lock:
            table = self._dlog_tables.get(key)
            if table is not None:
                return table
            built: dict[int, int] = {}
            acc = 1
            for d in range(n):
                if acc in built:
                    raise ValueError("base order != n")
                built[acc] = d
                acc = kernels.gf2_mulmod(acc, key, self._mod_bits)
            if acc != 1:
                raise ValueError("base order != n")
            self._dlog_tables[key] = built
            if self.subgroup_order is None:
                self.subgroup_order = n
            return built

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldCtx) and other.modulus == self.modulus

    def __hash__(self) -> int:
        return hash(("FieldCtx", self.modulus.bits))

    def __repr__(self) -> str:
        return f"FieldCtx(GF(2^{self.m}), modulus=0x{self._mod_bits:X})"


def make_field(modulus: BinaryPoly) -> FieldCtx:
    """Field context for GF(2)[x]/(modulus); `ctx.x` is the residue of x."""
    return FieldCtx(modulus)


class FieldElt:
    """Residue of degree < m in a FieldCtx, in polynomial basis."""

    __slots__ = ("ctx", "bits")

    def __init__(self, ctx: FieldCtx, bits: int):
        self.ctx = ctx
        self.bits = bits

    def is_zero(self) -> bool:
        return self.bits == 0

    def _check_ctx(self, other: "FieldElt"):
        if self.ctx != other.ctx:
            raise ValueError("field mismatch")

    def __add__(self, other: "FieldElt") -> "FieldElt":
        self._check_ctx(other)
        return FieldElt(self.ctx, self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other: "FieldElt") -> "FieldElt":
        self._check_ctx(other)
        return FieldElt(
            self.ctx, kernels.gf2_mulmod(self.bits, other.bits, self.ctx._mod_bits)
        )

    def inverse(self) -> "FieldElt":
        if self.bits == 0:
            raise ValueError("zero inverse")
        return self ** (self.ctx.group_order - 1)

    def __pow__(self, e: int) -> "FieldElt":
        if self.bits == 0:
            if e < 0:
                raise ValueError("zero inverse")
            return self.ctx.one if e == 0 else self.ctx.zero
        # negative exponents wrap around the multiplicative group
        e %= self.ctx.group_order
        return FieldElt(self.ctx, kernels.gf2_powmod(self.bits, e, self.ctx._mod_bits))

    def trace(self, width: int | None = None) -> "FieldElt":
        """Partial trace sum(self^(2^i) for i < width); width defaults to m.

        With the full width the result lies in GF(2); a smaller width is
        meaningful when the element sits in the corresponding subfield.
        """
        width = self.ctx.m if width is None else width
        acc = t = self
        for _ in range(width - 1):
            t = t * t
            acc = acc + t
        return acc

    def trace_bit(self, width: int | None = None) -> int:
        t = self.trace(width).bits
        if t not in (0, 1):
            raise ArithmeticError("trace left the prime subfield")
        return t

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldElt)
            and other.bits == self.bits
            and other.ctx == self.ctx
        )

    def __hash__(self) -> int:
        return hash((self.ctx.modulus.bits, self.bits))

    def __repr__(self) -> str:
        return f"FieldElt(0x{self.bits:X} in GF(2^{self.ctx.m}))"


def element_order(a: FieldElt) -> int:
    """Least t > 0 with a^t = 1, via the factorization of 2^m - 1."""
    if a.bits == 0:
        raise ValueError("zero has no multiplicative order")
    order = a.ctx.group_order
    for p in a.ctx._group_order_factors:
        while order % p == 0 and (a ** (order // p)).bits == 1:
            order //= p
    return order


def order_n_element(ctx: FieldCtx, n: int) -> FieldElt:
    """An element of exact multiplicative order n.

    Returns x itself when the modulus already gives it order n (the case
    where the modulus is the minimal polynomial of the sequence under
    transform); otherwise finds a primitive element by deterministic
    ascending search and powers it down to order n.
    """
    if n < 1 or ctx.group_order % n:
        raise ValueError("no order-n element")
    if n == 1:
        return ctx.one
    x = ctx.x
    if element_order(x) == n:
        if ctx.subgroup_order is None:
            ctx.subgroup_order = n
        return x
    for bits in range(2, 1 << ctx.m):
        g = FieldElt(ctx, bits)
        if element_order(g) == ctx.group_order:
            e = g ** (ctx.group_order // n)
            if ctx.subgroup_order is None:
                ctx.subgroup_order = n
            return e
    raise ArithmeticError("no primitive element found")  # unreachable


def dlog(a: FieldElt, base: FieldElt, n: int) -> int:
    """Unique d in [0, n) with base^d = a, by an n-entry lookup table."""
    if a.bits == 0:
        raise ValueError("zero has no logarithm")
    a._check_ctx(base)
    table = a.ctx._dlog_table(base, n)
    try:
        return table[a.bits]
    except KeyError:
        raise ValueError("not in subgroup") from None


def element_min_poly(a: FieldElt) -> BinaryPoly:
    """Minimal polynomial of a over GF(2): product of (x - a^(2^i))."""
    if a.bits == 0:
        return X
    # coefficients live in the field while the product is expanded, then
    # collapse to GF(2) once the Frobenius orbit closes
    coeffs = [a.ctx.one]
    c = a
    while True:
        nxt = [a.ctx.zero] * (len(coeffs) + 1)
        for i, v in enumerate(coeffs):
            nxt[i + 1] = nxt[i + 1] + v
            nxt[i] = nxt[i] + v * c
        coeffs = nxt
        c = c * c
        if c == a:
            break
    bits = 0
    for i, v in enumerate(coeffs):
        if v.bits not in (0, 1):
            raise ArithmeticError("conjugate product left GF(2)")
        bits |= v.bits << i
    return BinaryPoly(bits)
