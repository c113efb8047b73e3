"""LFSR streams, periodic binary sequences, and linear-recurrence synthesis.

Registers step in the Fibonacci convention: with feedback polynomial
f(x) = x^m + sum(c_i x^i) the recurrence is s[t+m] = xor(s[t+i] for c_i=1)
and the output at time t is s[t] itself.  The canonical "initial state 1"
is the impulse fill 0...01 (s[m-1] = 1); with f(x) = x^3+x+1 it produces
the stream 0010111..., which fixes the phase every derived artifact in
this package (window offsets, recovered states) is measured against.

`min_poly_bm` returns the recurrence polynomial m(x) with
sum(m_i * s[t+i]) = 0 -- not its reciprocal -- so deg m(x) is the linear
complexity and m(x) matches the minimal polynomial convention used by
the spectral modules.
"""

from __future__ import annotations

from dataclasses import dataclass

from .galois import BinaryPoly, FieldCtx, FieldElt, element_order, make_field

__all__ = [
    "LfsrConfig",
    "PeriodicSequence",
    "lfsr_generate",
    "min_poly_bm",
    "cyclic_shift",
    "locate_window",
    "trace_sequence",
    "state_at_shift",
]

_period_cache: dict[int, int] = {}


@dataclass(frozen=True)
class LfsrConfig:
    """Feedback polynomial plus initial fill (s_0 ... s_{m-1})."""

    feedback: BinaryPoly
    init: tuple[int, ...]

    def __post_init__(self):
        if self.feedback.degree < 1:
            raise ValueError("feedback polynomial must have degree >= 1")
        if not self.feedback.bits & 1:
            raise ValueError("feedback polynomial needs a non-zero constant term")
        if len(self.init) != self.feedback.degree:
            raise ValueError("initial fill length must equal the feedback degree")
        if any(b not in (0, 1) for b in self.init):
            raise ValueError("initial fill must be bits")
        if not any(self.init):
            raise ValueError("all-zero initial fill is excluded")

    @classmethod
    def impulse(cls, feedback: BinaryPoly) -> "LfsrConfig":
        """Canonical fill 0...01."""
        m = feedback.degree
        return cls(feedback, (0,) * (m - 1) + (1,))

    @classmethod
    def parse(cls, poly_token: str, init_token: str) -> "LfsrConfig":
        return cls(BinaryPoly.parse(poly_token), tuple(int(b) for b in init_token))

    def period(self) -> int:
        """Period of the generated stream (order of x modulo the feedback)."""
        bits = self.feedback.bits
        if bits not in _period_cache:
            _period_cache[bits] = element_order(make_field(self.feedback).x)
        return _period_cache[bits]

    def init_str(self) -> str:
        return "".join(map(str, self.init))


def lfsr_generate(cfg: LfsrConfig, count: int) -> list[int]:
    """First `count` output bits of the register."""
    if count < 0:
        raise ValueError("count must be >= 0")
    m = cfg.feedback.degree
    taps = [i for i in range(m) if (cfg.feedback.bits >> i) & 1]
    s = list(cfg.init)
    for t in range(count - m):
        bit = 0
        for i in taps:
            bit ^= s[t + i]
        s.append(bit)
    return s[:count]


def min_poly_bm(bits) -> tuple[BinaryPoly, int]:
    """Berlekamp-Massey synthesis: (minimal polynomial, linear complexity).

    A correct answer needs at least twice the true linear complexity in
    input bits; that is the caller's responsibility.
    """
    seq = list(bits)
    n = len(seq)
    if n == 0:
        raise ValueError("empty sequence")
    c = [1] + [0] * n
    b = [1] + [0] * n
    lc, last = 0, -1
    for i in range(n):
        d = 0
        for j in range(lc + 1):
            d ^= c[j] & seq[i - j]
        if d:
            snapshot = c[:]
            shift = i - last
            for j in range(shift, n + 1):
                c[j] ^= b[j - shift]
            if 2 * lc <= i:
                lc = i + 1 - lc
                b = snapshot
                last = i
    # reverse the connection polynomial within degree lc to get the
    # recurrence form sum(m_i s[t+i]) = 0
    poly = 0
    for j in range(lc + 1):
        if c[j]:
            poly |= 1 << (lc - j)
    return BinaryPoly(poly), lc


@dataclass(frozen=True)
class PeriodicSequence:
    """Binary sequence stored as exactly one period."""

    bits: tuple[int, ...]

    def __post_init__(self):
        if len(self.bits) < 1:
            raise ValueError("period must be >= 1")
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("sequence entries must be bits")

    @classmethod
    def from_bits(cls, bits) -> "PeriodicSequence":
        return cls(tuple(bits))

    @property
    def period(self) -> int:
        return len(self.bits)

    def __getitem__(self, t: int) -> int:
        return self.bits[t % len(self.bits)]

    def window(self, start: int, length: int) -> tuple[int, ...]:
        return tuple(self[start + i] for i in range(length))

    def __str__(self) -> str:
        return "".join(map(str, self.bits))


def cyclic_shift(seq: PeriodicSequence, tau: int) -> PeriodicSequence:
    """Left shift: result u with u[t] = seq[t + tau]."""
    n = seq.period
    tau %= n
    return PeriodicSequence(seq.bits[tau:] + seq.bits[:tau])


def locate_window(reference: PeriodicSequence, window) -> list[int]:
    """All offsets i in [0, n) where the window matches cyclically."""
    w = "".join(str(int(b)) for b in window)
    if not w:
        raise ValueError("empty window")
    n = reference.period
    text = str(reference) * (len(w) // n + 2)
    return [i for i in range(n) if text[i : i + len(w)] == w]


def trace_sequence(ctx: FieldCtx, beta: FieldElt, alpha: FieldElt, count: int) -> list[int]:
    """Bits Tr(beta * alpha^t) for t < count.

    Every non-zero beta selects one cyclic shift of the same m-sequence
    when alpha generates the group and the modulus is primitive.
    """
    if beta.bits == 0:
        raise ValueError("beta must be non-zero")
    out = []
    p = beta
    for _ in range(count):
        out.append(p.trace_bit())
        p = p * alpha
    return out


def state_at_shift(cfg: LfsrConfig, tau: int) -> tuple[int, ...]:
    """Register fill whose stream equals the impulse stream shifted left by tau."""
    m = cfg.feedback.degree
    tau %= cfg.period()
    stream = lfsr_generate(LfsrConfig.impulse(cfg.feedback), tau + m)
    return tuple(stream[tau : tau + m])
