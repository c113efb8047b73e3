"""Finite-field DFT of periodic binary sequences.

The forward transform of a period-n sequence s over GF(2^m), taken with
respect to a base gamma of multiplicative order n, is

    S[k] = sum_t s[t] * gamma^(t*k)        (equivalently s(gamma^k))

and the inverse is s[t] = sum_k S[k] * gamma^(-t*k); both are exact, so
every check in this module is bit-exact equality, never a tolerance.
The exponent sign is fixed at +tk throughout, and `dft_point` evaluates
the sequence polynomial at gamma^(+k) so the two paths always agree.

Spectra of binary sequences satisfy the conjugacy constraint
S[2k mod n] = S[k]^2 (Frobenius), so the non-zero support is a union of
cyclotomic cosets; `Spectrum` enforces this at construction.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .galois import (
    BinaryPoly,
    FieldCtx,
    FieldElt,
    element_order,
    find_irreducible,
    is_irreducible,
    make_field,
    order_n_element,
    order_of_two_mod,
)
from .sequences import PeriodicSequence

__all__ = [
    "Spectrum",
    "dft",
    "idft",
    "dft_point",
    "shift_spectrum",
    "cyclotomic_cosets",
    "trace_reconstruct",
    "support",
    "dft_context",
]


@dataclass(frozen=True)
class Spectrum:
    """Length-n vector of field elements indexed by frequency."""

    ctx: FieldCtx
    base: FieldElt
    values: tuple[FieldElt, ...]

    def __post_init__(self):
        if self.base.ctx != self.ctx:
            raise ValueError("field mismatch")
        n = len(self.values)
        if n == 0 or element_order(self.base) != n:
            raise ValueError("base order != spectrum length")
        mod = self.ctx._mod_bits
        for k, v in enumerate(self.values):
            if v.ctx != self.ctx:
                raise ValueError("field mismatch")
            sq = kernels.gf2_mulmod(v.bits, v.bits, mod)
            if self.values[(2 * k) % n].bits != sq:
                raise ValueError(f"conjugacy violated at index {k}")

    @property
    def period(self) -> int:
        return len(self.values)

    def __getitem__(self, k: int) -> FieldElt:
        return self.values[k % len(self.values)]

    def value_bits(self) -> list[int]:
        return [v.bits for v in self.values]


def support(spec: Spectrum) -> list[int]:
    """Indices of the non-zero spectral components (Blahut: their count
    is the linear complexity of the underlying sequence)."""
    return [k for k, v in enumerate(spec.values) if v.bits]


def dft(seq: PeriodicSequence, ctx: FieldCtx, base: FieldElt) -> Spectrum:
    """Forward transform; requires order(base) == period."""
    if base.ctx != ctx:
        raise ValueError("field mismatch")
    if element_order(base) != seq.period:
        raise ValueError("base order != period")
    vals = kernels.gf2_dft(list(seq.bits), base.bits, ctx._mod_bits)
    return Spectrum(ctx, base, tuple(FieldElt(ctx, v) for v in vals))


def dft_point(seq: PeriodicSequence, base: FieldElt, k: int) -> FieldElt:
    """Single component via Horner evaluation of s(x) at base^k."""
    n = seq.period
    if element_order(base) != n:
        raise ValueError("base order != period")
    if not 0 <= k < n:
        raise ValueError("index out of range")
    ctx = base.ctx
    point = (base**k).bits
    return FieldElt(ctx, kernels.gf2_evalmod(list(seq.bits), point, ctx._mod_bits))


def idft(spec: Spectrum) -> PeriodicSequence:
    """Inverse transform; the reconstruction must be binary."""
    ctx = spec.ctx
    inv = spec.base.inverse().bits
    vals = kernels.gf2_dft(spec.value_bits(), inv, ctx._mod_bits)
    if any(v not in (0, 1) for v in vals):
        raise ValueError("spectrum not binary-consistent")
    return PeriodicSequence(tuple(vals))


def shift_spectrum(spec: Spectrum, tau: int) -> Spectrum:
    """Spectrum of the left-shifted sequence: values[k] scaled by base^(k*tau)."""
    ctx = spec.ctx
    step = spec.base**tau
    scale = ctx.one
    out = []
    for v in spec.values:
        out.append(v * scale)
        scale = scale * step
    return Spectrum(ctx, spec.base, tuple(out))


def cyclotomic_cosets(n: int) -> tuple[list[list[int]], list[int]]:
    """Orbits of k -> 2k (mod n) over [0, n), plus the minimal leaders."""
    if n < 1 or n % 2 == 0:
        raise ValueError("2 not invertible")
    seen = [False] * n
    cosets = []
    for k in range(n):
        if seen[k]:
            continue
        orbit = []
        j = k
        while not seen[j]:
            seen[j] = True
            orbit.append(j)
            j = 2 * j % n
        cosets.append(sorted(orbit))
    return cosets, [c[0] for c in cosets]


def trace_reconstruct(spec: Spectrum) -> PeriodicSequence:
    """Rebuild the sequence from coset-leader components only.

    s[t] = sum over coset leaders j of Tr^{m_j}(S[j] * base^(-j*t)) with
    m_j the coset size; must agree with `idft` bit for bit.
    """
    n = spec.period
    cosets, _ = cyclotomic_cosets(n)
    active = []
    for coset in cosets:
        j = coset[0]
        if spec.values[j].bits:
            active.append((spec.values[j], spec.base ** (-j), len(coset)))
    bits = []
    powers = [spec.ctx.one for _ in active]
    for _ in range(n):
        t_bit = 0
        for i, (val, _, mj) in enumerate(active):
            term = (val * powers[i]).trace(mj).bits
            if term not in (0, 1):
                raise ValueError("spectrum not binary-consistent")
            t_bit ^= term
        bits.append(t_bit)
        powers = [p * step for p, (_, step, _) in zip(powers, active)]
    return PeriodicSequence(tuple(bits))


def dft_context(min_poly: BinaryPoly, period: int) -> tuple[FieldCtx, FieldElt]:
    """Default field and base for transforming a sequence of the given period.

    When the minimal polynomial is irreducible and its root x already has
    order equal to the period, the quotient by the minimal polynomial
    itself is used with base x -- this keeps exponent labels reproducible.
    Otherwise the smallest field GF(2^m) with m = ord_period(2) is built
    from the first irreducible of that degree and an order-n element is
    found deterministically.
    """
    if min_poly.degree >= 1 and is_irreducible(min_poly):
        ctx = make_field(min_poly)
        if element_order(ctx.x) == period:
            return ctx, ctx.x
    m = order_of_two_mod(period)
    ctx = make_field(find_irreducible(m))
    return ctx, order_n_element(ctx, period)
