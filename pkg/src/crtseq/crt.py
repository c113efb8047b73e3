"""Residue arithmetic across constituent sequence periods.

For registers with pairwise-coprime periods n_1..n_r, offsets into the
combined period N = prod(n_i) correspond one-to-one with residue vectors
(t mod n_1, ..., t mod n_r).  That single bijection carries all three
mappings this module provides:

  * compose_shift -- constituent phase shifts to the combined stream shift;
  * map_support   -- constituent spectral supports to the product support;
  * map_degree    -- constituent component exponents to the product
                     component exponent, enabling `predict_spectrum` to
                     build a large-field spectrum without ever touching
                     the large-field sequence.

Only coprime moduli are accepted; without coprimality the bijection, and
with it every mapping above, breaks down.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

from .galois import FieldCtx, FieldElt, dlog, element_min_poly, element_order
from . import kernels
from .spectra import Spectrum

__all__ = [
    "ResidueSystem",
    "crt_solve",
    "repetition_counts",
    "compose_shift",
    "map_support",
    "map_degree",
    "decompose_degree",
    "predict_spectrum",
]


@dataclass(frozen=True)
class ResidueSystem:
    """Pairwise-coprime moduli n_1..n_r with combined modulus N = prod(n_i)."""

    moduli: tuple[int, ...]

    def __post_init__(self):
        if not self.moduli:
            raise ValueError("at least one modulus required")
        if any(n < 1 for n in self.moduli):
            raise ValueError("moduli must be positive")
        for i in range(len(self.moduli)):
            for j in range(i + 1, len(self.moduli)):
                if math.gcd(self.moduli[i], self.moduli[j]) != 1:
                    raise ValueError("moduli not coprime")

    @property
    def modulus(self) -> int:
        return math.prod(self.moduli)

    def idempotents(self) -> tuple[int, ...]:
        """e_i with e_i = 1 (mod n_i) and 0 (mod n_j) for j != i."""
        return tuple(
            crt_solve([1 if j == i else 0 for j in range(len(self.moduli))], self)
            for i in range(len(self.moduli))
        )


def crt_solve(residues, system: ResidueSystem) -> int:
    """Unique x in [0, N) with x = residues[i] (mod n_i) for all i.

    Residues are normalized first, so negative inputs are accepted.
    """
    residues = list(residues)
    if len(residues) != len(system.moduli):
        raise ValueError("residue count must match modulus count")
    x, n = residues[0] % system.moduli[0], system.moduli[0]
    for r, m in zip(residues[1:], system.moduli[1:]):
        # fold pairwise: x + n*t = r (mod m)
        t = (r - x) * pow(n, -1, m) % m
        x += n * t
        n *= m
    return x % n


def repetition_counts(system: ResidueSystem) -> tuple[int, ...]:
    """How many times each constituent period repeats within N."""
    n = system.modulus
    return tuple(n // m for m in system.moduli)


def compose_shift(shifts, system: ResidueSystem) -> int:
    """Combined left shift produced by per-register left shifts.

    Shifting constituent i by shifts[i] and recombining yields the
    reference combined stream shifted left by the returned amount.
    """
    return crt_solve(shifts, system)


def map_support(supports, system: ResidueSystem) -> list[int]:
    """Product-spectrum support from constituent supports.

    Every combination of per-register non-zero indices lifts to exactly
    one combined index; no other combined index can be non-zero.
    """
    supports = [sorted(set(s)) for s in supports]
    for s, m in zip(supports, system.moduli):
        if any(not 0 <= k < m for k in s):
            raise ValueError("support index out of range")
    return sorted(crt_solve(combo, system) for combo in product(*supports))


def map_degree(degrees, system: ResidueSystem) -> int:
    """Combined component exponent from constituent component exponents."""
    return crt_solve(degrees, system)


def decompose_degree(d: int, system: ResidueSystem) -> tuple[int, ...]:
    """Constituent exponents recovered from a combined exponent."""
    if not 0 <= d < system.modulus:
        raise ValueError("degree out of range")
    return tuple(d % m for m in system.moduli)


def predict_spectrum(
    constituent_spectra, target_ctx: FieldCtx, target_base: FieldElt
) -> Spectrum:
    """Product-sequence spectrum assembled purely from constituent spectra.

    The support is `map_support` of the constituent supports and the value
    at each lifted index k is target_base**d with d = `map_degree` of the
    constituent component exponents at (k mod n_i).  The result equals the
    direct transform of the product sequence, element for element.

    The target base must decompose compatibly: its order-n_i component
    gamma^(e_i) has to be a conjugate-aligned root of each constituent
    base's minimal polynomial.  Any base rooted in the product sequence's
    own minimal polynomial satisfies this automatically; a mismatched
    base would silently permute exponent labels, so it is rejected here.
    """
    spectra = list(constituent_spectra)
    if target_base.ctx != target_ctx:
        raise ValueError("field mismatch")
    system = ResidueSystem(tuple(s.period for s in spectra))
    n = system.modulus
    if element_order(target_base) != n:
        raise ValueError("target base order != combined period")

    for e_i, spec in zip(system.idempotents(), spectra):
        g_i = element_min_poly(spec.base)
        u_i = target_base**e_i
        coeffs = [(g_i.bits >> j) & 1 for j in range(g_i.degree + 1)]
        if kernels.gf2_evalmod(coeffs, u_i.bits, target_ctx._mod_bits):
            raise ValueError("target base misaligned with constituent base")

    values = [target_ctx.zero] * n
    supports = [
        [k for k, v in enumerate(spec.values) if v.bits] for spec in spectra
    ]
    for combo in product(*supports):
        k = crt_solve(combo, system)
        exps = [
            dlog(spec.values[ki], spec.base, spec.period)
            for ki, spec in zip(combo, spectra)
        ]
        values[k] = target_base ** map_degree(exps, system)
    return Spectrum(target_ctx, target_base, tuple(values))
