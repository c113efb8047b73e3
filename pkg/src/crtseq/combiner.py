"""Nonlinear combining of LFSR outputs via boolean functions in ANF.

A combining function is kept in algebraic normal form: a set of variable
bitmasks, each mask one AND-monomial, the whole function their XOR.  The
empty mask is the constant 1; a function containing it complements the
stream and is worth flagging in reports because it flips the behaviour
of the zero-frequency spectral component.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .sequences import LfsrConfig, PeriodicSequence, lfsr_generate

__all__ = [
    "AnfFunction",
    "GeneratorSpec",
    "product_sequence",
    "combiner_sequence",
    "reference_sequence",
]


@dataclass(frozen=True)
class AnfFunction:
    """Boolean function as XOR of AND-monomials over r variables."""

    r: int
    monomials: frozenset[int]

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("at least one variable required")
        if any(mask >> self.r for mask in self.monomials):
            raise ValueError("monomial uses a variable index >= r")
        if any(mask < 0 for mask in self.monomials):
            raise ValueError("monomial masks must be non-negative")

    @classmethod
    def from_masks(cls, r: int, masks) -> "AnfFunction":
        return cls(r, frozenset(masks))

    @classmethod
    def product_of_all(cls, r: int) -> "AnfFunction":
        return cls(r, frozenset({(1 << r) - 1}))

    @classmethod
    def from_truth_table(cls, values) -> "AnfFunction":
        """Moebius transform of a truth table indexed by input bitmask."""
        values = [int(v) & 1 for v in values]
        size = len(values)
        r = size.bit_length() - 1
        if size != 1 << r:
            raise ValueError("truth table length must be a power of two")
        coeffs = values[:]
        for i in range(r):
            for mask in range(size):
                if mask & (1 << i):
                    coeffs[mask] ^= coeffs[mask ^ (1 << i)]
        return cls(r, frozenset(m for m, c in enumerate(coeffs) if c))

    @property
    def has_constant_term(self) -> bool:
        return 0 in self.monomials

    def eval(self, inputs) -> int:
        bits = tuple(inputs)
        if len(bits) != self.r:
            raise ValueError("arity mismatch")
        packed = 0
        for i, b in enumerate(bits):
            packed |= (b & 1) << i
        out = 0
        for mask in self.monomials:
            out ^= (packed & mask) == mask
        return out

    def __str__(self) -> str:
        if not self.monomials:
            return "0"
        terms = []
        for mask in sorted(self.monomials):
            if mask == 0:
                terms.append("1")
            else:
                terms.append("*".join(f"x{i + 1}" for i in range(self.r) if mask >> i & 1))
        return " + ".join(terms)


def anf_eval(f: AnfFunction, inputs) -> int:
    return f.eval(inputs)


@dataclass(frozen=True)
class GeneratorSpec:
    """Constituent registers plus the combining function."""

    lfsrs: tuple[LfsrConfig, ...]
    f: AnfFunction

    def __post_init__(self):
        if self.f.r != len(self.lfsrs):
            raise ValueError("combining function arity != register count")
        periods = self.periods
        for i in range(len(periods)):
            for j in range(i + 1, len(periods)):
                if math.gcd(periods[i], periods[j]) != 1:
                    raise ValueError("constituent periods not coprime")

    @property
    def periods(self) -> tuple[int, ...]:
        return tuple(cfg.period() for cfg in self.lfsrs)

    @property
    def combined_period(self) -> int:
        return math.prod(self.periods)

    def canonical(self) -> "GeneratorSpec":
        """Same structure with every register on the impulse fill."""
        return GeneratorSpec(
            tuple(LfsrConfig.impulse(cfg.feedback) for cfg in self.lfsrs), self.f
        )

    def with_fills(self, fills) -> "GeneratorSpec":
        return GeneratorSpec(
            tuple(
                LfsrConfig(cfg.feedback, tuple(fill))
                for cfg, fill in zip(self.lfsrs, fills)
            ),
            self.f,
        )


def combiner_sequence(spec: GeneratorSpec, count: int) -> list[int]:
    """First `count` bits of f applied across the register outputs."""
    if count < 0:
        raise ValueError("count must be >= 0")
    streams = [lfsr_generate(cfg, count) for cfg in spec.lfsrs]
    return [spec.f.eval(bits) for bits in zip(*streams)] if count else []


def product_sequence(lfsrs, count: int) -> list[int]:
    """Pointwise AND of the register outputs (single full monomial)."""
    lfsrs = tuple(lfsrs)
    spec = GeneratorSpec(lfsrs, AnfFunction.product_of_all(len(lfsrs)))
    return combiner_sequence(spec, count)


def reference_sequence(spec: GeneratorSpec, period_limit: int = 1 << 20) -> PeriodicSequence:
    """One full period of the impulse-seeded combiner.

    Full-period generation is exponential in the register sizes, so it is
    capped; callers that really want more must raise the limit explicitly.
    """
    n = spec.combined_period
    if n > period_limit:
        raise ValueError(f"combined period {n} exceeds limit {period_limit}")
    return PeriodicSequence(tuple(combiner_sequence(spec.canonical(), n)))
