"""Initial-state recovery for combiner generators.

Both recovery routes measure phase against the impulse-seeded reference
stream of the generator structure, then split the combined offset into
per-register residues; each residue picks the register state directly.

The time-domain route locates a known keystream window inside one full
reference period.  The frequency-domain route inverts the spectral shift
relation U[k] = base^(k*tau) * S[k] per constituent, which only needs
component values at indices whose residues are invertible.  Recovered
states are accepted on one authority only: regenerating the stream and
comparing it against the observation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .combiner import GeneratorSpec, combiner_sequence, reference_sequence
from .crt import ResidueSystem, crt_solve
from .galois import FieldElt, dlog, element_order, make_field
from .sequences import (
    LfsrConfig,
    PeriodicSequence,
    lfsr_generate,
    locate_window,
    state_at_shift,
)
from .spectra import dft, dft_point

__all__ = [
    "RecoveryReport",
    "time_domain_recover",
    "shift_from_spectra",
    "spectral_recover",
    "DEFAULT_PERIOD_LIMIT",
]

DEFAULT_PERIOD_LIMIT = 1 << 20


@dataclass(frozen=True)
class RecoveryReport:
    """Outcome of one recovery attempt.

    `verified` is set only when regenerating the combiner from `states`
    reproduces the observed data exactly.  When a window matches at
    several offsets every candidate gets its own report and
    `ambiguity_count` says how many there are.
    """

    tau: int
    residues: tuple[int, ...]
    states: tuple[tuple[int, ...], ...]
    verified: bool
    ambiguity_count: int = 1
    candidates: tuple["RecoveryReport", ...] = ()
    notes: tuple[str, ...] = ()

    def states_str(self) -> str:
        return ",".join("".join(map(str, s)) for s in self.states)


def _uniqueness_floor(n: int) -> int:
    return (n - 1).bit_length()


def _states_for_offset(spec: GeneratorSpec, tau: int) -> tuple[tuple[int, ...], ...]:
    return tuple(state_at_shift(cfg, tau % p) for cfg, p in zip(spec.lfsrs, spec.periods))


def time_domain_recover(
    spec: GeneratorSpec, window, period_limit: int = DEFAULT_PERIOD_LIMIT
) -> RecoveryReport:
    """Locate a keystream window in the reference period and split by CRT.

    Windows shorter than ceil(log2(n)) cannot pin down an offset at all
    and are rejected; windows shorter than that plus 4 may match at
    several offsets, in which case all candidates are reported rather
    than failing.
    """
    window = tuple(int(b) for b in window)
    n = spec.combined_period
    floor = _uniqueness_floor(n)
    if len(window) < floor:
        raise ValueError("window below uniqueness threshold")
    reference = reference_sequence(spec, period_limit)
    offsets = locate_window(reference, window)
    if not offsets:
        raise ValueError("window is not a subsequence of the reference stream")

    system = ResidueSystem(spec.periods)
    candidates = []
    for tau in offsets:
        states = _states_for_offset(spec, tau)
        regen = combiner_sequence(spec.with_fills(states), len(window))
        candidates.append(
            RecoveryReport(
                tau=tau,
                residues=tuple(tau % m for m in system.moduli),
                states=states,
                verified=tuple(regen) == window,
            )
        )
    notes = ()
    if len(window) < floor + 4 and len(offsets) > 1:
        notes = ("window below unique-hit length; all candidate offsets reported",)
    primary = next((c for c in candidates if c.verified), candidates[0])
    return replace(
        primary,
        ambiguity_count=len(offsets),
        candidates=tuple(candidates),
        notes=notes,
    )


def shift_from_spectra(
    u_k: FieldElt, s_k: FieldElt, k: int, base: FieldElt, n: int
) -> int:
    """Invert U[k] = base^(k*tau) * S[k] for tau; needs gcd(k, n) = 1."""
    if s_k.bits == 0:
        raise ValueError("reference component zero")
    if math.gcd(k, n) != 1:
        raise ValueError("index not invertible")
    kt = dlog(u_k * s_k.inverse(), base, n)
    return kt * pow(k, -1, n) % n


def spectral_recover(
    spec: GeneratorSpec,
    observed_components,
    target_base: FieldElt,
    period_limit: int = DEFAULT_PERIOD_LIMIT,
) -> RecoveryReport:
    """Recover register states from observed combined spectral components.

    Each observed (k, value) pair at an index whose constituent residues
    all land on non-zero reference components is decomposed by CRT into
    per-register component exponents; comparing those against the
    impulse-seeded reference spectra yields per-register shifts.  Sound
    for product combiners; for general combining functions the CRT degree
    relation is a hypothesis, so trust only reports with `verified` set.
    """
    observed = [(int(k), v) for k, v in observed_components]
    n = spec.combined_period
    if element_order(target_base) != n:
        raise ValueError("target base order != combined period")
    if n > period_limit:
        raise ValueError(f"combined period {n} exceeds limit {period_limit}")

    system = ResidueSystem(spec.periods)
    ref_ctxs = [make_field(cfg.feedback) for cfg in spec.lfsrs]
    ref_streams = [
        PeriodicSequence(tuple(lfsr_generate(LfsrConfig.impulse(cfg.feedback), p)))
        for cfg, p in zip(spec.lfsrs, spec.periods)
    ]
    ref_spectra = [
        dft(stream, ctx, ctx.x) for stream, ctx in zip(ref_streams, ref_ctxs)
    ]

    notes: list[str] = []
    # drop observations that touch a zero reference component anywhere;
    # their CRT decomposition is undefined
    usable = []
    for k, val in observed:
        residues = [k % p for p in system.moduli]
        if all(ref_spectra[i].values[r].bits for i, r in enumerate(residues)):
            usable.append((k, val, residues))
        else:
            notes.append(f"component {k} skipped: reference component zero")

    verified = True
    taus = []
    for i, (spec_i, p_i) in enumerate(zip(ref_spectra, system.moduli)):
        shifts = []
        for k, val, residues in usable:
            ki = residues[i]
            if math.gcd(ki, p_i) != 1:
                continue
            d = dlog(val, target_base, n)
            obs_component = spec_i.base ** (d % p_i)
            shifts.append(
                shift_from_spectra(obs_component, spec_i.values[ki], ki, spec_i.base, p_i)
            )
        if not shifts:
            raise ValueError("index not invertible")
        if len(set(shifts)) > 1:
            verified = False
            notes.append(
                f"register {i + 1}: inconsistent shifts {sorted(set(shifts))}"
            )
        taus.append(shifts[0])

    states = tuple(
        state_at_shift(cfg, t) for cfg, t in zip(spec.lfsrs, taus)
    )
    tau = crt_solve(taus, system)

    regen = PeriodicSequence(tuple(combiner_sequence(spec.with_fills(states), n)))
    for k, val, _ in usable:
        if dft_point(regen, target_base, k) != val:
            verified = False
            notes.append(f"component {k}: regenerated spectrum diverges")
            break
    return RecoveryReport(
        tau=tau,
        residues=tuple(taus),
        states=states,
        verified=verified,
        notes=tuple(notes),
    )
