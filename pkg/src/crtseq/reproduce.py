"""Executable reproduction of the published worked examples.

Each target regenerates one published artifact from scratch and diffs it
against the embedded golden data in `goldens`.  Targets are fully
deterministic; a divergence names the first differing entry.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import goldens
from .attack import time_domain_recover
from .combiner import combiner_sequence, product_sequence, reference_sequence
from .crt import ResidueSystem, compose_shift
from .galois import dlog, make_field
from .sequences import (
    LfsrConfig,
    PeriodicSequence,
    cyclic_shift,
    lfsr_generate,
    min_poly_bm,
    state_at_shift,
)
from .spectra import dft, support

__all__ = ["ReproResult", "TARGETS", "run_target"]


@dataclass
class ReproResult:
    target: str
    passed: bool
    lines: list[str] = field(default_factory=list)
    first_divergence: str | None = None

    def fail(self, message: str):
        self.passed = False
        if self.first_divergence is None:
            self.first_divergence = message
        self.lines.append(f"DIVERGENCE: {message}")

    def check(self, ok: bool, label: str, message: str):
        if ok:
            self.lines.append(f"ok: {label}")
        else:
            self.fail(f"{label}: {message}")


def _spectrum_exponents(spec) -> dict[int, int]:
    return {
        k: dlog(spec.values[k], spec.base, spec.period) for k in support(spec)
    }


def _diff_tables(result: ReproResult, got: dict[int, int], want: dict[int, int]):
    matched = sum(
        1 for k in want if k in got and got[k] == want[k]
    )
    result.lines.append(f"matched {matched}/{len(want)} published entries")
    for k in sorted(set(want) | set(got)):
        if want.get(k) != got.get(k):
            result.fail(
                f"index {k}: computed "
                f"{'zero' if k not in got else got[k]}, published "
                f"{'zero' if k not in want else want[k]}"
            )
    if matched == len(want) and len(got) == len(want):
        result.lines.append("all entries matched")


def reproduce_example1_shifts() -> ReproResult:
    result = ReproResult("example1-shifts", True)
    system = ResidueSystem((3, 7))
    cfg_a = LfsrConfig.impulse(goldens.POLY_DEG2)
    cfg_b = LfsrConfig.impulse(goldens.POLY_DEG3)
    reference = PeriodicSequence(tuple(product_sequence((cfg_a, cfg_b), 21)))
    for (k1, k2), tau in goldens.SHIFT_CASES_21:
        got = compose_shift((k1, k2), system)
        result.check(
            got == tau, f"shifts ({k1},{k2}) -> {tau}", f"computed {got}"
        )
        shifted = PeriodicSequence(
            tuple(
                x & y
                for x, y in zip(
                    lfsr_generate(cfg_a, 21 + k1)[k1:],
                    lfsr_generate(cfg_b, 21 + k2)[k2:],
                )
            )
        )
        result.check(
            shifted == cyclic_shift(reference, tau),
            f"stream identity for shifts ({k1},{k2})",
            "shifted product != shifted reference",
        )
    return result


def reproduce_example2_spectra() -> ReproResult:
    result = ReproResult("example2-spectra", True)

    ctx2 = make_field(goldens.POLY_DEG2)
    a = PeriodicSequence(tuple(lfsr_generate(LfsrConfig.impulse(goldens.POLY_DEG2), 3)))
    spec_a = dft(a, ctx2, ctx2.x)
    result.check(
        [v.bits for v in spec_a.values] == [0, 1, 1],
        "period-3 spectrum is {0,1,1}",
        f"computed {[v.bits for v in spec_a.values]}",
    )

    ctx3 = make_field(goldens.POLY_DEG3)
    b = PeriodicSequence(tuple(lfsr_generate(LfsrConfig.impulse(goldens.POLY_DEG3), 7)))
    result.check(str(b) == "0010111", "period-7 stream", f"computed {b}")
    spec_b = dft(b, ctx3, ctx3.x)
    result.check(
        _spectrum_exponents(spec_b) == goldens.SPECTRUM_DEG3,
        "period-7 spectrum exponents",
        f"computed {_spectrum_exponents(spec_b)}",
    )

    bits21 = product_sequence(
        (LfsrConfig.impulse(goldens.POLY_DEG2), LfsrConfig.impulse(goldens.POLY_DEG3)), 21
    )
    s21 = PeriodicSequence(tuple(bits21))
    result.check(
        str(s21) == goldens.PRODUCT21_BITS, "21-bit product stream", f"computed {s21}"
    )
    minpoly, lc = min_poly_bm(bits21)
    result.check(
        (minpoly, lc) == (goldens.PRODUCT21_MIN_POLY, 6),
        "product minimal polynomial (degree 6)",
        f"computed {minpoly} with complexity {lc}",
    )
    ctx6 = make_field(goldens.PRODUCT21_MIN_POLY)
    spec_s = dft(s21, ctx6, ctx6.x)
    got = _spectrum_exponents(spec_s)
    result.check(
        got == goldens.SPECTRUM_PRODUCT21,
        "period-21 spectrum exponents",
        f"computed {got}",
    )
    return result


def reproduce_table2() -> ReproResult:
    result = ReproResult("table2", True)
    bits = product_sequence(goldens.product_generator().lfsrs, 651)
    minpoly, lc = min_poly_bm(bits + bits[:60])
    result.check(
        (minpoly, lc) == (goldens.PRODUCT_MIN_POLY, 30),
        "product minimal polynomial (degree 30)",
        f"computed degree {lc}",
    )
    if not result.passed:
        return result
    ctx = make_field(goldens.PRODUCT_MIN_POLY)
    spec = dft(PeriodicSequence(tuple(bits)), ctx, ctx.x)
    _diff_tables(result, _spectrum_exponents(spec), goldens.TABLE_PRODUCT651)
    return result


def reproduce_table3() -> ReproResult:
    result = ReproResult("table3", True)
    z = combiner_sequence(goldens.majority_generator(), 651)
    minpoly, lc = min_poly_bm(z + z[:70])
    result.check(
        (minpoly, lc) == (goldens.MAJORITY_MIN_POLY, 31),
        "combined-stream minimal polynomial (degree 31)",
        f"computed degree {lc}",
    )
    ctx = make_field(goldens.PRODUCT_MIN_POLY)
    spec = dft(PeriodicSequence(tuple(z)), ctx, ctx.x)
    got = _spectrum_exponents(spec)
    _diff_tables(result, got, goldens.TABLE_MAJORITY651_PUBLISHED)
    # structural fallback: the computed spectrum must still satisfy the
    # invariants the published table itself violates
    structural = len(got) == lc
    result.lines.append(
        f"fallback: support size {len(got)} == linear complexity {lc}: "
        f"{'ok' if structural else 'FAILED'}"
    )
    doubling = all(
        got.get(2 * k % 651) == 2 * d % 651 for k, d in got.items()
    )
    result.lines.append(
        f"fallback: computed support/exponents closed under doubling: "
        f"{'ok' if doubling else 'FAILED'}"
    )
    published_doubling = all(
        goldens.TABLE_MAJORITY651_PUBLISHED.get(2 * k % 651) == 2 * d % 651
        for k, d in goldens.TABLE_MAJORITY651_PUBLISHED.items()
    )
    result.lines.append(
        "note: published table "
        f"{'satisfies' if published_doubling else 'violates'} its own "
        "doubling constraint"
    )
    return result


def reproduce_table6() -> ReproResult:
    result = ReproResult("table6", True)
    spec = goldens.majority_generator()
    offset = goldens.ATTACK_OFFSET
    residues = tuple(offset % p for p in spec.periods)
    result.check(
        residues == goldens.ATTACK_RESIDUES,
        f"offset {offset} residues {goldens.ATTACK_RESIDUES}",
        f"computed {residues}",
    )
    states = tuple(
        "".join(map(str, state_at_shift(cfg, r)))
        for cfg, r in zip(spec.lfsrs, residues)
    )
    result.check(
        states == goldens.RECOVERED_STATES,
        f"register states {goldens.RECOVERED_STATES}",
        f"computed {states}",
    )
    reference = reference_sequence(spec)
    refill = spec.with_fills([tuple(int(b) for b in s) for s in states])
    regen = combiner_sequence(refill, 651)
    result.check(
        tuple(regen) == cyclic_shift(reference, offset).bits,
        "regeneration matches the shifted reference stream",
        "regenerated stream diverges",
    )
    return result


def reproduce_attack632() -> ReproResult:
    result = ReproResult("attack632", True)
    spec = goldens.majority_generator()
    reference = reference_sequence(spec)
    result.check(
        str(reference).startswith(goldens.REFERENCE_PREFIX),
        "reference stream prefix",
        f"computed {str(reference)[:16]}",
    )
    report = time_domain_recover(spec, goldens.ATTACK_WINDOW)
    result.check(
        report.tau == goldens.ATTACK_OFFSET,
        f"window offset {goldens.ATTACK_OFFSET}",
        f"computed {report.tau}",
    )
    result.check(
        report.residues == goldens.ATTACK_RESIDUES,
        f"residues {goldens.ATTACK_RESIDUES}",
        f"computed {report.residues}",
    )
    states = tuple("".join(map(str, s)) for s in report.states)
    result.check(
        states == goldens.RECOVERED_STATES,
        f"states {goldens.RECOVERED_STATES}",
        f"computed {states}",
    )
    result.check(report.verified, "window regeneration verified", "not verified")
    regen = combiner_sequence(spec.with_fills(report.states), 651)
    result.check(
        tuple(regen) == cyclic_shift(reference, report.tau).bits,
        "full keystream regeneration",
        "regenerated period diverges",
    )
    return result


TARGETS = {
    "example1-shifts": reproduce_example1_shifts,
    "example2-spectra": reproduce_example2_spectra,
    "table2": reproduce_table2,
    "table3": reproduce_table3,
    "table6": reproduce_table6,
    "attack632": reproduce_attack632,
}


def run_target(name: str) -> ReproResult:
    if name not in TARGETS:
        raise ValueError(
            f"unknown target {name!r}; choose from {', '.join(sorted(TARGETS))}"
        )
    return TARGETS[name]()
