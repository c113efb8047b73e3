"""Timing comparison: direct large-field DFT versus the CRT route.

The direct route evaluates all N spectral points of the product sequence
in GF(2^m) -- the O(N^2) field-multiply loop.  The CRT route transforms
each constituent in its own small field and lifts supports and exponents
by residue arithmetic, touching only linear-complexity many points of
the large field.  Cost model, in field multiplications:

    direct:    ~ N^2                    (N = combined period)
    crt route: ~ sum(n_i^2) + L * m     (L = linear complexity)

The model is documentation, not an assertion; what the benchmark asserts
is spectrum equality between the two routes (the correctness gate) --
timings are only reported when the gate passed in the same invocation.
When the compiled kernel backend is present, the direct route is also
timed against the pure-Python backend for the same work.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from . import kernels
from .combiner import product_sequence
from .crt import predict_spectrum
from .galois import find_primitive, make_field
from .sequences import LfsrConfig, PeriodicSequence, lfsr_generate, min_poly_bm
from .spectra import Spectrum, dft

__all__ = ["BenchReport", "run_bench"]


@dataclass
class BenchReport:
    degrees: tuple[int, ...]
    period: int
    gate_passed: bool
    direct_seconds: float
    crt_seconds: float
    ratio: float
    backend: str
    pure_direct_seconds: float | None = None

    def lines(self) -> list[str]:
        out = [
            f"backend={self.backend}",
            f"degrees={','.join(map(str, self.degrees))}",
            f"period={self.period}",
            f"gate={'ok (spectra equal)' if self.gate_passed else 'FAILED'}",
            f"direct_dft_s={self.direct_seconds:.6f}",
            f"crt_path_s={self.crt_seconds:.6f}",
            f"ratio={self.ratio:.2f}",
        ]
        if self.pure_direct_seconds is not None:
            out.append(f"pure_direct_dft_s={self.pure_direct_seconds:.6f}")
            if self.direct_seconds > 0:
                out.append(
                    f"compiled_speedup={self.pure_direct_seconds / self.direct_seconds:.2f}"
                )
        out.append("cost_model=direct ~ N^2 field mults; crt ~ sum(n_i^2) + L*m")
        return out


def _best_of(fn, trials: int) -> float:
    best = float("inf")
    for _ in range(trials):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def run_bench(degrees, trials: int = 5) -> BenchReport:
    """Measure both routes over the product of registers of the given degrees."""
    degrees = tuple(degrees)
    if len(degrees) < 2:
        raise ValueError("nothing to compose; need at least two degrees")
    if trials < 1:
        raise ValueError("trials must be >= 1")

    configs = tuple(LfsrConfig.impulse(find_primitive(d)) for d in degrees)
    periods = tuple(cfg.period() for cfg in configs)
    n_total = 1
    for p in periods:
        n_total *= p
    # the minimal polynomial fixes the target field for both routes
    bits = product_sequence(configs, n_total)
    seq = PeriodicSequence(tuple(bits))
    min_poly, _ = min_poly_bm(bits + bits[: 4 * sum(degrees)])
    target_ctx = make_field(min_poly)
    target_base = target_ctx.x

    streams = [
        PeriodicSequence(tuple(lfsr_generate(cfg, p)))
        for cfg, p in zip(configs, periods)
    ]
    ctxs = [make_field(cfg.feedback) for cfg in configs]

    def direct() -> Spectrum:
        return dft(seq, target_ctx, target_base)

    def crt_route() -> Spectrum:
        constituent = [
            dft(stream, ctx, ctx.x) for stream, ctx in zip(streams, ctxs)
        ]
        return predict_spectrum(constituent, target_ctx, target_base)

    # correctness gate before any timing is trusted
    gate = direct().values == crt_route().values
    if not gate:
        return BenchReport(
            degrees, n_total, False, 0.0, 0.0, 0.0, kernels.backend_name()
        )

    direct_s = _best_of(direct, trials)
    crt_s = _best_of(crt_route, trials)

    pure_s = None
    if kernels.compiled_available():
        coeffs = list(seq.bits)
        pure_s = _best_of(
            lambda: kernels.pure.gf2_dft(
                coeffs, target_base.bits, target_ctx._mod_bits
            ),
            trials,
        )

    return BenchReport(
        degrees=degrees,
        period=n_total,
        gate_passed=True,
        direct_seconds=direct_s,
        crt_seconds=crt_s,
        ratio=direct_s / crt_s if crt_s > 0 else float("inf"),
        backend=kernels.backend_name(),
        pure_direct_seconds=pure_s,
    )
