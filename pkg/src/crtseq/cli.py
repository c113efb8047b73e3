"""Command-line front end.

Subcommands: gen, analyze, dft, crt, predict, attack, reproduce, bench.
Exit codes: 0 success, 2 reproduction mismatch, 3 input error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import fileformats, reproduce
from .attack import DEFAULT_PERIOD_LIMIT, time_domain_recover
from .bench import run_bench
from .combiner import combiner_sequence, product_sequence, reference_sequence
from .crt import ResidueSystem, crt_solve, predict_spectrum
from .galois import make_field
from .sequences import PeriodicSequence, lfsr_generate, min_poly_bm
from .spectra import dft, dft_context, support

EXIT_OK = 0
EXIT_MISMATCH = 2
EXIT_INPUT = 3


def _read(path: str) -> str:
    return sys.stdin.read() if path == "-" else Path(path).read_text()


def _write(path: str, text: str):
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _load_generator(path: str):
    spec = fileformats.read_generator(_read(path))
    if spec.f.has_constant_term:
        print("note: combining function has a constant term; stream is complemented")
    return spec


def cmd_gen(args) -> int:
    spec = _load_generator(args.specfile)
    bits = combiner_sequence(spec, args.count)
    _write(args.output, fileformats.write_sequence(bits))
    return EXIT_OK


def _analyzed_spectrum(n: int, bits: list[int]):
    min_poly, lc = min_poly_bm(bits + bits)
    # the recurrence must hold cyclically over the declared period
    exps = min_poly.exponents()
    for t in range(n):
        acc = 0
        for e in exps:
            acc ^= bits[(t + e) % n]
        if acc:
            raise ValueError(
                "minimal polynomial did not converge; "
                "sequence is not linear over the declared period"
            )
    ctx, base = dft_context(min_poly, n)
    spectrum = dft(PeriodicSequence(tuple(bits)), ctx, base)
    return min_poly, lc, spectrum


def cmd_analyze(args) -> int:
    n, bits = fileformats.read_sequence(_read(args.seqfile))
    if n == 0:
        raise ValueError("empty sequence")
    min_poly, lc, spectrum = _analyzed_spectrum(n, bits)
    supp = support(spectrum)
    print(f"period={n}")
    print(f"linear_complexity={lc}")
    print(f"min_poly={min_poly.to_hex()}")
    print(f"support_size={len(supp)}")
    print(f"support={','.join(map(str, supp))}")
    print(f"cross_check={'ok' if len(supp) == lc else 'FAILED'}")
    if args.spectrum:
        _write(args.spectrum, fileformats.write_spectrum(spectrum))
    return EXIT_OK if len(supp) == lc else EXIT_MISMATCH


def cmd_dft(args) -> int:
    n, bits = fileformats.read_sequence(_read(args.seqfile))
    if n == 0:
        raise ValueError("empty sequence")
    _, _, spectrum = _analyzed_spectrum(n, bits)
    _write(args.output, fileformats.write_spectrum(spectrum))
    return EXIT_OK


def cmd_crt(args) -> int:
    residues, moduli = [], []
    for token in args.residues:
        try:
            r_txt, m_txt = token.split("/")
            residues.append(int(r_txt))
            moduli.append(int(m_txt))
        except ValueError:
            raise ValueError(f"bad residue token {token!r}; expected r/m") from None
    system = ResidueSystem(tuple(moduli))
    print(f"x={crt_solve(residues, system)}")
    print(f"modulus={system.modulus}")
    return EXIT_OK


def cmd_predict(args) -> int:
    spec = _load_generator(args.specfile)
    n = spec.combined_period
    if n > args.period_limit:
        raise ValueError(f"combined period {n} exceeds limit {args.period_limit}")
    streams = [
        PeriodicSequence(tuple(lfsr_generate(cfg, p)))
        for cfg, p in zip(spec.lfsrs, spec.periods)
    ]
    ctxs = [make_field(cfg.feedback) for cfg in spec.lfsrs]
    constituent = [dft(s, ctx, ctx.x) for s, ctx in zip(streams, ctxs)]

    product_bits = product_sequence(spec.lfsrs, n)
    min_poly, _ = min_poly_bm(product_bits + product_bits)
    ctx, base = dft_context(min_poly, n)
    predicted = predict_spectrum(constituent, ctx, base)
    if not spec.f.monomials == {(1 << spec.f.r) - 1}:
        print("note: prediction covers the product of the registers")
    if args.check:
        direct = dft(PeriodicSequence(tuple(product_bits)), ctx, base)
        ok = direct.values == predicted.values
        print(f"check={'ok' if ok else 'FAILED'}")
        if not ok:
            return EXIT_MISMATCH
    _write(args.output, fileformats.write_spectrum(predicted))
    return EXIT_OK


def cmd_attack(args) -> int:
    spec = _load_generator(args.specfile)
    if args.bits:
        window = args.bits
    else:
        _, window = fileformats.read_sequence(_read(args.seq))
    if any(str(b) not in "01" for b in window):
        raise ValueError("keystream must be '0'/'1' bits")
    report = time_domain_recover(spec, window, period_limit=args.period_limit)
    print(f"tau={report.tau}")
    print(f"residues={','.join(map(str, report.residues))}")
    print(f"states={report.states_str()}")
    print(f"verified={'true' if report.verified else 'false'}")
    if report.ambiguity_count > 1:
        print(f"ambiguity_count={report.ambiguity_count}")
        print(f"candidates={','.join(str(c.tau) for c in report.candidates)}")
    for note in report.notes:
        print(f"note: {note}")
    return EXIT_OK


def cmd_reproduce(args) -> int:
    names = sorted(reproduce.TARGETS) if args.target == "all" else [args.target]
    worst = EXIT_OK
    for name in names:
        result = reproduce.run_target(name)
        print(f"target={result.target}")
        for line in result.lines:
            print(f"  {line}")
        print(f"result={'pass' if result.passed else 'FAIL'}")
        if result.first_divergence:
            print(f"first_divergence={result.first_divergence}")
        if not result.passed:
            worst = EXIT_MISMATCH
    return worst


def cmd_bench(args) -> int:
    degrees = [int(d) for d in args.degrees.split(",")]
    report = run_bench(degrees, args.trials)
    for line in report.lines():
        print(line)
    return EXIT_OK if report.gate_passed else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crtseq",
        description="CRT-based spectral analysis of LFSR combiner generators",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a keystream from a generator spec")
    p.add_argument("specfile")
    p.add_argument("--count", type=int, required=True)
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("analyze", help="linear complexity and spectral support")
    p.add_argument("seqfile")
    p.add_argument("--spectrum", help="also write the spectrum CSV here")
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser("dft", help="transform a sequence file to a spectrum CSV")
    p.add_argument("seqfile")
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(fn=cmd_dft)

    p = sub.add_parser("crt", help="solve simultaneous congruences r/m ...")
    p.add_argument("residues", nargs="+", metavar="r/m")
    p.set_defaults(fn=cmd_crt)

    p = sub.add_parser(
        "predict", help="product spectrum from constituent spectra via CRT"
    )
    p.add_argument("specfile")
    p.add_argument("-o", "--output", default="-")
    p.add_argument("--check", action="store_true",
                   help="also run the direct transform and compare")
    p.add_argument("--period-limit", type=int, default=DEFAULT_PERIOD_LIMIT)
    p.set_defaults(fn=cmd_predict)

    p = sub.add_parser("attack", help="recover register states from known bits")
    p.add_argument("specfile")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--bits", help="known keystream bits as a 0/1 string")
    group.add_argument("--seq", help="known keystream as a sequence file")
    p.add_argument("--period-limit", type=int, default=DEFAULT_PERIOD_LIMIT)
    p.set_defaults(fn=cmd_attack)

    p = sub.add_parser("reproduce", help="diff pipelines against published data")
    p.add_argument(
        "target", choices=sorted(reproduce.TARGETS) + ["all"], metavar="target"
    )
    p.set_defaults(fn=cmd_reproduce)

    p = sub.add_parser("bench", help="time direct DFT against the CRT route")
    p.add_argument("--degrees", default="2,3,5")
    p.add_argument("--trials", type=int, default=5)
    p.set_defaults(fn=cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
