"""On-disk formats for sequences, generator specs, and spectra.

Sequence file:        line 1 ``period <n>``, line 2 the bits as '0'/'1'.
Generator spec file:  one ``lfsr <poly-hex> <init-bits>`` line per
                      register, then optionally ``anf <mask-list>`` with
                      comma-separated hex monomial masks (default: the
                      product of all registers).  '#' starts a comment.
Spectrum file (CSV):  header ``n,<n>,modulus,<poly-hex>``, then one
                      ``k,<exponent>`` row per non-zero component, the
                      exponent taken to the conventional base: x when x
                      has order n in the stored field, otherwise the
                      deterministically chosen order-n element.
"""

from __future__ import annotations

from .combiner import AnfFunction, GeneratorSpec
from .galois import (
    BinaryPoly,
    FieldElt,
    dlog,
    element_order,
    make_field,
    order_n_element,
)
from .sequences import LfsrConfig
from .spectra import Spectrum, support

__all__ = [
    "read_sequence",
    "write_sequence",
    "read_generator",
    "write_generator",
    "read_spectrum",
    "write_spectrum",
]


def write_sequence(bits) -> str:
    bits = list(bits)
    return f"period {len(bits)}\n" + "".join(str(int(b)) for b in bits) + "\n"


def read_sequence(text: str) -> tuple[int, list[int]]:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("period"):
        raise ValueError("line 1: expected 'period <n>'")
    try:
        n = int(lines[0].split()[1])
    except (IndexError, ValueError):
        raise ValueError("line 1: expected 'period <n>'") from None
    payload = "".join(lines[1:])
    if any(ch not in "01" for ch in payload):
        raise ValueError("line 2: sequence must be '0'/'1' characters")
    bits = [int(ch) for ch in payload]
    if len(bits) != n:
        raise ValueError(f"line 2: expected {n} bits, found {len(bits)}")
    return n, bits


def write_generator(spec: GeneratorSpec) -> str:
    lines = [
        f"lfsr {cfg.feedback.to_hex()} {cfg.init_str()}" for cfg in spec.lfsrs
    ]
    masks = ",".join(format(m, "X") for m in sorted(spec.f.monomials))
    lines.append(f"anf {masks}")
    return "\n".join(lines) + "\n"


def read_generator(text: str) -> GeneratorSpec:
    lfsrs: list[LfsrConfig] = []
    anf: AnfFunction | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        try:
            if fields[0] == "lfsr":
                if len(fields) != 3:
                    raise ValueError("expected 'lfsr <poly-hex> <init-bits>'")
                lfsrs.append(LfsrConfig.parse(fields[1], fields[2]))
            elif fields[0] == "anf":
                if len(fields) != 2:
                    raise ValueError("expected 'anf <mask-list>'")
                masks = [int(tok, 16) for tok in fields[1].split(",")]
                anf = AnfFunction.from_masks(len(lfsrs), masks)
            else:
                raise ValueError(f"unknown directive {fields[0]!r}")
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    if not lfsrs:
        raise ValueError("no 'lfsr' lines found")
    if anf is None:
        anf = AnfFunction.product_of_all(len(lfsrs))
    return GeneratorSpec(tuple(lfsrs), anf)


def conventional_base(modulus: BinaryPoly, n: int) -> FieldElt:
    """The base a spectrum file implies: x if it has order n, else the
    deterministic order-n element."""
    ctx = make_field(modulus)
    x = ctx.x
    if element_order(x) == n:
        return x
    return order_n_element(ctx, n)


def write_spectrum(spec: Spectrum) -> str:
    n = spec.period
    rows = [f"n,{n},modulus,{spec.ctx.modulus.to_hex()}"]
    for k in support(spec):
        rows.append(f"{k},{dlog(spec.values[k], spec.base, n)}")
    return "\n".join(rows) + "\n"


def read_spectrum(text: str) -> Spectrum:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty spectrum file")
    header = lines[0].split(",")
    if len(header) != 4 or header[0] != "n" or header[2] != "modulus":
        raise ValueError("line 1: expected 'n,<n>,modulus,<poly-hex>'")
    n = int(header[1])
    base = conventional_base(BinaryPoly.from_hex(header[3]), n)
    ctx = base.ctx
    values = [ctx.zero] * n
    for lineno, row in enumerate(lines[1:], start=2):
        try:
            k_txt, d_txt = row.split(",")
            k, d = int(k_txt), int(d_txt)
        except ValueError:
            raise ValueError(f"line {lineno}: expected 'k,<exponent>'") from None
        if not 0 <= k < n:
            raise ValueError(f"line {lineno}: index {k} out of range")
        values[k] = base**d
    return Spectrum(ctx, base, tuple(values))
