"""Backend selection for the hot GF(2^m) kernels.

The compiled extension is used when it imported successfully and the
modulus fits in a 64-bit word; everything else runs on the pure-Python
twin.  Setting the environment variable ``CRTSEQ_PURE`` (to anything
non-empty) forces the pure backend, which the benchmark uses to compare
the two.
"""

from __future__ import annotations

import os

from . import _kernels_py as pure

try:
    from . import _kernels as _compiled
except ImportError:
    _compiled = None

if os.environ.get("CRTSEQ_PURE"):
    _compiled = None

# Compiled kernels hold operands in 64-bit words: modulus degree <= 63.
_WORD_BITS = 64

gf2_clmul = pure.gf2_clmul
gf2_mod = pure.gf2_mod


def compiled_available() -> bool:
    return _compiled is not None


def backend_name() -> str:
    return "compiled" if _compiled is not None else "pure"


def gf2_mulmod(a: int, b: int, mod: int) -> int:
    if _compiled is not None and mod.bit_length() <= _WORD_BITS:
        return _compiled.gf2_mulmod(a, b, mod)
    return pure.gf2_mulmod(a, b, mod)


def gf2_powmod(a: int, e: int, mod: int) -> int:
    if _compiled is not None and mod.bit_length() <= _WORD_BITS:
        return _compiled.gf2_powmod(a, e, mod)
    return pure.gf2_powmod(a, e, mod)


def gf2_evalmod(coeffs, point: int, mod: int) -> int:
    if _compiled is not None and mod.bit_length() <= _WORD_BITS:
        return _compiled.gf2_evalmod(coeffs, point, mod)
    return pure.gf2_evalmod(coeffs, point, mod)


def gf2_dft(coeffs, base: int, mod: int) -> list:
    if _compiled is not None and mod.bit_length() <= _WORD_BITS:
        return _compiled.gf2_dft(coeffs, base, mod)
    return pure.gf2_dft(coeffs, base, mod)
