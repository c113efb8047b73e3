"""The two kernel backends must agree bit for bit."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crtseq import kernels
from crtseq import _kernels_py as pure

try:
    from crtseq import _kernels as compiled
except ImportError:
    compiled = None

MODULI = [
    0b111,  # degree 2
    0b1011,  # degree 3
    0b100101,  # degree 5
    0x431B2795,  # degree 30
    (1 << 31) | 0b1001,  # degree 31
]

needs_compiled = pytest.mark.skipif(
    compiled is None, reason="compiled kernels not built"
)


def reduced(mod):
    return st.integers(min_value=0, max_value=(1 << (mod.bit_length() - 1)) - 1)


@needs_compiled
@settings(max_examples=200, deadline=None)
@given(data=st.data(), mod=st.sampled_from(MODULI))
def test_mulmod_backends_agree(data, mod):
    a = data.draw(reduced(mod))
    b = data.draw(reduced(mod))
    assert compiled.gf2_mulmod(a, b, mod) == pure.gf2_mulmod(a, b, mod)


@needs_compiled
@settings(max_examples=100, deadline=None)
@given(data=st.data(), mod=st.sampled_from(MODULI),
       e=st.integers(min_value=0, max_value=1 << 40))
def test_powmod_backends_agree(data, mod, e):
    a = data.draw(reduced(mod))
    assert compiled.gf2_powmod(a, e, mod) == pure.gf2_powmod(a, e, mod)


@needs_compiled
@settings(max_examples=50, deadline=None)
@given(data=st.data(), mod=st.sampled_from(MODULI))
def test_evalmod_and_dft_backends_agree(data, mod):
    coeffs = data.draw(st.lists(reduced(mod), min_size=1, max_size=40))
    point = data.draw(reduced(mod))
    base = data.draw(reduced(mod))
    assert compiled.gf2_evalmod(coeffs, point, mod) == pure.gf2_evalmod(
        coeffs, point, mod
    )
    assert compiled.gf2_dft(coeffs, base, mod) == pure.gf2_dft(coeffs, base, mod)


def test_dispatch_routes_large_moduli_to_pure():
    # degree-70 modulus exceeds the compiled word size but must still work
    mod = (1 << 70) | 0b11
    a = (1 << 69) | 5
    assert kernels.gf2_mulmod(a, a, mod) == pure.gf2_mulmod(a, a, mod)


def test_mul_identities():
    for mod in MODULI:
        assert kernels.gf2_mulmod(0, 2, mod) == 0
        assert kernels.gf2_mulmod(1, 2, mod) == 2


def test_dft_empty_and_parity():
    assert kernels.gf2_dft([], 1, 0b111) == []
    # index 0 of any transform is the bit parity
    out = kernels.gf2_dft([1, 0, 1], 0b10, 0b111)
    assert out[0] == 0


def test_clmul_and_mod():
    assert kernels.gf2_clmul(0b11, 0b11) == 0b101
    assert kernels.gf2_mod(0b1011, 0b111) == 0b10
