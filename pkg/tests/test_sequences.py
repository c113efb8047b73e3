import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crtseq.galois import BinaryPoly
from crtseq.sequences import (
    LfsrConfig,
    PeriodicSequence,
    cyclic_shift,
    lfsr_generate,
    locate_window,
    min_poly_bm,
    state_at_shift,
    trace_sequence,
)
from crtseq.combiner import product_sequence

from conftest import POLY_DEG2, POLY_DEG3, POLY_DEG5

M31 = BinaryPoly.from_exponents(
    [31, 29, 28, 27, 24, 23, 22, 20, 18, 17, 16, 15, 13, 11, 10, 9, 8, 7, 5, 4, 2, 1, 0]
)


def bits(s):
    return [int(c) for c in s]


# ---------------------------------------------------------------------------
# generation


def test_lfsr_generate_examples():
    assert lfsr_generate(LfsrConfig(POLY_DEG2, (0, 1)), 3) == bits("011")
    assert lfsr_generate(LfsrConfig(POLY_DEG3, (0, 0, 1)), 7) == bits("0010111")
    # s[t+5] = s[t+2] + s[t] applied by hand
    assert lfsr_generate(LfsrConfig.impulse(POLY_DEG5), 10) == bits("0000100101")


def test_lfsr_config_validation():
    with pytest.raises(ValueError):
        LfsrConfig(BinaryPoly(0b110), (0, 1))  # no constant term
    with pytest.raises(ValueError):
        LfsrConfig(POLY_DEG3, (0, 1))  # wrong fill length
    with pytest.raises(ValueError):
        LfsrConfig(POLY_DEG3, (0, 0, 0))  # zero fill


@pytest.mark.parametrize("poly,m", [(POLY_DEG2, 2), (POLY_DEG3, 3), (POLY_DEG5, 5)])
def test_maximal_period_for_primitive_feedback(poly, m):
    n = (1 << m) - 1
    for fill_bits in range(1, 1 << m):
        fill = tuple((fill_bits >> i) & 1 for i in range(m))
        stream = lfsr_generate(LfsrConfig(poly, fill), 2 * n)
        assert stream[:n] == stream[n:]
        # no smaller period
        for d in range(1, n):
            if n % d == 0 and stream[:d] * (n // d) == stream[:n]:
                pytest.fail(f"period {d} < {n} for fill {fill}")


# ---------------------------------------------------------------------------
# Berlekamp-Massey


def test_bm_period21_product():
    s = product_sequence(
        (LfsrConfig.impulse(POLY_DEG2), LfsrConfig.impulse(POLY_DEG3)), 21
    )
    assert min_poly_bm(s) == (BinaryPoly.from_exponents([6, 4, 2, 1, 0]), 6)


def test_bm_msequence():
    assert min_poly_bm(bits("0010111" * 2)) == (POLY_DEG3, 3)


def test_bm_majority_combiner_degree31():
    from crtseq.goldens import majority_generator
    from crtseq.combiner import combiner_sequence

    z = combiner_sequence(majority_generator(), 1302)
    assert min_poly_bm(z) == (M31, 31)


def test_bm_empty_and_zero():
    with pytest.raises(ValueError):
        min_poly_bm([])
    assert min_poly_bm([0, 0, 0, 0]) == (BinaryPoly(1), 0)


def test_bm_round_trips_feedback():
    for poly in (POLY_DEG2, POLY_DEG3, POLY_DEG5):
        m = poly.degree
        for fill_bits in (1, 3, (1 << m) - 1):
            fill = tuple((fill_bits >> i) & 1 for i in range(m))
            stream = lfsr_generate(LfsrConfig(poly, fill), 2 * m)
            assert min_poly_bm(stream) == (poly, m)


# ---------------------------------------------------------------------------
# shifts and windows


def test_cyclic_shift_examples():
    assert cyclic_shift(PeriodicSequence.from_bits(bits("011")), 0).bits == (0, 1, 1)
    assert str(cyclic_shift(PeriodicSequence.from_bits(bits("0010111")), 1)) == "0101110"


def test_shift_additivity():
    s = PeriodicSequence.from_bits(bits("0010111"))
    for a in range(-3, 9):
        for b in range(-3, 9):
            assert cyclic_shift(cyclic_shift(s, a), b) == cyclic_shift(s, a + b)


def test_product_shift_by_seven():
    # one left shift of the short register shifts the 21-bit product by 7
    cfg_a, cfg_b = LfsrConfig.impulse(POLY_DEG2), LfsrConfig.impulse(POLY_DEG3)
    ref = PeriodicSequence.from_bits(product_sequence((cfg_a, cfg_b), 21))
    a_shifted = lfsr_generate(cfg_a, 22)[1:]
    b_stream = lfsr_generate(cfg_b, 21)
    shifted = PeriodicSequence.from_bits(
        [x & y for x, y in zip(a_shifted, b_stream)]
    )
    assert shifted == cyclic_shift(ref, 7)


def test_locate_window_examples():
    from crtseq.goldens import majority_generator
    from crtseq.combiner import reference_sequence

    z = reference_sequence(majority_generator())
    assert locate_window(z, bits("1011110001")) == [632]
    assert locate_window(z, z.bits) == [0]
    assert locate_window(PeriodicSequence.from_bits(bits("0010111")), bits("000")) == []


def test_locate_window_contains_source_offset():
    s = PeriodicSequence.from_bits(bits("001011000001010010011"))
    for i in range(21):
        assert i in locate_window(s, s.window(i, 9))


def test_locate_window_longer_than_period():
    s = PeriodicSequence.from_bits(bits("0010111"))
    assert locate_window(s, bits("00101110010111")) == [0]


# ---------------------------------------------------------------------------
# trace representation


def test_trace_sequence_is_rotation_of_msequence(gf8):
    got = trace_sequence(gf8, gf8.one, gf8.x, 7)
    rotations = {
        str(cyclic_shift(PeriodicSequence.from_bits(bits("0010111")), i))
        for i in range(7)
    }
    assert "".join(map(str, got)) in rotations


def test_trace_sequence_gf4(gf4):
    got = trace_sequence(gf4, gf4.one, gf4.x, 3)
    assert "".join(map(str, got)) in {"011", "110", "101"}


def test_trace_sequence_enumerates_shift_space(gf8):
    seen = set()
    for b in range(1, 8):
        seen.add("".join(map(str, trace_sequence(gf8, gf8.elt(b), gf8.x, 7))))
    expected = {
        str(cyclic_shift(PeriodicSequence.from_bits(bits("0010111")), i))
        for i in range(7)
    }
    assert seen == expected


def test_trace_sequence_zero_beta(gf8):
    with pytest.raises(ValueError):
        trace_sequence(gf8, gf8.zero, gf8.x, 3)


def test_shift_space_xor_closure():
    # shifts of an m-sequence plus the zero sequence form a linear space
    stream = PeriodicSequence.from_bits(bits("0010111"))
    space = {cyclic_shift(stream, i).bits for i in range(7)} | {(0,) * 7}
    for u in space:
        for v in space:
            w = tuple(a ^ b for a, b in zip(u, v))
            assert w in space


# ---------------------------------------------------------------------------
# state from shift


def test_state_at_shift_examples():
    # offsets follow the defining identity: state = canonical stream window
    assert state_at_shift(LfsrConfig.impulse(POLY_DEG2), 2) == (1, 0)
    assert state_at_shift(LfsrConfig.impulse(POLY_DEG3), 0) == (0, 0, 1)
    assert state_at_shift(LfsrConfig.impulse(POLY_DEG3), 2) == (1, 0, 1)
    assert state_at_shift(LfsrConfig.impulse(POLY_DEG5), 12) == (0, 1, 1, 1, 1)


@settings(max_examples=40, deadline=None)
@given(tau=st.integers(min_value=-40, max_value=80))
def test_state_at_shift_defining_property(tau):
    cfg = LfsrConfig.impulse(POLY_DEG5)
    state = state_at_shift(cfg, tau)
    regenerated = lfsr_generate(LfsrConfig(POLY_DEG5, state), 31)
    canonical = lfsr_generate(cfg, 31)
    expected = cyclic_shift(PeriodicSequence.from_bits(canonical), tau)
    assert PeriodicSequence.from_bits(regenerated) == expected
