import random

import pytest

from crtseq.combiner import product_sequence
from crtseq.crt import (
    ResidueSystem,
    compose_shift,
    crt_solve,
    decompose_degree,
    map_degree,
    map_support,
    predict_spectrum,
    repetition_counts,
)
from crtseq.galois import (
    BinaryPoly,
    dlog,
    find_irreducible,
    make_field,
    order_n_element,
)
from crtseq.goldens import (
    SPECTRUM_DEG2,
    SPECTRUM_DEG3,
    SPECTRUM_DEG5,
    TABLE_PRODUCT651,
)
from crtseq.sequences import LfsrConfig, PeriodicSequence, lfsr_generate, min_poly_bm
from crtseq.spectra import Spectrum, dft, support

from conftest import POLY_DEG2, POLY_DEG3, POLY_DEG4, POLY_DEG5

SYS37 = ResidueSystem((3, 7))
SYS3731 = ResidueSystem((3, 7, 31))


# ---------------------------------------------------------------------------
# residue solving


def test_crt_solve_examples():
    assert crt_solve((1, 0), SYS37) == 7
    assert crt_solve((1, 3), SYS37) == 10
    assert crt_solve((1, 3, 15), SYS3731) == 325


def test_crt_solve_accepts_negative_residues():
    assert crt_solve((-2, -4), SYS37) == crt_solve((1, 3), SYS37)


def test_crt_solve_round_trip_exhaustive():
    for x in range(21):
        assert crt_solve((x % 3, x % 7), SYS37) == x


def test_non_coprime_rejected():
    with pytest.raises(ValueError, match="moduli not coprime"):
        ResidueSystem((6, 21))


def test_residue_count_mismatch():
    with pytest.raises(ValueError):
        crt_solve((1,), SYS37)


def test_repetition_counts():
    assert repetition_counts(SYS37) == (7, 3)
    assert repetition_counts(SYS3731) == (217, 93, 21)
    assert repetition_counts(ResidueSystem((21,))) == (1,)


def test_compose_shift_examples():
    assert compose_shift((1, 0), SYS37) == 7
    assert compose_shift((0, 0, 0), SYS3731) == 0
    assert compose_shift((2, 0), SYS37) == 14


# ---------------------------------------------------------------------------
# support and degree mapping


def test_map_support_examples():
    assert map_support(({1, 2}, {3, 5, 6}), SYS37) == [5, 10, 13, 17, 19, 20]
    assert map_support((set(), {3, 5, 6}), SYS37) == []
    assert map_support(({1}, {3}), SYS37) == [10]


def test_map_degree_examples():
    assert map_degree((0, 4, 29), SYS3731) == 60
    assert map_degree((0, 0, 0), SYS3731) == 0
    assert map_degree((0, 2), SYS37) == 9


def test_decompose_degree_examples():
    assert decompose_degree(492, SYS3731) == (0, 2, 27)
    assert decompose_degree(0, SYS3731) == (0, 0, 0)
    # the published walk-through states 10 for the mod-31 residue of 101;
    # arithmetic says 8, and the computed residue is what we report
    assert decompose_degree(101, SYS3731) == (2, 3, 8)


def test_decompose_inverts_map():
    rng = random.Random(7)
    for _ in range(50):
        vec = tuple(rng.randrange(m) for m in SYS3731.moduli)
        assert decompose_degree(map_degree(vec, SYS3731), SYS3731) == vec


def test_published_product_table_is_residue_consistent():
    # every published (index, exponent) pair decomposes onto the published
    # constituent spectra
    for k, d in TABLE_PRODUCT651.items():
        assert SPECTRUM_DEG2[k % 3] == d % 3
        assert SPECTRUM_DEG3[k % 7] == d % 7
        assert SPECTRUM_DEG5[k % 31] == d % 31


# ---------------------------------------------------------------------------
# spectrum prediction


def _constituent_spectrum(poly, fill=None):
    ctx = make_field(poly)
    cfg = LfsrConfig.impulse(poly) if fill is None else LfsrConfig(poly, fill)
    n = cfg.period()
    stream = PeriodicSequence(tuple(lfsr_generate(cfg, n)))
    return dft(stream, ctx, ctx.x), cfg


def test_predict_matches_direct_for_pair():
    spec_a, cfg_a = _constituent_spectrum(POLY_DEG2)
    spec_b, cfg_b = _constituent_spectrum(POLY_DEG3)
    ctx = make_field(BinaryPoly.from_exponents([6, 4, 2, 1, 0]))
    predicted = predict_spectrum((spec_a, spec_b), ctx, ctx.x)
    direct = dft(
        PeriodicSequence(tuple(product_sequence((cfg_a, cfg_b), 21))), ctx, ctx.x
    )
    assert predicted.values == direct.values
    assert {k: dlog(predicted.values[k], ctx.x, 21) for k in support(predicted)} == {
        5: 9, 10: 18, 13: 15, 17: 18, 19: 9, 20: 15
    }


def test_predict_reproduces_published_651_table():
    specs = []
    cfgs = []
    for poly in (POLY_DEG2, POLY_DEG3, POLY_DEG5):
        s, cfg = _constituent_spectrum(poly)
        specs.append(s)
        cfgs.append(cfg)
    product_bits = product_sequence(cfgs, 651)
    min_poly, _ = min_poly_bm(product_bits + product_bits[:60])
    ctx = make_field(min_poly)
    predicted = predict_spectrum(specs, ctx, ctx.x)
    got = {k: dlog(predicted.values[k], ctx.x, 651) for k in support(predicted)}
    assert got == TABLE_PRODUCT651


def test_predict_with_zero_constituent():
    spec_a, _ = _constituent_spectrum(POLY_DEG2)
    gf8 = make_field(POLY_DEG3)
    zero_spec = Spectrum(gf8, gf8.x, (gf8.zero,) * 7)
    ctx = make_field(BinaryPoly.from_exponents([6, 4, 2, 1, 0]))
    predicted = predict_spectrum((spec_a, zero_spec), ctx, ctx.x)
    assert all(v.is_zero() for v in predicted.values)


def test_predict_rejects_wrong_order_base():
    spec_a, _ = _constituent_spectrum(POLY_DEG2)
    spec_b, _ = _constituent_spectrum(POLY_DEG3)
    ctx = make_field(BinaryPoly.from_exponents([6, 4, 2, 1, 0]))
    with pytest.raises(ValueError, match="order"):
        predict_spectrum((spec_a, spec_b), ctx, ctx.one)


def test_predict_rejects_misaligned_base():
    # among the order-21 elements of a foreign GF(2^6), those whose
    # order-7 component is a root of the wrong cubic must be rejected
    # rather than silently mislabel exponents; the aligned ones must
    # agree with the direct transform
    from crtseq.galois import element_order

    spec_a, cfg_a = _constituent_spectrum(POLY_DEG2)
    spec_b, cfg_b = _constituent_spectrum(POLY_DEG3)
    ctx = make_field(find_irreducible(6))
    product = PeriodicSequence(tuple(product_sequence((cfg_a, cfg_b), 21)))
    e = order_n_element(ctx, 21)
    outcomes = {"aligned": 0, "misaligned": 0}
    for d in range(1, 21):
        cand = e ** d
        if element_order(cand) != 21:
            continue
        try:
            predicted = predict_spectrum((spec_a, spec_b), ctx, cand)
        except ValueError as exc:
            assert "misaligned" in str(exc)
            outcomes["misaligned"] += 1
            continue
        assert predicted.values == dft(product, ctx, cand).values
        outcomes["aligned"] += 1
    assert outcomes["aligned"] == 6
    assert outcomes["misaligned"] == 6


# ---------------------------------------------------------------------------
# oracle equivalence across random fills


def test_predict_oracle_equivalence_random_fills():
    rng = random.Random(20260809)
    combos = [
        (POLY_DEG2, POLY_DEG3),
        (POLY_DEG2, POLY_DEG5),
        (POLY_DEG3, POLY_DEG5),
        (POLY_DEG3, POLY_DEG4),
    ]
    for polys in combos:
        cfgs_canonical = tuple(LfsrConfig.impulse(p) for p in polys)
        n = 1
        for cfg in cfgs_canonical:
            n *= cfg.period()
        canonical_bits = product_sequence(cfgs_canonical, n)
        min_poly, _ = min_poly_bm(canonical_bits + canonical_bits)
        ctx = make_field(min_poly)
        for _ in range(3):
            fills = []
            for p in polys:
                m = p.degree
                fill = 0
                while fill == 0:
                    fill = rng.randrange(1, 1 << m)
                fills.append(tuple((fill >> i) & 1 for i in range(m)))
            cfgs = tuple(LfsrConfig(p, f) for p, f in zip(polys, fills))
            specs = [
                dft(
                    PeriodicSequence(tuple(lfsr_generate(cfg, cfg.period()))),
                    make_field(cfg.feedback),
                    make_field(cfg.feedback).x,
                )
                for cfg in cfgs
            ]
            predicted = predict_spectrum(specs, ctx, ctx.x)
            direct = dft(
                PeriodicSequence(tuple(product_sequence(cfgs, n))), ctx, ctx.x
            )
            assert predicted.values == direct.values
