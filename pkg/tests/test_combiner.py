import random

import pytest

from crtseq.combiner import (
    AnfFunction,
    GeneratorSpec,
    combiner_sequence,
    product_sequence,
    reference_sequence,
)
from crtseq.crt import ResidueSystem, compose_shift
from crtseq.goldens import majority_generator, product_generator
from crtseq.sequences import (
    LfsrConfig,
    PeriodicSequence,
    cyclic_shift,
    lfsr_generate,
    min_poly_bm,
)

from conftest import POLY_DEG2, POLY_DEG3, POLY_DEG4


MAJORITY = AnfFunction.from_masks(3, (0b011, 0b110, 0b101))


def test_anf_eval_majority():
    assert MAJORITY.eval((1, 1, 0)) == 1
    assert MAJORITY.eval((0, 0, 0)) == 0
    assert MAJORITY.eval((1, 1, 1)) == 1  # 1+1+1 over GF(2)


def test_anf_arity_mismatch():
    with pytest.raises(ValueError, match="arity"):
        MAJORITY.eval((1, 0))


def test_anf_rejects_out_of_range_mask():
    with pytest.raises(ValueError):
        AnfFunction.from_masks(2, (0b100,))


def test_anf_from_truth_table():
    table = [MAJORITY.eval(((m >> 0) & 1, (m >> 1) & 1, (m >> 2) & 1)) for m in range(8)]
    assert AnfFunction.from_truth_table(table) == MAJORITY
    # constant one
    assert AnfFunction.from_truth_table([1, 1]).monomials == frozenset({0})
    assert AnfFunction.from_truth_table([1, 1]).has_constant_term


def test_anf_str():
    assert str(MAJORITY) == "x1*x2 + x1*x3 + x2*x3"


def test_product_sequence_21():
    bits = product_sequence(
        (LfsrConfig.impulse(POLY_DEG2), LfsrConfig.impulse(POLY_DEG3)), 21
    )
    assert "".join(map(str, bits)) == "001011000001010010011"


def test_product_period_651():
    assert product_generator().combined_period == 651


def test_zero_fill_rejected_at_config_level():
    with pytest.raises(ValueError, match="all-zero"):
        LfsrConfig(POLY_DEG3, (0, 0, 0))


def test_combiner_reference_prefix():
    assert (
        "".join(map(str, combiner_sequence(majority_generator(), 16)))
        == "0010110101110110"
    )


def test_single_monomial_equals_product():
    spec = product_generator()
    assert combiner_sequence(spec, 100) == product_sequence(spec.lfsrs, 100)


def test_combiner_linear_complexity_31():
    z = combiner_sequence(majority_generator(), 1302)
    _, lc = min_poly_bm(z)
    assert lc == 31


def test_generator_spec_validation():
    with pytest.raises(ValueError, match="arity"):
        GeneratorSpec((LfsrConfig.impulse(POLY_DEG2),), MAJORITY)
    # periods 7 and 7 share every factor
    with pytest.raises(ValueError, match="not coprime"):
        GeneratorSpec(
            (LfsrConfig.impulse(POLY_DEG3), LfsrConfig.impulse(POLY_DEG3)),
            AnfFunction.product_of_all(2),
        )
    # periods 15 and 3 share the factor 3
    with pytest.raises(ValueError, match="not coprime"):
        GeneratorSpec(
            (LfsrConfig.impulse(POLY_DEG4), LfsrConfig.impulse(POLY_DEG2)),
            AnfFunction.product_of_all(2),
        )


def test_reference_sequence_period_limit():
    with pytest.raises(ValueError, match="exceeds limit"):
        reference_sequence(majority_generator(), period_limit=100)


def test_majority_period_is_exactly_651():
    z = reference_sequence(majority_generator())
    for d in (3, 7, 21, 31, 93, 217):
        assert z.bits[:d] * (651 // d) != z.bits


def _shifted_stream(poly, shift, count):
    return lfsr_generate(LfsrConfig.impulse(poly), count + shift)[shift:]


@pytest.mark.parametrize("f", [
    AnfFunction.product_of_all(2),
    None,  # filled with a seeded random function below
])
def test_shift_composition_exhaustive_21(f):
    if f is None:
        rng = random.Random(99)
        masks = [m for m in range(4) if rng.random() < 0.6] or [0b11]
        f = AnfFunction.from_masks(2, masks)
    system = ResidueSystem((3, 7))
    reference = PeriodicSequence(
        tuple(
            f.eval(p)
            for p in zip(
                lfsr_generate(LfsrConfig.impulse(POLY_DEG2), 21),
                lfsr_generate(LfsrConfig.impulse(POLY_DEG3), 21),
            )
        )
    )
    for k1 in range(3):
        for k2 in range(7):
            combined = PeriodicSequence(
                tuple(
                    f.eval(p)
                    for p in zip(
                        _shifted_stream(POLY_DEG2, k1, 21),
                        _shifted_stream(POLY_DEG3, k2, 21),
                    )
                )
            )
            tau = compose_shift((k1, k2), system)
            assert combined == cyclic_shift(reference, tau)


def test_combiner_period_divides_lcm():
    spec = majority_generator()
    n = spec.combined_period
    z = combiner_sequence(spec, 2 * n)
    assert z[:n] == z[n:]
