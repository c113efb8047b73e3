"""Published reference data for the bundled three-register example.

The example generator combines registers over x^2+x+1, x^3+x+1 and
x^5+x^2+1 (periods 3, 7, 31; combined period 651).  The tables below are
the published values the `reproduce` targets diff against; they are data,
not derived at runtime, so the golden tests survive refactors.  All
exponents are taken to base x of the stated modulus.
"""

from __future__ import annotations

from .combiner import AnfFunction, GeneratorSpec
from .galois import BinaryPoly
from .sequences import LfsrConfig

# constituent feedback polynomials
POLY_DEG2 = BinaryPoly(0b111)  # x^2+x+1, period 3
POLY_DEG3 = BinaryPoly(0b1011)  # x^3+x+1, period 7
POLY_DEG5 = BinaryPoly(0b100101)  # x^5+x^2+1, period 31

# minimal polynomial of the three-way product sequence (degree 30) and of
# the majority-combined stream (degree 31, reducible)
PRODUCT_MIN_POLY = BinaryPoly.from_exponents(
    [30, 25, 24, 20, 19, 17, 16, 13, 10, 9, 8, 7, 4, 2, 0]
)
MAJORITY_MIN_POLY = BinaryPoly.from_exponents(
    [31, 29, 28, 27, 24, 23, 22, 20, 18, 17, 16, 15, 13, 11, 10, 9, 8, 7, 5, 4, 2, 1, 0]
)

MAJORITY_ANF_MASKS = (0x3, 0x6, 0x5)  # x1*x2 + x2*x3 + x3*x1


def majority_generator() -> GeneratorSpec:
    """The bundled example: majority combiner on impulse fills."""
    return GeneratorSpec(
        tuple(
            LfsrConfig.impulse(p) for p in (POLY_DEG2, POLY_DEG3, POLY_DEG5)
        ),
        AnfFunction.from_masks(3, MAJORITY_ANF_MASKS),
    )


def product_generator() -> GeneratorSpec:
    """Same registers combined by the plain three-way product."""
    return GeneratorSpec(
        tuple(
            LfsrConfig.impulse(p) for p in (POLY_DEG2, POLY_DEG3, POLY_DEG5)
        ),
        AnfFunction.product_of_all(3),
    )


# constituent spectra: {index: exponent} to base x in the register's own field
SPECTRUM_DEG2 = {1: 0, 2: 0}
SPECTRUM_DEG3 = {3: 4, 5: 2, 6: 1}
SPECTRUM_DEG5 = {15: 29, 23: 30, 27: 15, 29: 23, 30: 27}

# two-register product (periods 3 and 7): sequence and spectrum over
# GF(2^6) modulo x^6+x^4+x^2+x+1
PRODUCT21_BITS = "001011000001010010011"
PRODUCT21_MIN_POLY = BinaryPoly.from_exponents([6, 4, 2, 1, 0])
SPECTRUM_PRODUCT21 = {5: 9, 10: 18, 13: 15, 17: 18, 19: 9, 20: 15}

# shift-composition cases: per-register shifts -> combined shift mod 21
SHIFT_CASES_21 = (
    ((1, 0), 7),
    ((2, 0), 14),
    ((0, 1), 15),
    ((1, 3), 10),
)

# three-way product spectrum over GF(2^30) modulo PRODUCT_MIN_POLY:
# all 30 published (index, exponent) pairs
TABLE_PRODUCT651 = {
    61: 492, 89: 387, 122: 333, 139: 246, 178: 123,
    185: 585, 209: 309, 215: 240, 244: 15, 271: 30,
    278: 492, 325: 60, 356: 246, 370: 519, 395: 123,
    418: 618, 430: 480, 433: 120, 461: 15, 488: 30,
    523: 387, 542: 60, 556: 333, 587: 519, 619: 585,
    635: 618, 643: 309, 647: 480, 649: 240, 650: 120,
}

# majority-combiner spectrum over the same field, as published.  The
# published table is internally inconsistent (its support is not closed
# under index doubling and several values violate the conjugacy
# constraint), so reproduction is expected to diverge; the reproduce
# target reports the divergence and falls back to structural checks.
TABLE_MAJORITY651_PUBLISHED = {
    27: 15, 31: 186, 54: 30, 62: 372, 77: 123,
    91: 60, 108: 309, 124: 93, 153: 519, 156: 30,
    182: 492, 201: 618, 213: 480, 216: 120, 248: 186,
    306: 618, 308: 387, 339: 333, 341: 93, 364: 30,
    371: 387, 402: 585, 426: 309, 432: 240, 495: 492,
    496: 372, 511: 309, 573: 246, 581: 240, 612: 123,
    616: 387,
}

# keystream recovery example: 10 known bits sit at offset 632 of the
# impulse-seeded majority reference stream
ATTACK_WINDOW = "1011110001"
ATTACK_OFFSET = 632
ATTACK_RESIDUES = (2, 2, 12)
RECOVERED_STATES = ("10", "101", "01111")

REFERENCE_PREFIX = "0010110101110110"
