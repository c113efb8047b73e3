import pytest

from crtseq.galois import BinaryPoly, make_field

POLY_DEG2 = BinaryPoly(0b111)
POLY_DEG3 = BinaryPoly(0b1011)
POLY_DEG5 = BinaryPoly(0b100101)
POLY_DEG4 = BinaryPoly(0b10011)


@pytest.fixture(scope="session")
def gf4():
    return make_field(POLY_DEG2)


@pytest.fixture(scope="session")
def gf8():
    return make_field(POLY_DEG3)


@pytest.fixture(scope="session")
def gf32():
    return make_field(POLY_DEG5)


@pytest.fixture(scope="session")
def gf64():
    # minimal polynomial of the period-21 product sequence
    return make_field(BinaryPoly.from_exponents([6, 4, 2, 1, 0]))
