import pytest

from gf2tri import make_field


@pytest.fixture(scope="session")
def gf8():
    return make_field(3)


@pytest.fixture(scope="session")
def gf16():
    return make_field(4)


# the class of x in GF(8) with modulus x^3+x+1; a generator of GF(8)^*
G = 0b010
