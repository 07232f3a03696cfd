import pytest

from ginv.specs import M, QI, Z, product, toeplitz

ZN = {"kind": "Zn", "involution": "identity"}


def z2xz4():
    return product({**ZN, "n": 2}, {**ZN, "n": 4})


def six_rings():
    """The exhaustive test rings: Z6, Z8, Z12, Z2xZ4, M2(Z2), M2(Z3)."""
    return [Z(6), Z(8), Z(12), z2xz4(), M(2), M(3)]


@pytest.fixture
def z6():
    return Z(6)


@pytest.fixture
def z8():
    return Z(8)


@pytest.fixture
def m2z2():
    return M(2)


@pytest.fixture
def qi2():
    return QI(2)


@pytest.fixture
def qi3():
    return QI(3)


@pytest.fixture
def tz():
    return toeplitz()
