import pytest

from khecke.cartan import RootDatum
from khecke.grothendieck import GrothendieckEngine
from khecke.localization import PsiEngine


@pytest.fixture(scope="session")
def A2():
    return RootDatum.of_type("A2")


@pytest.fixture(scope="session")
def sl2():
    return RootDatum.sl(2)


@pytest.fixture(scope="session")
def sl3():
    return RootDatum.sl(3)


@pytest.fixture(scope="session")
def af2():
    return RootDatum.affine_sl(2)


@pytest.fixture(scope="session")
def af3():
    return RootDatum.affine_sl(3)


@pytest.fixture(scope="session")
def af4():
    return RootDatum.affine_sl(4)


@pytest.fixture(scope="session")
def eng_A2(A2):
    return PsiEngine(A2, "big")


@pytest.fixture(scope="session")
def lz2(af2):
    return PsiEngine(af2, "level-zero")


@pytest.fixture(scope="session")
def big2(af2):
    return PsiEngine(af2, "big")


@pytest.fixture(scope="session")
def e2():
    return GrothendieckEngine.get(2)


@pytest.fixture(scope="session")
def e3():
    return GrothendieckEngine.get(3)


@pytest.fixture(scope="session")
def e4():
    return GrothendieckEngine.get(4)
