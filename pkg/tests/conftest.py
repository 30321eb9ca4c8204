import pytest

from helpers import CORPUS, CORPUS_NAMES


@pytest.fixture(params=CORPUS_NAMES)
def entry(request):
    return CORPUS[request.param]


@pytest.fixture
def diagonal2():
    return CORPUS["diagonal2"].B


@pytest.fixture
def z2():
    return CORPUS["z2"].B


@pytest.fixture
def pair2():
    return CORPUS["pair2"].B


@pytest.fixture
def idempotent_monoid():
    return CORPUS["idempotent_monoid"].B

