import pytest

from ringaudit.corpus import default_corpus


@pytest.fixture(scope="session")
def corpus():
    return default_corpus()


@pytest.fixture(scope="session")
def ring_a(corpus):
    return corpus.by_label("A=F2[x,y]/(x,y)^2")


@pytest.fixture(scope="session")
def small_corpus_rings(corpus):
    """The corpus rings small enough for the brute-force subset oracle."""
    return [r for r in corpus if r.order <= 12]
