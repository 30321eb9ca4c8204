"""Random exact data shared by the test modules."""

import random
from fractions import Fraction

from hypothesis import strategies as st

from weakhopf import zoo
from weakhopf.lincore import LinMap, compose, inverse

SMALL = [Fraction(n, d) for n in range(-3, 4) for d in (1, 2, 3)]

scalars = st.sampled_from(SMALL)


@st.composite
def linmaps(draw, cod=None, dom=None, max_dim=4):
    cod = draw(st.integers(0, max_dim)) if cod is None else cod
    dom = draw(st.integers(0, max_dim)) if dom is None else dom
    rows = [[draw(scalars) for _ in range(dom)] for _ in range(cod)]
    return LinMap(dom, cod, rows)


def random_map(rng: random.Random, cod: int, dom: int, density: float = 0.6) -> LinMap:
    return LinMap(dom, cod, [[rng.choice(SMALL) if rng.random() < density else 0
                              for _ in range(dom)] for _ in range(cod)])


def random_invertible(rng: random.Random, n: int) -> LinMap:
    # unit lower times unit upper triangular, then a row shuffle
    L = [[1 if i == j else (rng.choice(SMALL) if j < i else 0) for j in range(n)] for i in range(n)]
    U = [[1 if i == j else (rng.choice(SMALL) if j > i else 0) for j in range(n)] for i in range(n)]
    perm = list(range(n))
    rng.shuffle(perm)
    Pm = LinMap(n, n, {(perm[i], i): 1 for i in range(n)})
    return Pm @ LinMap(n, n, L) @ LinMap(n, n, U)


def random_idempotent(rng: random.Random, n: int, r: int) -> LinMap:
    """S diag(1^r, 0^(n-r)) S^-1 for a random invertible S."""
    S = random_invertible(rng, n)
    D = LinMap(n, n, {(i, i): 1 for i in range(r)})
    return compose(compose(S, D), inverse(S))


CORPUS = zoo.corpus()
CORPUS_NAMES = list(zoo.CORPUS_NAMES)
GROUPOID_NAMES = [n for n in CORPUS_NAMES if CORPUS[n].groupoid is not None]
HOPF_NAMES = [n for n in CORPUS_NAMES if CORPUS[n].has_antipode]

