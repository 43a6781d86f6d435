"""Shared oracles and fixtures.

The oracles here never call the package's reducers: they rewrite words with
commutation swaps and free cancellations directly.
"""
import random
from collections import deque

import pytest

from vershik_ga.dcsp import Chromosome, DcspInstance
from vershik_ga.words import GroupSpec

# Worked instance on V_10 (traceback example); both subgroups are all of V_10.
EX_A = (2, 2, 3, 4, 5, -4, 7, -6, 9, 10)
EX_B = (2, 2, 4, 5, -4, 3, 7, -6, 10, 9)
EX_CHI = (3, -2, -3, 5, 7)
EX_ZETA = (5, 2, 3, -7, 10)


def commutes(i, j):
    return abs(abs(i) - abs(j)) >= 2


def scan_cancel(u):
    """Literal pair scan: leftmost s, then smallest t, restart after each deletion."""
    u = list(u)
    while True:
        pair = None
        for s in range(len(u)):
            for t in range(s + 1, len(u)):
                if u[t] == -u[s]:
                    pair = (s, t)
                    break
                if not commutes(u[s], u[t]):
                    break
            if pair:
                break
        if pair is None:
            return tuple(u)
        s, t = pair
        del u[t], u[s]


class GeodesicOracle:
    """Minimal length reachable by adjacent commuting swaps and free cancellations.

    Words are grouped into swap classes; each class is explored once and the
    answer for a class is the best over its members' one-step cancellations.
    """

    def __init__(self):
        self.memo = {}

    def __call__(self, word):
        word = tuple(word)
        if word in self.memo:
            return self.memo[word]
        cls = {word}
        queue = deque([word])
        while queue:
            w = queue.popleft()
            for k in range(len(w) - 1):
                if commutes(w[k], w[k + 1]):
                    v = w[:k] + (w[k + 1], w[k]) + w[k + 2:]
                    if v not in cls:
                        cls.add(v)
                        queue.append(v)
        best = len(word)
        for w in cls:
            for k in range(len(w) - 1):
                if w[k] == -w[k + 1]:
                    best = min(best, self(w[:k] + w[k + 2:]))
        for w in cls:
            self.memo[w] = best
        return best


@pytest.fixture(scope="session")
def geodesic_oracle():
    return GeodesicOracle()


@pytest.fixture
def rank10():
    return GroupSpec(10)


@pytest.fixture
def worked_instance():
    spec = GroupSpec(10)
    return DcspInstance(spec, range(1, 11), range(1, 11), EX_A, EX_B)


@pytest.fixture
def worked_chromosome():
    return Chromosome(EX_CHI, EX_ZETA)


def random_word_letters(rng, rank, max_len):
    return tuple(rng.randint(1, rank) * rng.choice((1, -1)) for _ in range(rng.randint(0, max_len)))


def random_rewrites(word, steps, rank, rng):
    """Apply ``steps`` legal rewrites: swap commuting neighbours, insert or delete x x^-1."""
    w = list(word)
    for _ in range(steps):
        move = rng.randrange(3)
        if move == 0 and len(w) > 1:
            k = rng.randrange(len(w) - 1)
            if commutes(w[k], w[k + 1]):
                w[k], w[k + 1] = w[k + 1], w[k]
        elif move == 1:
            k = rng.randrange(len(w) + 1)
            g = rng.randint(1, rank) * rng.choice((1, -1))
            w[k:k] = [g, -g]
        else:
            spots = [k for k in range(len(w) - 1) if w[k] == -w[k + 1]]
            if spots:
                k = rng.choice(spots)
                del w[k:k + 2]
    return tuple(w)


# -- acceptance reporting ----------------------------------------------------

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return random.Random(12345)
