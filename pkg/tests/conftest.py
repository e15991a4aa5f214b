import pytest

from charclass import PolyRing, RandomScalarSource
from charclass.parser import parse_polynomial


class SequenceSource:
    """Scalar source stub that replays a fixed sequence (test injection)."""

    def __init__(self, values):
        self.values = list(values)
        self.cursor = 0

    def draw(self, p):
        v = self.values[self.cursor % len(self.values)]
        self.cursor += 1
        return v % p

    def substream(self, *labels):
        return self


@pytest.fixture
def ring_p4():
    """k[x0..x4] over GF(32749), the ambient ring of the quartic-pair surface."""
    return PolyRing(("x0", "x1", "x2", "x3", "x4"))


@pytest.fixture
def quartic_pair(ring_p4):
    f0 = parse_polynomial("4*x3*x2*x4*x1 - x0^3*x1", ring_p4)
    f1 = parse_polynomial("x0*x1*x3*x4 - x2^3*x3", ring_p4)
    return f0, f1


@pytest.fixture
def ring_xy():
    return PolyRing(("x", "y"), 32749)


def random_poly(ring, src, max_degree=3, max_terms=5):
    """A not-identically-zero random sparse polynomial (deterministic)."""
    p = ring.p
    nterms = 1 + src.draw(max_terms)
    exp_dict = {}
    for _ in range(nterms):
        exps = tuple(src.draw(max_degree + 1) for _ in range(ring.nvars))
        exp_dict[exps] = (exp_dict.get(exps, 0) + 1 + src.draw(p - 1)) % p
    f = ring.from_exp_dict(exp_dict)
    if f.is_zero():
        f = ring.one()
    return f


@pytest.fixture
def src():
    return RandomScalarSource(seed=20260810)
