"""Homogeneous ideals of projective space and degree equalization."""

from __future__ import annotations

from typing import Iterator, Sequence

from .errors import UnsupportedInputError
from .ring import Polynomial, PolyRing


class IdealSpec:
    """A homogeneous ideal in k[x_0..x_n] with ambient metadata.

    ``degree`` is the common generator degree once all generators share one
    (after :func:`equalize_degrees`), else None.
    """

    __slots__ = ("ring", "generators", "degree", "homogeneous")

    def __init__(self, ring: PolyRing, generators: Sequence[Polynomial]):
        generators = tuple(generators)
        if not generators:
            raise UnsupportedInputError("the zero ideal is not supported")
        for g in generators:
            if g.ring != ring:
                raise ValueError("generator lives in a different ring")
            if g.is_zero():
                raise UnsupportedInputError("zero generators are not allowed")
        self.ring = ring
        self.generators = generators
        self.homogeneous = all(g.is_homogeneous() for g in generators)
        degrees = {g.degree() for g in generators}
        self.degree = degrees.pop() if len(degrees) == 1 else None

    @property
    def n(self) -> int:
        """Dimension of the ambient projective space P^n."""
        return self.ring.nvars - 1

    def require_homogeneous(self):
        if not self.homogeneous:
            for g in self.generators:
                if not g.is_homogeneous():
                    raise UnsupportedInputError(
                        f"generator {g} is not homogeneous"
                    )

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators)
        return f"IdealSpec({gens}; P^{self.n}, p={self.ring.p})"


def monomial_keys_of_degree(ring: PolyRing, degree: int) -> list:
    """All monomial keys of the given total degree, leading-order first."""
    nvars = ring.nvars
    out = []

    def rec(j: int, remaining: int, exps: list):
        if j == nvars - 1:
            exps[j] = remaining
            out.append(ring.order.from_exps(exps))
            exps[j] = 0
            return
        for e in range(remaining + 1):
            exps[j] = e
            rec(j + 1, remaining - e, exps)
        exps[j] = 0

    rec(0, degree, [0] * nvars)
    out.sort()
    return out


def monomials_of_degree(ring: PolyRing, degree: int) -> Iterator[Polynomial]:
    for key in monomial_keys_of_degree(ring, degree):
        yield Polynomial(ring, {key: 1})


def equalize_degrees(ideal: IdealSpec) -> IdealSpec:
    """Replace each generator of degree e < d (d the max generator degree) by
    its products with every monomial of degree d - e.

    The output generates the degree->=d truncation of the ideal, so it defines
    the same projective scheme with all generators of degree exactly d.
    """
    ideal.require_homogeneous()
    d = max(g.degree() for g in ideal.generators)
    if ideal.degree == d:
        return ideal
    gens = []
    for g in ideal.generators:
        gap = d - g.degree()
        if gap == 0:
            gens.append(g)
        else:
            for m in monomials_of_degree(ideal.ring, gap):
                gens.append(g * m)
    return IdealSpec(ideal.ring, gens)
