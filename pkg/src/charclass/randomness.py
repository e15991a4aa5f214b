"""Deterministic scalar streams for the "general scalar" draws.

Every draw is a pure function of (seed, stream, counter) through SHA-256, so
results are reproducible across runs, platforms and schedules.  Logical tasks
(one projective-degree computation, one linear form, ...) derive their own
substreams from structured labels instead of sharing a cursor, which makes
the aggregate output independent of evaluation order.
"""

from __future__ import annotations

import hashlib

from .ring import Polynomial, PolyRing

_MASK64 = (1 << 64) - 1


def _label_bytes(label) -> bytes:
    if isinstance(label, int):
        return b"i" + (label & _MASK64).to_bytes(8, "big")
    if isinstance(label, str):
        raw = label.encode("utf-8")
        return b"s" + len(raw).to_bytes(4, "big") + raw
    if isinstance(label, (tuple, list)):
        out = b"t" + len(label).to_bytes(4, "big")
        for item in label:
            out += _label_bytes(item)
        return out
    raise TypeError(f"unsupported stream label {label!r}")


class RandomScalarSource:
    """Uniform scalars from GF(p), keyed by a 64-bit (seed, stream) pair."""

    __slots__ = ("seed", "stream", "_counter", "_words")

    def __init__(self, seed: int = 0, stream: int = 0):
        self.seed = seed & _MASK64
        self.stream = stream & _MASK64
        self._counter = 0
        self._words: list[int] = []

    def substream(self, *labels) -> "RandomScalarSource":
        """Independent child stream, deterministically derived from labels."""
        h = hashlib.sha256()
        h.update(b"charclass/substream")
        h.update(self.stream.to_bytes(8, "big"))
        for label in labels:
            h.update(_label_bytes(label))
        return RandomScalarSource(self.seed, int.from_bytes(h.digest()[:8], "big"))

    def _refill(self):
        h = hashlib.sha256()
        h.update(b"charclass/block")
        h.update(self.seed.to_bytes(8, "big"))
        h.update(self.stream.to_bytes(8, "big"))
        h.update(self._counter.to_bytes(8, "big"))
        self._counter += 1
        digest = h.digest()
        self._words = [
            int.from_bytes(digest[i : i + 8], "big") for i in (0, 8, 16, 24)
        ]

    def draw(self, p: int) -> int:
        """One uniform element of [0, p), by rejection on 64-bit words."""
        limit = (1 << 64) - ((1 << 64) % p)
        while True:
            if not self._words:
                self._refill()
            w = self._words.pop()
            if w < limit:
                return w % p

    def draw_many(self, p: int, count: int) -> list[int]:
        return [self.draw(p) for _ in range(count)]


def random_form(
    ring: PolyRing,
    src: RandomScalarSource,
    affine: bool = False,
    variables=None,
) -> Polynomial:
    """A random linear form over the given variables (default: all).

    ``affine=False``: a nonzero homogeneous form sum(mu_j x_j); the all-zero
    draw is resampled internally.  ``affine=True``: 1 - sum(nu_j x_j), whose
    constant term is exactly 1.
    """
    p = ring.p
    if variables is None:
        variables = range(ring.nvars)
    variables = list(variables)
    while True:
        coeffs = [src.draw(p) for _ in variables]
        if affine or any(coeffs):
            break
    f = ring.one() if affine else ring.zero()
    for j, c in zip(variables, coeffs):
        if not c:
            continue
        f = f - ring.var(j) * c if affine else f + ring.var(j) * c
    return f


def random_combination(gens, src: RandomScalarSource) -> Polynomial:
    """sum(lambda_j f_j) with uniform random lambda_j; resampled if zero.

    The generators must be nonempty and share one degree, so the combination
    is homogeneous of that degree.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator to combine")
    ring = gens[0].ring
    degrees = {g.degree() for g in gens}
    if len(degrees) != 1:
        raise ValueError("generators must share a common degree")
    p = ring.p
    while True:
        out = ring.zero()
        for g in gens:
            c = src.draw(p)
            if c:
                out = out + g * c
        if out:
            return out
