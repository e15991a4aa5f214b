"""Projective degrees of the rational map defined by a homogeneous ideal.

For each i the degree g_i is the k-dimension of the quotient by a
zero-dimensional ideal in k[x_0..x_n, T]:

    i random combinations of the generators,
    n - i random homogeneous linear forms,
    one random affine form 1 - sum(nu_j x_j),
    and the excision generator S = 1 - T * (random combination),

whose solutions are exactly the points counted by g_i, each with
multiplicity one for generic scalars.  Bad draws are detected (the quotient
fails to be zero-dimensional, or a degree bound is violated) and resampled up
to a retry cap; an optional verification pass recomputes every g_i from
independent scalars and treats disagreement like a bad draw.

The dimension count itself first solves the affine-linear generators by
Gaussian elimination and substitutes them away, then runs Buchberger in the
smaller ring; the quotient is unchanged up to k-algebra isomorphism.  The
full-ring route stays available for cross-checking.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .chow import ChowClass, ProjectiveDegrees
from .errors import DimensionError, GenericityError
from .groebner import _minimal_elems, count_standard_monomials
from .ideals import IdealSpec, equalize_degrees
from .randomness import RandomScalarSource, random_combination, random_form
from .ring import Polynomial, PolyRing, compose, remap

DEFAULT_RETRIES = 5


def extend_with_excision_variable(ring: PolyRing) -> tuple:
    """The ring k[x_0..x_n, T] and the index of T (ordered last in grevlex)."""
    name = ring.fresh_name("T")
    extended = ring.extend(name)
    return extended, extended.variable_index(name)


@dataclass(frozen=True)
class DegreeSystem:
    """The generators whose quotient dimension is one projective degree."""

    index: int
    ring: PolyRing
    generators: tuple
    excision_var: int

    def __post_init__(self):
        n = self.ring.nvars - 2  # ambient P^n plus T
        if len(self.generators) != n + 2:
            raise ValueError("a degree system has exactly n + 2 generators")


def build_degree_system(ideal: IdealSpec, i: int, src: RandomScalarSource) -> DegreeSystem:
    """The system for g_i of an equalized ideal: P_1..P_i, L_1..L_{n-i}, the
    affine form, and the excision generator (the only one involving T)."""
    if ideal.degree is None:
        raise ValueError("equalize the ideal before building degree systems")
    n = ideal.n
    if not 1 <= i <= n:
        raise ValueError(f"degree index {i} out of range 1..{n}")
    ring_t, t_index = extend_with_excision_variable(ideal.ring)
    lifted = [remap(g, ring_t) for g in ideal.generators]
    x_vars = [j for j in range(ring_t.nvars) if j != t_index]
    gens = []
    for ell in range(1, i + 1):
        gens.append(random_combination(lifted, src.substream("P", ell)))
    for ell in range(1, n - i + 1):
        gens.append(
            random_form(ring_t, src.substream("L", ell), affine=False, variables=x_vars)
        )
    gens.append(
        random_form(ring_t, src.substream("LA"), affine=True, variables=x_vars)
    )
    excision = 1 - ring_t.var(t_index) * random_combination(lifted, src.substream("S"))
    gens.append(excision)
    return DegreeSystem(
        index=i, ring=ring_t, generators=tuple(gens), excision_var=t_index
    )


def _solve_linear_generators(system: DegreeSystem):
    """Gaussian elimination on the affine-linear generators.

    Returns (None, None, None) when the linear part is inconsistent (the
    ideal contains 1, so the dimension is 0).  Otherwise returns the reduced
    ring over the free variables, the substitution images (one per original
    variable), and the non-linear generators still to substitute.
    """
    ring = system.ring
    p = ring.p
    nv = ring.nvars
    exps = ring.order.exps
    rows = []
    nonlinear = []
    for g in system.generators:
        if g.degree() <= 1:
            row = [0] * (nv + 1)
            for key, c in g.terms.items():
                e = exps(key)
                support = [j for j, ej in enumerate(e) if ej]
                if support:
                    row[support[0]] = c
                else:
                    row[nv] = c
            rows.append(row)
        else:
            nonlinear.append(g)

    pivots = {}
    for row in rows:
        for piv_col, piv_row in pivots.items():
            c = row[piv_col]
            if c:
                for k in range(nv + 1):
                    row[k] = (row[k] - c * piv_row[k]) % p
        col = next((j for j in range(nv) if row[j]), None)
        if col is None:
            if row[nv] % p:
                return None, None, None  # 0 = nonzero constant
            continue
        inv = pow(row[col], p - 2, p)
        row = [v * inv % p for v in row]
        for other in pivots.values():
            c = other[col]
            if c:
                for k in range(nv + 1):
                    other[k] = (other[k] - c * row[k]) % p
        pivots[col] = row

    free = [j for j in range(nv) if j not in pivots]
    if not free:
        # fully determined point: dimension is 1 unless a generator misses it
        point = [(-pivots[j][nv]) % p if j in pivots else 0 for j in range(nv)]
        for g in nonlinear:
            if g.evaluate(point):
                return None, None, None
        return "point", None, nonlinear
    reduced = PolyRing(tuple(ring.names[j] for j in free), p)
    free_vars = {j: reduced.var(k) for k, j in enumerate(free)}
    images = []
    for j in range(nv):
        if j in pivots:
            row = pivots[j]
            img = reduced.const(-row[nv])
            for w in free:
                c = row[w]
                if c:
                    img = img - free_vars[w] * c
            images.append(img)
        else:
            images.append(free_vars[j])
    return reduced, images, nonlinear


def system_dimension(system: DegreeSystem, presolve: bool = True) -> int:
    """The k-dimension of the quotient by the system, raising DimensionError
    when the quotient is not finite (a non-generic draw)."""
    if presolve:
        reduced, images, nonlinear = _solve_linear_generators(system)
        if reduced is None:
            return 0
        if reduced == "point":
            return 1
        gens = [compose(g, reduced, images) for g in nonlinear]
        order, p = reduced.order, reduced.p
        elems = _minimal_elems((g.terms for g in gens if not g.is_zero()), order, p)
        if not elems:
            raise DimensionError("system collapsed to the zero ideal")
        return count_standard_monomials([e.lt for e in elems], order)
    ring = system.ring
    elems = _minimal_elems(
        (g.terms for g in system.generators), ring.order, ring.p
    )
    return count_standard_monomials([e.lt for e in elems], ring.order)


def projective_degree_i(
    ideal: IdealSpec,
    i: int,
    src: RandomScalarSource,
    retries: int = DEFAULT_RETRIES,
    presolve: bool = True,
) -> int:
    """g_i by quotient dimension, resampling scalars on bad draws."""
    for attempt in range(retries):
        system = build_degree_system(ideal, i, src.substream("attempt", attempt))
        try:
            return system_dimension(system, presolve=presolve)
        except DimensionError:
            continue
    raise GenericityError(
        f"no zero-dimensional system for g_{i} after {retries} draws; "
        "try a different seed or a larger characteristic"
    )


def projective_degrees(
    ideal: IdealSpec,
    src: RandomScalarSource,
    verify: int = 0,
    retries: int = DEFAULT_RETRIES,
    presolve: bool = True,
) -> ProjectiveDegrees:
    """(g_0=1, g_1, ..., g_n) for the map defined by the ideal's generators.

    ``verify`` extra recomputations per degree use independent scalars; any
    disagreement (or a violated 0 <= g_i <= d^i bound) counts as a bad draw
    and is resampled, so a returned list survived verify+1 independent draws.
    """
    ideal.require_homogeneous()
    if ideal.degree is None:
        ideal = equalize_degrees(ideal)
    n = ideal.n
    d = ideal.degree
    degrees = [1]
    for i in range(1, n + 1):
        bound = d**i
        value = None
        for attempt in range(retries):
            vals = [
                projective_degree_i(
                    ideal,
                    i,
                    src.substream("degree", i, attempt, k),
                    retries=retries,
                    presolve=presolve,
                )
                for k in range(verify + 1)
            ]
            if all(v == vals[0] for v in vals) and 0 <= vals[0] <= bound:
                value = vals[0]
                break
        if value is None:
            raise GenericityError(
                f"verification of g_{i} kept disagreeing after {retries} rounds; "
                "try a different seed or a larger characteristic"
            )
        degrees.append(value)
    return ProjectiveDegrees(tuple(degrees), source=f"map:P^{n}")


def shadow_class(g) -> ChowClass:
    """The class g_0 + g_1 h + ... + g_n h^n pushed down from the graph."""
    gs = g.g if isinstance(g, ProjectiveDegrees) else tuple(g)
    return ChowClass(len(gs) - 1, gs)
