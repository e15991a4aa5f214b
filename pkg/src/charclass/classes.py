"""User-facing pipelines: Segre classes, CSM classes via inclusion/exclusion
on hypersurfaces, Euler characteristics and linear-section Euler
characteristics.

Every pipeline runs two independently coded formula routes and insists they
agree: Segre classes come out of both the series form and the residual
recurrence, and each hypersurface CSM class out of both the polar-degree
formula and the singularity-Segre formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .chow import (
    ChowClass,
    ProjectiveDegrees,
    csm_from_polar_degrees,
    csm_from_singularity_segre,
    section_euler_characteristics,
    segre_from_degrees,
    segre_from_degrees_recurrence,
)
from .errors import InternalError, UnsupportedInputError
from .groebner import squarefree_part
from .ideals import IdealSpec, equalize_degrees
from .projdeg import DEFAULT_RETRIES, projective_degrees
from .randomness import RandomScalarSource
from .ring import Polynomial

DEFAULT_SUBSET_CAP = 12


@dataclass(frozen=True)
class SegreResult:
    segre: ChowClass
    degrees: ProjectiveDegrees
    generator_degree: int
    codim: int | None  # None encodes the empty scheme
    warnings: tuple = ()


@dataclass(frozen=True)
class HypersurfaceCsm:
    csm: ChowClass
    polar_degrees: ProjectiveDegrees
    singularity_segre: ChowClass
    degree: int


@dataclass(frozen=True)
class CsmResult:
    csm: ChowClass
    chi: int
    warnings: tuple = ()


def segre_class_details(
    ideal: IdealSpec,
    src: RandomScalarSource,
    verify: int = 1,
    retries: int = DEFAULT_RETRIES,
) -> SegreResult:
    """Segre class of V(ideal) in P^n from projective degrees.

    Both Segre formulas are evaluated and must agree; a mismatch is treated
    as one more bad draw before giving up.
    """
    ideal.require_homogeneous()
    eq = equalize_degrees(ideal)
    d = eq.degree
    n = eq.n
    last_error = None
    for attempt in range(2):
        g = projective_degrees(
            eq, src.substream("segre", attempt), verify=verify, retries=retries
        )
        codim = next((j for j in range(n + 1) if g[j] != d**j), None)
        if codim is None:
            return SegreResult(
                segre=ChowClass.zero(n),
                degrees=g,
                generator_degree=d,
                codim=None,
                warnings=("the input defines the empty scheme; its Segre class is 0",),
            )
        series = segre_from_degrees(g, d)
        recurrence = segre_from_degrees_recurrence(g, d, codim)
        if series == recurrence:
            return SegreResult(series, g, d, codim)
        last_error = InternalError(
            "the two Segre formulas disagreed on the computed degrees"
        )
    raise last_error


def segre_class(ideal: IdealSpec, src: RandomScalarSource, verify: int = 1) -> ChowClass:
    return segre_class_details(ideal, src, verify=verify).segre


def csm_hypersurface_details(
    f: Polynomial,
    src: RandomScalarSource,
    verify: int = 1,
    retries: int = DEFAULT_RETRIES,
) -> HypersurfaceCsm:
    """CSM class of the hypersurface V(f), pushed to A_*(P^n).

    Replaces f by its squarefree part (the class only depends on the
    support), computes the projective degrees of the gradient map, and checks
    the polar-degree formula against the singularity-Segre formula.
    """
    if f.is_zero() or f.degree() == 0:
        raise UnsupportedInputError("a hypersurface needs a nonconstant equation")
    if not f.is_homogeneous():
        raise UnsupportedInputError(f"hypersurface equation {f} is not homogeneous")
    f = squarefree_part(f)
    d = f.degree()
    ring = f.ring
    partials = [f.derivative(j) for j in range(ring.nvars)]
    partials = [g for g in partials if not g.is_zero()]
    if not partials:
        raise UnsupportedInputError(
            "every partial derivative vanished (characteristic divides all "
            "exponents); recompute over a larger prime"
        )
    gradient = equalize_degrees(IdealSpec(ring, partials))
    g = projective_degrees(
        gradient, src.substream("polar"), verify=verify, retries=retries
    )
    csm = csm_from_polar_degrees(g)
    s_sing = segre_from_degrees(g, d - 1)
    check = csm_from_singularity_segre(s_sing, d)
    if csm != check:
        raise InternalError(
            "polar-degree and singularity-Segre CSM formulas disagreed"
        )
    return HypersurfaceCsm(csm=csm, polar_degrees=g, singularity_segre=s_sing, degree=d)


def csm_hypersurface(f: Polynomial, src: RandomScalarSource, verify: int = 1) -> ChowClass:
    return csm_hypersurface_details(f, src, verify=verify).csm


def csm_class_details(
    ideal: IdealSpec,
    src: RandomScalarSource,
    verify: int = 1,
    retries: int = DEFAULT_RETRIES,
    subset_cap: int = DEFAULT_SUBSET_CAP,
) -> CsmResult:
    """CSM class by inclusion/exclusion over products of generators.

    Every nonempty subset S of generators contributes
    (-1)^(|S|+1) c_SM(V(prod S)); products are squarefree-reduced first and
    the (expensive) hypersurface computations are shared between subsets
    whose reduced products coincide.  Scalar streams are keyed by the
    canonical subset, so results do not depend on evaluation order.
    """
    ideal.require_homogeneous()
    r = len(ideal.generators)
    if r > subset_cap:
        raise UnsupportedInputError(
            f"{r} generators would need {2**r - 1} hypersurface terms; the "
            f"inclusion/exclusion cap is {subset_cap} generators. Remove "
            "redundant generators or raise subset_cap explicitly."
        )
    n = ideal.n
    products: dict = {}  # subset tuple -> product polynomial
    net: dict = {}  # reduced product -> [net sign, first subset]
    order_seen: list = []
    for size in range(1, r + 1):
        sign = 1 if size % 2 else -1
        for subset in combinations(range(r), size):
            if size == 1:
                prod = ideal.generators[subset[0]]
            else:
                prod = products[subset[:-1]] * ideal.generators[subset[-1]]
            products[subset] = prod
            if prod.degree() == 0:
                continue  # a unit factor: V(prod) is empty, contributes 0
            reduced = squarefree_part(prod)
            if reduced in net:
                net[reduced][0] += sign
            else:
                net[reduced] = [sign, subset]
                order_seen.append(reduced)
    warnings = ()
    if not order_seen:
        return CsmResult(
            ChowClass.zero(n),
            0,
            ("every generator is a unit; the scheme is empty and c_SM is 0",),
        )
    total = ChowClass.zero(n)
    for reduced in order_seen:
        sign, subset = net[reduced]
        if sign == 0:
            continue
        details = csm_hypersurface_details(
            reduced,
            src.substream("subset", subset),
            verify=verify,
            retries=retries,
        )
        total = total + details.csm * sign
    return CsmResult(total, total.integral(), warnings)


def csm_class(ideal: IdealSpec, src: RandomScalarSource, verify: int = 1) -> ChowClass:
    return csm_class_details(ideal, src, verify=verify).csm


def euler_characteristic(ideal: IdealSpec, src: RandomScalarSource, verify: int = 1) -> int:
    """chi(V) as the degree of the zero-dimensional part of c_SM(V)."""
    return csm_class_details(ideal, src, verify=verify).chi


def euler_sections(ideal: IdealSpec, src: RandomScalarSource, verify: int = 1) -> tuple:
    """(chi(V), chi(V cap L1), chi(V cap L1 cap L2), ...) for general
    hyperplanes, one entry per dimension of V down to zero."""
    return section_euler_characteristics(
        csm_class_details(ideal, src, verify=verify).csm
    )
