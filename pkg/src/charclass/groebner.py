"""Buchberger engine: reduced bases, normal forms, zero-dimensional
quotient dimensions, block-order elimination, and gcd/squarefree-part.

Design notes
------------
Monomial keys are packed integers that compare ascending-as-leading (see
:mod:`charclass.ring`), so the leading term of a term dict is ``min`` and
pending monomials of a reduction live directly in a ``heapq``.  Reduction
never rescans the accumulator: each step pops the largest pending monomial,
cancels it against one (monic) basis element, and pushes only the new
monomials that appear.  Monomial products inside that loop are plain integer
additions (the tail is pre-biased once per step), and divisibility against
the basis is one guarded subtraction per candidate.

Pair handling is Gebauer-Moeller pruning (product + chain criteria) with
normal selection, i.e. the pair with the smallest lcm in the order, which for
graded orders is degree-graded selection.
"""

from __future__ import annotations

import heapq
from typing import Iterable, Sequence

from .errors import DimensionError, InternalError, UnsupportedInputError
from .randomness import RandomScalarSource
from .ring import Polynomial, PolyRing, remap


class _BasisElem:
    """A monic basis polynomial with precomputed reduction helpers."""

    __slots__ = ("lt", "items", "tail", "low")

    def __init__(self, terms: dict, order, p: int):
        lt = min(terms)
        c = terms[lt]
        if c != 1:
            inv = pow(c, p - 2, p)
            terms = {k: v * inv % p for k, v in terms.items()}
        if lt & order.guard_mask:
            raise InternalError("monomial exponent overflow in basis element")
        self.lt = lt
        self.items = sorted(terms.items())
        self.tail = self.items[1:]
        self.low = lt & order.low_mask


def _reduce_full(seed_items, basis: list, order, p: int) -> dict:
    """Full remainder of the polynomial seeded by ``seed_items`` modulo the
    monic basis elements.  Returns a term dict."""
    acc: dict = {}
    for k, c in seed_items:
        v = (acc.get(k, 0) + c) % p
        if v:
            acc[k] = v
        else:
            acc.pop(k, None)
    heap = list(acc)
    heapq.heapify(heap)
    out: dict = {}
    low_mask = order.low_mask
    guard = order.guard_mask
    heappush = heapq.heappush
    heappop = heapq.heappop
    acc_get = acc.get
    acc_pop = acc.pop
    while heap:
        k = heappop(heap)
        c = acc_pop(k, 0)
        if not c:
            continue
        ka = (k & low_mask) | guard
        reducer = None
        for be in basis:
            if (ka - be.low) & guard == guard:
                reducer = be
                break
        if reducer is None:
            out[k] = c
            continue
        # the degree biases of (k / lt) * tk cancel: key arithmetic is exact
        shift = k - reducer.lt
        for tk, tc in reducer.tail:
            kk = shift + tk
            prev = acc_get(kk)
            if prev is None:
                acc[kk] = p - c * tc % p
                heappush(heap, kk)
            else:
                v = (prev - c * tc) % p
                if v:
                    acc[kk] = v
                else:
                    del acc[kk]
    return out


def _spoly_seed(f: _BasisElem, g: _BasisElem, lcm_key: tuple, order, p: int):
    uf = order.div(lcm_key, f.lt)
    ug = order.div(lcm_key, g.lt)
    mul = order.mul
    seed = [(mul(uf, k), c) for k, c in f.items]
    seed += [(mul(ug, k), p - c) for k, c in g.items]
    return seed


def _update_pairs(G: list, P: dict, new: _BasisElem, order) -> dict:
    """Gebauer-Moeller update of the pair set when ``new`` joins the basis."""
    lt_f = new.lt
    m = len(G)
    lcm = order.lcm
    mul = order.mul
    divides = order.divides
    kept = {}
    for (i, j), L in P.items():
        if (
            not divides(lt_f, L)
            or lcm(G[i].lt, lt_f) == L
            or lcm(G[j].lt, lt_f) == L
        ):
            kept[(i, j)] = L
    groups: dict = {}
    for i in range(m):
        groups.setdefault(lcm(G[i].lt, lt_f), []).append(i)
    minimal: list = []
    for L in sorted(groups, reverse=True):  # smallest monomial first
        if not any(divides(Lm, L) for Lm in minimal):
            minimal.append(L)
    for L in minimal:
        idxs = groups[L]
        if any(mul(G[i].lt, lt_f) == L for i in idxs):
            continue  # product criterion: a coprime pair kills the class
        kept[(min(idxs), m)] = L
    G.append(new)
    return kept


def _groebner_elems(gens_terms: Iterable[dict], order, p: int) -> list:
    """Groebner basis of the ideal generated by the term dicts, as monic
    basis elements.  Not minimalized or tail-reduced."""
    inputs = [_BasisElem(dict(t), order, p) for t in gens_terms if t]
    if not inputs:
        return []
    one = order.one
    unit = _BasisElem({one: 1}, order, p)
    G: list = []
    P: dict = {}
    for elem in sorted(inputs, key=lambda e: e.lt, reverse=True):
        if elem.lt == one:
            return [unit]
        P = _update_pairs(G, P, elem, order)
    while P:
        pair = max(P.items(), key=lambda kv: kv[1])
        (i, j), L = pair
        del P[(i, j)]
        seed = _spoly_seed(G[i], G[j], L, order, p)
        r = _reduce_full(seed, G, order, p)
        if not r:
            continue
        elem = _BasisElem(r, order, p)
        if elem.lt == one:
            return [unit]
        P = _update_pairs(G, P, elem, order)
    return G


def _minimalize(elems: list, order) -> list:
    """Keep only elements whose leading term no other leading term divides."""
    divides = order.divides
    out: list = []
    for e in sorted(elems, key=lambda e: e.lt, reverse=True):
        if not any(divides(kept.lt, e.lt) for kept in out):
            out.append(e)
    return out


def _minimal_elems(gens_terms: Iterable[dict], order, p: int) -> list:
    return _minimalize(_groebner_elems(gens_terms, order, p), order)


class GroebnerBasis:
    """A Groebner basis tied to its ring (and thus its monomial order)."""

    __slots__ = ("ring", "elements", "reduced")

    def __init__(self, ring: PolyRing, elements: Sequence[Polynomial], reduced: bool):
        self.ring = ring
        self.elements = tuple(elements)
        self.reduced = reduced

    def leading_keys(self) -> list:
        return [g.lead_key() for g in self.elements]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        return (
            isinstance(other, GroebnerBasis)
            and other.ring == self.ring
            and other.elements == self.elements
        )

    def __hash__(self):
        return hash((self.ring, self.elements))

    def __repr__(self):
        body = ", ".join(str(g) for g in self.elements)
        return f"GroebnerBasis[{body}]"


def buchberger(gens: Sequence[Polynomial], ring: PolyRing | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    The zero ideal yields an empty basis, the unit ideal the basis {1}.  The
    output is canonical: permuting the input generators cannot change it.
    """
    gens = [g for g in gens if not g.is_zero()]
    if ring is None:
        if not gens:
            raise ValueError("cannot infer the ring from an empty generator list")
        ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise ValueError("generators live in different rings")
    order, p = ring.order, ring.p
    elems = _minimal_elems((g.terms for g in gens), order, p)
    reduced = []
    for i, e in enumerate(elems):
        others = elems[:i] + elems[i + 1 :]
        tail = _reduce_full(list(e.tail), others, order, p)
        tail[e.lt] = 1
        reduced.append(Polynomial(ring, tail))
    reduced.sort(key=lambda f: f.lead_key())
    return GroebnerBasis(ring, reduced, reduced=True)


def _as_elems(G, ring: PolyRing) -> list:
    polys = G.elements if isinstance(G, GroebnerBasis) else G
    return [
        _BasisElem(dict(g.terms), ring.order, ring.p)
        for g in polys
        if not g.is_zero()
    ]


def normal_form(f: Polynomial, G) -> Polynomial:
    """Remainder of multivariate division of f by the basis.

    No term of the result is divisible by any basis leading term, and
    ``f - result`` lies in the ideal the basis generates.
    """
    ring = f.ring
    if isinstance(G, GroebnerBasis) and G.ring != ring:
        raise ValueError("polynomial and basis live in different rings")
    basis = _as_elems(G, ring)
    r = _reduce_full(list(f.terms.items()), basis, ring.order, ring.p)
    return Polynomial(ring, r)


def _leading_keys_of(G) -> list:
    if isinstance(G, GroebnerBasis):
        return G.leading_keys()
    return [g.lead_key() for g in G if not g.is_zero()]


def is_zero_dimensional(G) -> bool:
    """True iff every ring variable has a pure power among the leading terms
    (the empty variety, basis {1}, counts as zero-dimensional)."""
    ring = G.ring if isinstance(G, GroebnerBasis) else G[0].ring
    keys = _leading_keys_of(G)
    return _pure_power_bounds(keys, ring.order) is not None


def _pure_power_bounds(lt_keys: list, order) -> list | None:
    """Minimal pure-power exponents per variable, or None if some variable
    has no pure power among the leading terms.  [] encodes the unit ideal."""
    one = order.one
    if any(k == one for k in lt_keys):
        return []
    nvars = order.nvars
    exp_lists = [order.exps(k) for k in lt_keys]
    bounds = []
    for j in range(nvars):
        best = None
        for e_vec in exp_lists:
            e = e_vec[j]
            if not e:
                continue
            if any(e_vec[q] for q in range(nvars) if q != j):
                continue
            if best is None or e < best:
                best = e
        if best is None:
            return None
        bounds.append(best)
    return bounds


def count_standard_monomials(lt_keys: list, order) -> int:
    """Number of monomials divisible by no leading term (the k-dimension of
    the quotient).  Raises DimensionError if the quotient is not finite."""
    bounds = _pure_power_bounds(lt_keys, order)
    if bounds is None:
        raise DimensionError("the quotient is not zero-dimensional")
    if not bounds and lt_keys:
        return 0  # unit ideal: empty variety
    nvars = order.nvars
    # group leading terms by the largest variable in their support
    by_maxvar: list = [[] for _ in range(nvars)]
    for k in lt_keys:
        e_vec = order.exps(k)
        support = [j for j in range(nvars) if e_vec[j]]
        mv = support[-1]
        by_maxvar[mv].append(list(e_vec[: mv + 1]))
    exps = [0] * nvars
    count = 0

    def rec(j: int):
        nonlocal count
        if j == nvars:
            count += 1
            return
        checks = by_maxvar[j]
        for e in range(bounds[j]):
            exps[j] = e
            dead = False
            for lt in checks:
                for t in range(j + 1):
                    if lt[t] > exps[t]:
                        break
                else:
                    dead = True
                    break
            if dead:
                break  # larger exponents stay divisible by the same lt
            rec(j + 1)
        exps[j] = 0

    rec(0)
    return count


def quotient_dimension(G) -> int:
    """dim_k of the quotient by a zero-dimensional ideal: the count of
    standard monomials of its Groebner basis."""
    ring = G.ring if isinstance(G, GroebnerBasis) else G[0].ring
    return count_standard_monomials(_leading_keys_of(G), ring.order)


def eliminate(gens: Sequence[Polynomial], front) -> tuple:
    """Generators of (ideal cap k[back variables]).

    ``front`` lists the variables (names or indices) to eliminate; the result
    is the block-order Groebner basis restricted to its front-free elements,
    mapped back to the original ring.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return ()
    ring = gens[0].ring
    block_ring = ring.with_block_order(front)
    order, p = block_ring.order, block_ring.p
    elems = _minimal_elems((remap(g, block_ring).terms for g in gens), order, p)
    out = []
    for i, e in enumerate(elems):
        if order.front_deg(e.lt):  # leading term involves a front variable
            continue
        others = elems[:i] + elems[i + 1 :]
        tail = _reduce_full(list(e.tail), others, order, p)
        tail[e.lt] = 1
        out.append(remap(Polynomial(block_ring, tail), ring))
    out.sort(key=lambda f: f.lead_key())
    return tuple(out)


def divide_exact(f: Polynomial, g: Polynomial) -> Polynomial:
    """The quotient f/g when g divides f exactly; a failed division is an
    internal error, not user error."""
    if g.is_zero():
        raise InternalError("exact division by zero")
    if f.is_zero():
        return f.ring.zero()
    if f.ring != g.ring:
        raise ValueError("polynomials live in different rings")
    ring = f.ring
    order, p = ring.order, ring.p
    lt_g = g.lead_key()
    inv = ring.field.inv(g.terms[lt_g])
    divides = order.divides
    div = order.div
    mul = order.mul
    r = dict(f.terms)
    q: dict = {}
    while r:
        k = min(r)
        c = r[k]
        if not divides(lt_g, k):
            raise InternalError("non-exact polynomial division")
        u = div(k, lt_g)
        qc = c * inv % p
        q[u] = qc
        for tk, tc in g.terms.items():
            kk = mul(u, tk)
            v = (r.get(kk, 0) - qc * tc) % p
            if v:
                r[kk] = v
            else:
                r.pop(kk, None)
    return Polynomial(ring, q)


def lcm_poly(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic least common multiple, via the intersection of principal ideals
    (t*f, (1-t)*g) cap k[x]."""
    if f.is_zero() or g.is_zero():
        return f.ring.zero()
    ring = f.ring
    t_name = ring.fresh_name("t")
    ring_t = ring.extend(t_name)
    t = ring_t.var(ring_t.variable_index(t_name))
    lifted_f = remap(f, ring_t)
    lifted_g = remap(g, ring_t)
    elim = eliminate([t * lifted_f, (1 - t) * lifted_g], [t_name])
    if len(elim) != 1:
        raise InternalError(
            f"intersection of principal ideals returned {len(elim)} generators"
        )
    return remap(elim[0], ring).monic()


def gcd_poly(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd with f*g = gcd*lcm; the lcm comes from elimination and the
    division is exact in-ring."""
    if f.is_zero() and g.is_zero():
        raise UnsupportedInputError("gcd(0, 0) is undefined")
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    if f.degree() == 0 or g.degree() == 0:
        return f.ring.one()
    l = lcm_poly(f, g)
    return divide_exact(f * g, l).monic()


# -- squarefree part ----------------------------------------------------------


def _upoly_trim(u: list) -> list:
    while u and u[-1] == 0:
        u.pop()
    return u


def _upoly_mul(a: list, b: list, p: int) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return _upoly_trim(out)


def _upoly_rem(a: list, b: list, p: int) -> list:
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    inv = pow(lb, p - 2, p)
    while len(a) - 1 >= db and a:
        shift = len(a) - 1 - db
        c = a[-1] * inv % p
        for i, y in enumerate(b):
            a[shift + i] = (a[shift + i] - c * y) % p
        _upoly_trim(a)
    return a


def _upoly_gcd_degree(a: list, b: list, p: int) -> int:
    a, b = _upoly_trim(list(a)), _upoly_trim(list(b))
    while b:
        a, b = b, _upoly_rem(a, b, p)
    return len(a) - 1


_LINE_SOURCE = RandomScalarSource(seed=0x5153CA1E, stream=0)


def _certified_squarefree(f: Polynomial) -> bool:
    """True only when f is provably squarefree: its restriction to some line
    keeps full degree and is a squarefree univariate polynomial."""
    ring = f.ring
    p = ring.p
    d = f.degree()
    exps = ring.order.exps
    for attempt in range(3):
        src = _LINE_SOURCE.substream("squarefree-line", attempt)
        base = [src.draw(p) for _ in range(ring.nvars)]
        direction = [src.draw(p) for _ in range(ring.nvars)]
        powers: dict = {}

        def power(j: int, e: int) -> list:
            got = powers.get((j, e))
            if got is None:
                if e == 0:
                    got = [1]
                else:
                    prev = power(j, e - 1)
                    got = _upoly_mul(prev, [base[j], direction[j]], p)
                powers[(j, e)] = got
            return got

        u = [0] * (d + 1)
        for key, c in f.terms.items():
            term = [c]
            for j, e in enumerate(exps(key)):
                if e:
                    term = _upoly_mul(term, power(j, e), p)
            for i, v in enumerate(term):
                u[i] = (u[i] + v) % p
        _upoly_trim(u)
        if len(u) - 1 != d:
            continue  # degree dropped: line not generic enough
        du = _upoly_trim([i * u[i] % p for i in range(1, len(u))])
        if not du:
            continue
        if _upoly_gcd_degree(u, du, p) == 0:
            return True
    return False


def squarefree_part(f: Polynomial) -> Polynomial:
    """Monic product of the distinct irreducible factors of f.

    Computed as f / gcd(f, all partial derivatives) with iterated binary
    gcds, repeated until stable.  Total degree must stay below the
    characteristic, which rules out p-th-power ambiguity.  A cheap certified
    check (restriction to a line) skips the gcd cascade for inputs that are
    already squarefree.
    """
    if f.is_zero():
        raise UnsupportedInputError("squarefree part of the zero polynomial")
    ring = f.ring
    if f.degree() >= ring.p:
        raise UnsupportedInputError(
            f"total degree {f.degree()} >= characteristic {ring.p}: "
            "squarefree reduction is ambiguous; use a larger prime"
        )
    f = f.monic()
    if f.degree() == 0:
        return ring.one()
    while True:
        if _certified_squarefree(f):
            return f
        g = f
        for j in range(ring.nvars):
            pd = f.derivative(j)
            if pd.is_zero():
                continue
            g = gcd_poly(g, pd)
            if g.degree() == 0:
                break
        if g.degree() == 0:
            return f
        reduced = divide_exact(f, g).monic()
        if reduced == f:
            return f
        f = reduced
