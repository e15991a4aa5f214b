"""Arithmetic in A_*(P^n) = Z[h]/(h^{n+1}) and the closed-form class
formulas: Segre classes from projective degrees (series form and residual
recurrence), Chern-Schwartz-MacPherson classes from polar degrees and from
singularity Segre classes, the smooth complete-intersection product formula,
and the involution between a CSM class and the Euler characteristics of its
general linear sections.

Everything here is exact integer arithmetic; intermediate values use
Python's arbitrary-precision ints throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Sequence

from .errors import InternalError


class ChowClass:
    """sum(c_i h^i) in Z[h]/(h^{n+1}), stored as the coefficient tuple c_0..c_n."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Sequence[int] = ()):
        if n < 0:
            raise ValueError("ambient dimension must be non-negative")
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) > n + 1:
            raise ValueError(f"expected at most {n + 1} coefficients, got {len(coeffs)}")
        self.n = n
        self.coeffs = coeffs + (0,) * (n + 1 - len(coeffs))

    @classmethod
    def zero(cls, n: int) -> "ChowClass":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "ChowClass":
        return cls(n, (1,))

    @classmethod
    def h_power(cls, n: int, i: int, c: int = 1) -> "ChowClass":
        coeffs = [0] * (n + 1)
        if 0 <= i <= n:
            coeffs[i] = c
        return cls(n, coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _check(self, other: "ChowClass"):
        if self.n != other.n:
            raise ValueError("classes live in Chow rings of different dimension")

    def __add__(self, other):
        if isinstance(other, int):
            other = ChowClass(self.n, (other,))
        self._check(other)
        return ChowClass(self.n, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return ChowClass(self.n, [-a for a in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, int):
            other = ChowClass(self.n, (other,))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return ChowClass(self.n, [other * a for a in self.coeffs])
        self._check(other)
        out = [0] * (self.n + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(self.n + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return ChowClass(self.n, out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "ChowClass":
        """Multiplication by h^k."""
        return ChowClass(self.n, (0,) * k + self.coeffs[: self.n + 1 - k])

    def unit_inverse(self) -> "ChowClass":
        """Inverse of a class with constant term +-1 (geometric series)."""
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise ValueError("only classes with constant term +-1 are invertible")
        inv = [c0] + [0] * self.n
        for k in range(1, self.n + 1):
            acc = 0
            for i in range(1, k + 1):
                acc += self.coeffs[i] * inv[k - i]
            inv[k] = -c0 * acc
        return ChowClass(self.n, inv)

    def integral(self) -> int:
        """Degree of the zero-dimensional component: the h^n coefficient."""
        return self.coeffs[self.n]

    def to_list(self) -> list:
        return list(self.coeffs)

    @classmethod
    def from_list(cls, coeffs: Sequence[int]) -> "ChowClass":
        if not coeffs:
            raise ValueError("a class needs at least one coefficient")
        return cls(len(coeffs) - 1, coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, ChowClass)
            and other.n == self.n
            and other.coeffs == self.coeffs
        )

    def __hash__(self):
        return hash((self.n, self.coeffs))

    def __str__(self):
        if self.is_zero():
            return "0"
        pieces = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                h = "h" if i == 1 else f"h^{i}"
                body = h if a == 1 else f"{a}*{h}"
            pieces.append((sign, body))
        sign0, body0 = pieces[0]
        out = body0 if sign0 == "+" else "-" + body0
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"ChowClass(P^{self.n}: {self})"


def hyperplane_powers(n: int, d: int = 1) -> ChowClass:
    """(1 + d*h) in A_*(P^n)."""
    return ChowClass(n, (1, d))


@dataclass(frozen=True)
class ProjectiveDegrees:
    """The integer sequence (g_0, ..., g_n) of a rational map P^n -> P^m."""

    g: tuple
    source: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "g", tuple(int(v) for v in self.g))
        if not self.g:
            raise ValueError("a degree list needs at least g_0")
        if self.g[0] != 1:
            raise ValueError(f"g_0 must be 1, got {self.g[0]}")
        if any(v < 0 for v in self.g):
            raise ValueError("projective degrees are non-negative")

    @property
    def n(self) -> int:
        return len(self.g) - 1

    def __iter__(self):
        return iter(self.g)

    def __getitem__(self, i):
        return self.g[i]

    def __len__(self):
        return len(self.g)


def _degree_list(g) -> tuple:
    if isinstance(g, ProjectiveDegrees):
        return g.g
    return tuple(int(v) for v in g)


def segre_from_degrees(g, d: int) -> ChowClass:
    """Segre class 1 - sum_i g_i h^i / (1+dh)^{i+1} of the scheme cut out by
    degree-d forms whose rational map has projective degrees g."""
    gs = _degree_list(g)
    n = len(gs) - 1
    inv = hyperplane_powers(n, d).unit_inverse()
    acc = ChowClass.zero(n)
    power = inv
    for i, gi in enumerate(gs):
        if gi:
            acc = acc + (power * gi).shift(i)
        if i < n:
            power = power * inv
    return ChowClass.one(n) - acc


def segre_from_degrees_recurrence(g, d: int, codim: int) -> ChowClass:
    """The same Segre class through the residual-degree recurrence
    s_p = d^j - g_j - sum_{i=0}^{p-1} C(j, p-i) d^{p-i} s_i  (p = j - codim),
    where s_p is the h^{codim+p} coefficient."""
    gs = _degree_list(g)
    n = len(gs) - 1
    if not 1 <= codim <= n + 1:
        raise ValueError(f"codimension {codim} out of range for P^{n}")
    coeffs = [0] * (n + 1)
    svals: list = []
    for j in range(codim, n + 1):
        p_idx = j - codim
        total = d**j - gs[j]
        for i in range(p_idx):
            total -= comb(j, p_idx - i) * d ** (p_idx - i) * svals[i]
        svals.append(total)
        coeffs[j] = total
    return ChowClass(n, coeffs)


def g_from_segre(s: ChowClass, d: int, codim: int) -> ProjectiveDegrees:
    """Projective degrees from a Segre class: g_j = sum_i C(j,i) d^{j-i} st_i
    with st_0 = 1, st_i = 0 for 0 < i < codim and st_i = -s_i for i >= codim."""
    n = s.n
    if not 1 <= codim <= n + 1:
        raise ValueError(f"codimension {codim} out of range for P^{n}")
    if any(s.coeffs[i] for i in range(min(codim, n + 1))):
        raise ValueError("Segre coefficients below the codimension must vanish")
    st = [0] * (n + 1)
    st[0] = 1
    for i in range(codim, n + 1):
        st[i] = -s.coeffs[i]
    g = []
    for j in range(n + 1):
        g.append(sum(comb(j, i) * d ** (j - i) * st[i] for i in range(j + 1)))
    return ProjectiveDegrees(tuple(g), source="from-segre")


def csm_from_polar_degrees(g) -> ChowClass:
    """CSM class of a squarefree hypersurface from the projective degrees of
    its polar (gradient) map:
    (1+h)^{n+1} - sum_j g_j (-h)^j (1+h)^{n-j}."""
    gs = _degree_list(g)
    n = len(gs) - 1
    out = [comb(n + 1, k) for k in range(n + 1)]
    for j, gj in enumerate(gs):
        if not gj:
            continue
        sign = gj if j % 2 == 0 else -gj
        for t in range(n + 1 - j):
            out[j + t] -= sign * comb(n - j, t)
    return ChowClass(n, out)


def csm_from_singularity_segre(s_sing: ChowClass, d: int) -> ChowClass:
    """CSM class of a squarefree degree-d hypersurface V from the Segre class
    of its singularity subscheme, graded by dimension: with s_k the h^{n-k}
    coefficient of ``s_sing``,

        c_SM(V) = (1+h)^{n+1} * ( dh/(1+dh)
                  + sum_m h^{n-m} sum_j C(n-m, j) (-d)^j (-1)^{n-m-j} s_{m+j} ).
    """
    n = s_sing.n
    s_v = [0] * (n + 1)
    for k in range(1, n + 1):
        s_v[k] = d * (-d) ** (k - 1)
    inner = list(s_v)
    for m in range(n + 1):
        c = n - m
        total = 0
        for j in range(c + 1):
            s_dim = s_sing.coeffs[n - (m + j)]
            if s_dim:
                total += comb(c, j) * (-d) ** j * (-1) ** (c - j) * s_dim
        inner[c] += total
    tangent = ChowClass(n, [comb(n + 1, k) for k in range(n + 1)])
    return tangent * ChowClass(n, inner)


def smooth_complete_intersection_csm(degrees: Sequence[int], n: int) -> ChowClass:
    """Total Chern class (pushed to P^n) of a smooth global complete
    intersection of hypersurfaces with the given degrees:
    (1+h)^{n+1} * prod_i d_i h / (1 + d_i h)."""
    degrees = tuple(degrees)
    if not 1 <= len(degrees) <= n:
        raise ValueError(
            f"a complete intersection in P^{n} takes between 1 and {n} degrees"
        )
    out = ChowClass(n, [comb(n + 1, k) for k in range(n + 1)])
    for d in degrees:
        out = out * hyperplane_powers(n, d).unit_inverse().shift(1) * d
    return out


def involute(p_coeffs: Sequence[int]) -> list:
    """The involution q(t) = (t * p(-t-1) + p(0)) / (t+1) on integer
    coefficient vectors (ascending powers of t).  The division is exact for
    every integer vector; a nonzero remainder signals corrupted input."""
    p = [int(c) for c in p_coeffs]
    if not p:
        return []
    m = len(p) - 1
    r = [0] * (m + 1)
    for j, pj in enumerate(p):
        if not pj:
            continue
        sign = pj if j % 2 == 0 else -pj
        for k in range(j + 1):
            r[k] += sign * comb(j, k)
    num = [p[0]] + r  # t * r(t) + p(0)
    q = [0] * (m + 1)
    q[0] = num[0]
    for k in range(1, m + 1):
        q[k] = num[k] - q[k - 1]
    if num[m + 1] != q[m]:
        raise InternalError("involution division by (t+1) was not exact")
    return q


def section_euler_characteristics(csm: ChowClass) -> tuple:
    """(chi(V), chi(V cap L1), chi(V cap L1 cap L2), ...) for general
    hyperplanes L_i, read off a CSM class via the involution; one value per
    dimension of V down to 0.  The zero class (empty scheme) gives ()."""
    if csm.is_zero():
        return ()
    n = csm.n
    dim = n - min(i for i, c in enumerate(csm.coeffs) if c)
    p = [csm.coeffs[n - k] for k in range(n + 1)]
    q = involute(p)
    return tuple((-1) ** k * q[k] for k in range(dim + 1))
