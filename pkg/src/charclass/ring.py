"""Prime fields and sparse multivariate polynomials over them.

Monomials are stored as single packed integers that compare under native int
order exactly like the ring's monomial order, with ``key(m1) < key(m2)``
meaning ``m1`` is the *larger* monomial.  The leading term of a term dict is
therefore ``min(terms)``, pending monomials of a reduction sit directly in a
``heapq``, monomial multiplication is one addition (plus a constant bias for
the degree field), and divisibility is one guarded subtraction.

Grevlex layout (``x_0 > x_1 > ... > x_{n-1}``), 20-bit exponent fields::

    key = (DEGCAP - total_degree) << 20n  |  e_{n-1} << 20(n-1)  | ... |  e_0

Larger degree lowers the top field, and on equal degrees the comparison scans
exponents from the last variable down, which is exactly graded reverse lex.
The block order prepends a second degree-and-exponents group for the front
(eliminated) block.  Exponents are capped well below the 2^19 guard bit so
field arithmetic never borrows across fields.

Coefficients are least non-negative residues mod p; printing uses the
symmetric range [-p/2, p/2].
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import UnsupportedInputError

DEFAULT_PRIME = 32749


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every n < 3.3e24."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeField:
    """The field GF(p) for an odd prime p (default 32749)."""

    __slots__ = ("p",)

    def __init__(self, p: int = DEFAULT_PRIME):
        if p == 2 or not is_prime(p):
            raise UnsupportedInputError(f"characteristic must be an odd prime, got {p}")
        self.p = p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError(f"inverse of zero in GF({self.p})")
        return pow(a, self.p - 2, self.p)

    def symmetric(self, a: int) -> int:
        """Representative of a in the symmetric range [-p/2, p/2]."""
        a %= self.p
        return a - self.p if a > self.p // 2 else a

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


def field_inverse(a: int, field: PrimeField) -> int:
    """Multiplicative inverse of a nonzero residue; raises ZeroDivisionError on 0."""
    return field.inv(a)


FIELD_BITS = 20
FIELD_MASK = (1 << FIELD_BITS) - 1
GUARD_BIT = 1 << (FIELD_BITS - 1)
MAX_EXPONENT = 1 << (FIELD_BITS - 3)  # headroom for products formed during reduction
DEG_CAP = 1 << 30


class GrevlexOrder:
    """Graded reverse lexicographic order on packed-integer monomial keys."""

    name = "grevlex"

    def __init__(self, nvars: int):
        self.nvars = nvars
        shifts = tuple(FIELD_BITS * j for j in range(nvars))
        self.shifts = shifts
        deg_shift = FIELD_BITS * nvars
        self._deg_shift = deg_shift
        self.one = DEG_CAP << deg_shift
        self._bias = DEG_CAP << deg_shift
        low = 0
        guard = 0
        for s in shifts:
            low |= FIELD_MASK << s
            guard |= GUARD_BIT << s
        self.low_mask = low
        self.guard_mask = guard
        # int-arithmetic closures; captured constants avoid attribute lookups
        self.mul = lambda a, b, _bias=self._bias: a + b - _bias
        self.div = lambda a, b, _bias=self._bias: a - b + _bias
        self.divides = (
            lambda b, a, _low=low, _g=guard: (((a & _low) | _g) - (b & _low)) & _g == _g
        )

    def descriptor(self):
        return ("grevlex", self.nvars)

    def from_exps(self, exps: Sequence[int]) -> int:
        total = 0
        packed = 0
        for e, s in zip(exps, self.shifts):
            if e < 0 or e > MAX_EXPONENT:
                raise UnsupportedInputError(
                    f"exponent {e} outside the supported range 0..{MAX_EXPONENT}"
                )
            total += e
            packed |= e << s
        return ((DEG_CAP - total) << self._deg_shift) | packed

    def exps(self, key: int) -> tuple:
        return tuple((key >> s) & FIELD_MASK for s in self.shifts)

    def exp_of(self, key: int, j: int) -> int:
        return (key >> self.shifts[j]) & FIELD_MASK

    def deg(self, key: int) -> int:
        return DEG_CAP - (key >> self._deg_shift)

    def var(self, j: int) -> int:
        return ((DEG_CAP - 1) << self._deg_shift) | (1 << self.shifts[j])

    def lcm(self, a: int, b: int) -> int:
        ea = self.exps(a)
        eb = self.exps(b)
        return self.from_exps([x if x > y else y for x, y in zip(ea, eb)])


class BlockOrder:
    """Elimination order on packed keys: any monomial with front content
    beats every monomial in back variables only; grevlex inside each block."""

    name = "block"

    def __init__(self, nvars: int, front: Sequence[int]):
        front = tuple(sorted(front))
        if not front or len(set(front)) != len(front):
            raise ValueError("front block must be a nonempty set of variables")
        if any(j < 0 or j >= nvars for j in front):
            raise ValueError("front block must be a subset of the variables")
        self.nvars = nvars
        self.front = front
        self._front_set = set(front)
        self.back = tuple(j for j in range(nvars) if j not in self._front_set)
        shifts = [0] * nvars
        for slot, j in enumerate(self.back):
            shifts[j] = FIELD_BITS * slot
        back_deg_shift = FIELD_BITS * len(self.back)
        front_base = back_deg_shift + 31
        for slot, j in enumerate(front):
            shifts[j] = front_base + FIELD_BITS * slot
        self.shifts = tuple(shifts)
        self._back_deg_shift = back_deg_shift
        self._front_deg_shift = front_base + FIELD_BITS * len(front)
        self._bias = (DEG_CAP << self._front_deg_shift) + (DEG_CAP << back_deg_shift)
        self.one = self._bias
        low = 0
        guard = 0
        for s in shifts:
            low |= FIELD_MASK << s
            guard |= GUARD_BIT << s
        self.low_mask = low
        self.guard_mask = guard
        self.mul = lambda a, b, _bias=self._bias: a + b - _bias
        self.div = lambda a, b, _bias=self._bias: a - b + _bias
        self.divides = (
            lambda b, a, _low=low, _g=guard: (((a & _low) | _g) - (b & _low)) & _g == _g
        )

    def descriptor(self):
        return ("block", self.nvars, self.front)

    def from_exps(self, exps: Sequence[int]) -> int:
        packed = 0
        fdeg = 0
        bdeg = 0
        for j, e in enumerate(exps):
            if e < 0 or e > MAX_EXPONENT:
                raise UnsupportedInputError(
                    f"exponent {e} outside the supported range 0..{MAX_EXPONENT}"
                )
            packed |= e << self.shifts[j]
            if j in self._front_set:
                fdeg += e
            else:
                bdeg += e
        packed |= (DEG_CAP - fdeg) << self._front_deg_shift
        packed |= (DEG_CAP - bdeg) << self._back_deg_shift
        return packed

    def exps(self, key: int) -> tuple:
        return tuple((key >> s) & FIELD_MASK for s in self.shifts)

    def exp_of(self, key: int, j: int) -> int:
        return (key >> self.shifts[j]) & FIELD_MASK

    def deg(self, key: int) -> int:
        return self.front_deg(key) + self.back_deg(key)

    def front_deg(self, key: int) -> int:
        return DEG_CAP - (key >> self._front_deg_shift)

    def back_deg(self, key: int) -> int:
        return DEG_CAP - ((key >> self._back_deg_shift) & ((1 << 31) - 1))

    def var(self, j: int) -> int:
        exps = [0] * self.nvars
        exps[j] = 1
        return self.from_exps(exps)

    def lcm(self, a: int, b: int) -> int:
        ea = self.exps(a)
        eb = self.exps(b)
        return self.from_exps([x if x > y else y for x, y in zip(ea, eb)])


_IDENT_OK = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_")


def _valid_name(name: str) -> bool:
    return bool(name) and name[0].isalpha() and set(name) <= _IDENT_OK


class PolyRing:
    """k[x_0, ..., x_{n-1}] for k = GF(p), with a fixed monomial order."""

    __slots__ = ("field", "names", "order", "_name_index")

    def __init__(self, names: Sequence[str], p: int = DEFAULT_PRIME, order=None):
        names = tuple(names)
        if not names:
            raise UnsupportedInputError("a polynomial ring needs at least one variable")
        for name in names:
            if not _valid_name(name):
                raise UnsupportedInputError(f"invalid variable name {name!r}")
        if len(set(names)) != len(names):
            raise UnsupportedInputError("duplicate variable names")
        self.field = PrimeField(p)
        self.names = names
        self.order = order if order is not None else GrevlexOrder(len(names))
        if self.order.nvars != len(names):
            raise ValueError("order width does not match variable count")
        self._name_index = {name: j for j, name in enumerate(names)}

    # -- identity ---------------------------------------------------------

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def nvars(self) -> int:
        return len(self.names)

    def _key(self):
        return (self.p, self.names, self.order.descriptor())

    def __eq__(self, other):
        return isinstance(other, PolyRing) and other._key() == self._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"PolyRing({', '.join(self.names)}; p={self.p}, {self.order.name})"

    # -- element factories --------------------------------------------------

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return Polynomial(self, {self.order.one: 1})

    def const(self, c: int) -> "Polynomial":
        c %= self.p
        return Polynomial(self, {self.order.one: c} if c else {})

    def var(self, j) -> "Polynomial":
        if isinstance(j, str):
            j = self.variable_index(j)
        return Polynomial(self, {self.order.var(j): 1})

    def variable_index(self, name: str) -> int:
        try:
            return self._name_index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r} in {self!r}") from None

    def monomial(self, exps: Sequence[int], coeff: int = 1) -> "Polynomial":
        coeff %= self.p
        if not coeff:
            return self.zero()
        return Polynomial(self, {self.order.from_exps(exps): coeff})

    def from_exp_dict(self, d: dict) -> "Polynomial":
        terms = {}
        for exps, c in d.items():
            c %= self.p
            if c:
                key = self.order.from_exps(exps)
                v = (terms.get(key, 0) + c) % self.p
                if v:
                    terms[key] = v
                else:
                    terms.pop(key, None)
        return Polynomial(self, terms)

    # -- derived rings ------------------------------------------------------

    def extend(self, *extra: str) -> "PolyRing":
        return PolyRing(self.names + tuple(extra), self.p)

    def with_block_order(self, front: Iterable) -> "PolyRing":
        front_idx = []
        for v in front:
            front_idx.append(self.variable_index(v) if isinstance(v, str) else v)
        return PolyRing(self.names, self.p, BlockOrder(self.nvars, front_idx))

    def fresh_name(self, stem: str) -> str:
        name = stem
        while name in self._name_index:
            name += "_"
        return name


class Polynomial:
    """Immutable sparse polynomial; ``terms`` maps monomial sort keys to
    nonzero residues in [1, p)."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- predicates and views -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        deg = self.ring.order.deg
        return max(deg(k) for k in self.terms)

    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        deg = self.ring.order.deg
        degs = {deg(k) for k in self.terms}
        return len(degs) == 1

    def lead(self) -> tuple:
        """(key, coefficient) of the leading term."""
        key = min(self.terms)
        return key, self.terms[key]

    def lead_key(self) -> int:
        return min(self.terms)

    def sorted_terms(self):
        """Terms leading-first as (key, coeff) pairs."""
        return [(k, self.terms[k]) for k in sorted(self.terms)]

    def num_terms(self) -> int:
        return len(self.terms)

    def exp_terms(self) -> dict:
        """Terms as {exponent tuple: coeff}, order-independent view."""
        exps = self.ring.order.exps
        return {exps(k): c for k, c in self.terms.items()}

    # -- arithmetic -----------------------------------------------------------

    def _check_ring(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise ValueError("polynomials live in different rings")

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        self._check_ring(other)
        p = self.ring.p
        terms = dict(self.terms)
        for k, c in other.terms.items():
            v = (terms.get(k, 0) + c) % p
            if v:
                terms[k] = v
            else:
                terms.pop(k, None)
        return Polynomial(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        return Polynomial(self.ring, {k: p - c for k, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            c = other % self.ring.p
            if not c:
                return self.ring.zero()
            p = self.ring.p
            return Polynomial(self.ring, {k: v * c % p for k, v in self.terms.items()})
        self._check_ring(other)
        p = self.ring.p
        mul = self.ring.order.mul
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        terms: dict = {}
        for ka, ca in a.items():
            for kb, cb in b.items():
                k = mul(ka, kb)
                v = (terms.get(k, 0) + ca * cb) % p
                if v:
                    terms[k] = v
                else:
                    terms.pop(k, None)
        return Polynomial(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponents are not supported")
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base2 = base * base if e > 1 else base
            base, e = base2, e >> 1
        return result

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        _, c = self.lead()
        if c == 1:
            return self
        inv = self.ring.field.inv(c)
        p = self.ring.p
        return Polynomial(self.ring, {k: v * inv % p for k, v in self.terms.items()})

    def derivative(self, j) -> "Polynomial":
        """Formal partial derivative with respect to variable j (index or name)."""
        ring = self.ring
        if isinstance(j, str):
            j = ring.variable_index(j)
        if not 0 <= j < ring.nvars:
            raise IndexError(f"variable index {j} out of range")
        p = ring.p
        order = ring.order
        vkey = order.var(j)
        exp_of = order.exp_of
        div = order.div
        terms: dict = {}
        for k, c in self.terms.items():
            e = exp_of(k, j)
            if not e:
                continue
            cc = c * e % p
            if not cc:
                continue
            terms[div(k, vkey)] = cc
        return Polynomial(ring, terms)

    def evaluate(self, point: Sequence[int]) -> int:
        """Value at a point of GF(p)^nvars."""
        ring = self.ring
        p = ring.p
        exps = ring.order.exps
        total = 0
        for k, c in self.terms.items():
            v = c
            for x, e in zip(point, exps(k)):
                if e:
                    v = v * pow(x, e, p) % p
            total = (total + v) % p
        return total

    # -- equality, hashing, printing -------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and other.ring == self.ring
            and other.terms == self.terms
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __str__(self):
        return poly_to_string(self)

    def __repr__(self):
        return f"<{poly_to_string(self)}>"


def poly_to_string(f: Polynomial) -> str:
    """Canonical text form: terms leading-first, coefficients in the
    symmetric range, explicit '*' and '^'.  ``parse_polynomial`` inverts this.
    """
    if not f.terms:
        return "0"
    ring = f.ring
    order = ring.order
    pieces = []
    for key, coeff in f.sorted_terms():
        c = ring.field.symmetric(coeff)
        sign = "-" if c < 0 else "+"
        c = abs(c)
        factors = []
        for j, e in enumerate(order.exps(key)):
            if not e:
                continue
            name = ring.names[j]
            factors.append(name if e == 1 else f"{name}^{e}")
        if not factors:
            body = str(c)
        elif c == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(c)] + factors)
        pieces.append((sign, body))
    first_sign, first_body = pieces[0]
    out = first_body if first_sign == "+" else "-" + first_body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def remap(f: Polynomial, target: PolyRing) -> Polynomial:
    """Re-express f in a ring that contains (by name) every variable f uses.

    Used to move polynomials between a ring, its block-order variants and
    extensions with auxiliary variables.
    """
    if f.ring.p != target.p:
        raise ValueError("cannot remap between different characteristics")
    if f.ring == target:
        return f
    src_order = f.ring.order
    positions = []
    for j, name in enumerate(f.ring.names):
        try:
            positions.append(target.variable_index(name))
        except KeyError:
            positions.append(None)
    terms = {}
    tgt_exps = [0] * target.nvars
    for key, c in f.terms.items():
        for x in range(target.nvars):
            tgt_exps[x] = 0
        for j, e in enumerate(src_order.exps(key)):
            if not e:
                continue
            tgt = positions[j]
            if tgt is None:
                raise ValueError(
                    f"variable {f.ring.names[j]!r} does not exist in target ring"
                )
            tgt_exps[tgt] = e
        terms[target.order.from_exps(tgt_exps)] = c
    return Polynomial(target, terms)


def compose(f: Polynomial, target: PolyRing, images: Sequence[Polynomial]) -> Polynomial:
    """Evaluate f at the given images (one per source variable), all in target."""
    if len(images) != f.ring.nvars:
        raise ValueError("need one image per source variable")
    exps = f.ring.order.exps
    powers: dict = {}

    def power(j: int, e: int) -> Polynomial:
        got = powers.get((j, e))
        if got is None:
            got = images[j] ** e
            powers[(j, e)] = got
        return got

    out = target.zero()
    for key, c in f.terms.items():
        term = target.const(c)
        for j, e in enumerate(exps(key)):
            if e:
                term = term * power(j, e)
        out = out + term
    return out
