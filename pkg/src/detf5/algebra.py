"""Monomial orders, sparse homogeneous polynomials and module elements.

Monomials are exponent tuples of fixed length n.  Module monomials pair a
monomial with a basis position: a plain integer for free-module positions
e_i, or a strictly increasing tuple of column indices for exterior-basis
positions e_{i1} ^ ... ^ e_{ip}.  Comparisons go through precomputed sort
keys (grevlex_key / pot_key); the keys carry the total degree so the
graded comparison never re-sums exponents.

Position order: larger integer index wins; tuple positions compare
lexicographically with the larger tuple winning.  The monomial tiebreak
is grevlex.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

from .field import PrimeField

Monomial = tuple  # exponent tuple, length n fixed per context
BasisIndex = object  # int or strictly increasing tuple of ints


# ---------------------------------------------------------------------------
# orders


def mono_degree(m: Monomial) -> int:
    return sum(m)


def grevlex_key(m: Monomial):
    """Sort key: bigger key = grevlex-larger monomial."""
    return (sum(m), tuple(-e for e in reversed(m)))


def grevlex_cmp(a: Monomial, b: Monomial) -> int:
    if len(a) != len(b):
        raise ValueError(f"monomials over different n: {len(a)} vs {len(b)}")
    ka, kb = grevlex_key(a), grevlex_key(b)
    return (ka > kb) - (ka < kb)


def position_key(idx: BasisIndex):
    # int and tuple positions never mix within one module; Python's tuple
    # comparison is lex with the larger tuple winning, which is the adopted
    # direction for exterior-basis positions.
    return idx


def pot_key(idx: BasisIndex, m: Monomial):
    return (position_key(idx), grevlex_key(m))


def pot_cmp(a: tuple, b: tuple) -> int:
    """Compare module monomials given as (index, monomial) pairs."""
    ia, ma = a
    ib, mb = b
    if isinstance(ia, tuple) != isinstance(ib, tuple):
        raise TypeError(f"incomparable basis index kinds: {ia!r} vs {ib!r}")
    if isinstance(ia, tuple) and len(ia) != len(ib):
        raise TypeError(f"basis tuples of different length: {ia!r} vs {ib!r}")
    ka, kb = pot_key(ia, ma), pot_key(ib, mb)
    return (ka > kb) - (ka < kb)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Optional[Monomial]:
    """a / b, or None when b does not divide a."""
    q = []
    for x, y in zip(a, b):
        if x < y:
            return None
        q.append(x - y)
    return tuple(q)


def mono_divides(b: Monomial, a: Monomial) -> bool:
    return all(y <= x for x, y in zip(a, b))


def max_var(m: Monomial) -> int:
    """Largest variable index (0-based) with a positive exponent; -1 for 1."""
    for j in range(len(m) - 1, -1, -1):
        if m[j]:
            return j
    return -1


@lru_cache(maxsize=None)
def enumerate_monomials(n: int, d: int) -> tuple:
    """All monomials of degree d in n variables, strictly decreasing grevlex."""
    if n < 1:
        raise ValueError("need n >= 1")
    if d < 0:
        return ()

    out = []

    def rec(prefix, rest, left):
        if rest == 1:
            out.append(prefix + (left,))
            return
        for e in range(left, -1, -1):
            rec(prefix + (e,), rest - 1, left - e)

    rec((), n, d)
    out.sort(key=grevlex_key, reverse=True)
    return tuple(out)


# ---------------------------------------------------------------------------
# polynomials


class Poly:
    """Sparse homogeneous polynomial over a prime field.

    terms: dict monomial -> coefficient in [1, p).  The zero polynomial has
    no terms and degree None.
    """

    __slots__ = ("n", "field", "terms")

    def __init__(self, n: int, field: PrimeField, terms: Optional[dict] = None):
        self.n = n
        self.field = field
        self.terms = {}
        if terms:
            p = field.modulus
            for m, c in terms.items():
                c %= p
                if c:
                    if len(m) != n:
                        raise ValueError(f"monomial {m} not over {n} variables")
                    self.terms[m] = c
        if self.terms:
            degs = {sum(m) for m in self.terms}
            if len(degs) != 1:
                raise ValueError(f"inhomogeneous support, degrees {sorted(degs)}")

    # -- construction helpers

    @classmethod
    def zero(cls, n: int, field: PrimeField) -> "Poly":
        return cls(n, field)

    @classmethod
    def monomial(cls, n, field, m, c=1) -> "Poly":
        return cls(n, field, {tuple(m): c})

    @classmethod
    def variable(cls, n, field, j, c=1) -> "Poly":
        e = [0] * n
        e[j] = 1
        return cls(n, field, {tuple(e): c})

    # -- predicates / accessors

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> Optional[int]:
        if not self.terms:
            return None
        return sum(next(iter(self.terms)))

    def lm(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=grevlex_key)

    def lc(self) -> int:
        return self.terms[self.lm()]

    def coeff(self, m: Monomial) -> int:
        return self.terms.get(tuple(m), 0)

    # -- arithmetic

    def _compat(self, other: "Poly"):
        if self.n != other.n or self.field.modulus != other.field.modulus:
            raise ValueError("polynomials over different rings")

    def add(self, other: "Poly") -> "Poly":
        self._compat(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        p = self.field.modulus
        t = dict(self.terms)
        for m, c in other.terms.items():
            v = (t.get(m, 0) + c) % p
            if v:
                t[m] = v
            else:
                t.pop(m, None)
        return Poly(self.n, self.field, t)

    def sub(self, other: "Poly") -> "Poly":
        return self.add(other.scale(-1))

    def scale(self, c: int) -> "Poly":
        c %= self.field.modulus
        if c == 0 or self.is_zero():
            return Poly.zero(self.n, self.field)
        p = self.field.modulus
        return Poly(self.n, self.field, {m: v * c % p for m, v in self.terms.items()})

    def mul_mono(self, m: Monomial, c: int = 1) -> "Poly":
        c %= self.field.modulus
        if c == 0 or self.is_zero():
            return Poly.zero(self.n, self.field)
        p = self.field.modulus
        return Poly(
            self.n, self.field, {mono_mul(t, m): v * c % p for t, v in self.terms.items()}
        )

    def mul(self, other: "Poly") -> "Poly":
        self._compat(other)
        if self.is_zero() or other.is_zero():
            return Poly.zero(self.n, self.field)
        p = self.field.modulus
        acc: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                acc[m] = (acc.get(m, 0) + c1 * c2) % p
        return Poly(self.n, self.field, acc)

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.lc()))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poly)
            and self.n == other.n
            and self.field.modulus == other.field.modulus
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, self.field.modulus, frozenset(self.terms.items())))

    def __repr__(self):
        return f"Poly({format_poly(self)})"


def partial_derivative(f: Poly, j: int) -> Poly:
    if not 0 <= j < f.n:
        raise IndexError(f"variable index {j} out of range for n={f.n}")
    p = f.field.modulus
    t: dict = {}
    for m, c in f.terms.items():
        e = m[j]
        if e:
            d = list(m)
            d[j] = e - 1
            v = c * e % p
            if v:
                t[tuple(d)] = v
    return Poly(f.n, f.field, t)


def random_homogeneous(n: int, d: int, field: PrimeField, rng) -> Poly:
    """Independent uniform coefficient for every monomial of Mon_d."""
    if d < 1:
        raise ValueError("need degree >= 1")
    return Poly(n, field, {m: field.random(rng) for m in enumerate_monomials(n, d)})


def homogenize(f: Poly) -> Poly:
    """Pad every term with a new last variable; the new variable is
    grevlex-smallest, so leading terms of already-top-degree parts survive."""
    if f.is_zero():
        raise ValueError("cannot homogenize the zero polynomial")
    d = max(sum(m) for m in f.terms)
    t = {m + (d - sum(m),): c for m, c in f.terms.items()}
    return Poly(f.n + 1, f.field, t)


def dehomogenize(f: Poly) -> Poly:
    """Set the last variable to 1.  Inverse of homogenize on its image."""
    if f.is_zero():
        raise ValueError("cannot dehomogenize the zero polynomial")
    p = f.field.modulus
    t: dict = {}
    for m, c in f.terms.items():
        key = m[:-1]
        t[key] = (t.get(key, 0) + c) % p
    t = {m: c for m, c in t.items() if c}
    # the result is inhomogeneous in general; bypass the homogeneity check
    g = Poly.zero(f.n - 1, f.field)
    g.terms = t
    return g


# ---------------------------------------------------------------------------
# polynomial text format
#
# term (+/- term)*, term = coeff['*'var['^'exp]...], vars x1..xN.
# Emission is canonical: terms in decreasing grevlex, explicit coefficient,
# '+' separators only (coefficients are canonical representatives).

_TERM_RE = re.compile(r"^(\d+)?((?:\*?x\d+(?:\^\d+)?)*)$")
_VAR_RE = re.compile(r"x(\d+)(?:\^(\d+))?")


def format_poly(f: Poly) -> str:
    if f.is_zero():
        return "0"
    parts = []
    for m in sorted(f.terms, key=grevlex_key, reverse=True):
        c = f.terms[m]
        bits = [str(c)]
        for j, e in enumerate(m):
            if e == 1:
                bits.append(f"x{j + 1}")
            elif e > 1:
                bits.append(f"x{j + 1}^{e}")
        parts.append("*".join(bits))
    return " + ".join(parts)


class PolyParseError(ValueError):
    pass


def parse_poly(text: str, n: int, field: PrimeField) -> Poly:
    s = text.replace(" ", "")
    if not s:
        raise PolyParseError("empty polynomial text")
    if s == "0":
        return Poly.zero(n, field)
    # split into signed terms
    chunks = re.split(r"(?=[+-])", s)
    p = field.modulus
    acc: dict = {}
    for chunk in chunks:
        if not chunk:
            continue
        sign = 1
        if chunk[0] == "+":
            chunk = chunk[1:]
        elif chunk[0] == "-":
            sign = -1
            chunk = chunk[1:]
        m = _TERM_RE.match(chunk)
        if not m:
            raise PolyParseError(f"bad term {chunk!r}")
        coeff = int(m.group(1)) if m.group(1) else 1
        exps = [0] * n
        for vm in _VAR_RE.finditer(m.group(2) or ""):
            j = int(vm.group(1))
            if not 1 <= j <= n:
                raise PolyParseError(f"variable x{j} out of range 1..{n}")
            exps[j - 1] += int(vm.group(2)) if vm.group(2) else 1
        key = tuple(exps)
        acc[key] = (acc.get(key, 0) + sign * coeff) % p
    acc = {m: c for m, c in acc.items() if c}
    try:
        return Poly(n, field, acc)
    except ValueError as e:
        raise PolyParseError(str(e)) from None


# ---------------------------------------------------------------------------
# module elements and polynomial matrices


class ModuleElement:
    """Element of a free module with basis positions, components are Poly.

    components: dict basis index -> nonzero Poly, all of one common degree
    (positions carry no degree shift; callers track shifts externally).
    """

    __slots__ = ("n", "field", "components")

    def __init__(self, n: int, field: PrimeField, components: Optional[dict] = None):
        self.n = n
        self.field = field
        self.components = {}
        if components:
            for idx, poly in components.items():
                if not poly.is_zero():
                    self.components[idx] = poly
        degs = {poly.degree for poly in self.components.values()}
        if len(degs) > 1:
            raise ValueError(f"mixed component degrees {sorted(degs)}")

    @classmethod
    def zero(cls, n, field):
        return cls(n, field)

    @classmethod
    def from_poly(cls, f: Poly, idx: BasisIndex = 0) -> "ModuleElement":
        return cls(f.n, f.field, {idx: f})

    def is_zero(self) -> bool:
        return not self.components

    @property
    def degree(self) -> Optional[int]:
        for poly in self.components.values():
            return poly.degree
        return None

    def lm(self) -> tuple:
        """Leading module monomial as (index, monomial) under POT."""
        if self.is_zero():
            raise ValueError("zero module element has no leading monomial")
        best = None
        for idx, poly in self.components.items():
            cand = (idx, poly.lm())
            if best is None or pot_cmp(cand, best) > 0:
                best = cand
        return best

    def add(self, other: "ModuleElement") -> "ModuleElement":
        comp = dict(self.components)
        for idx, poly in other.components.items():
            comp[idx] = comp[idx].add(poly) if idx in comp else poly
        return ModuleElement(self.n, self.field, comp)

    def scale(self, c: int) -> "ModuleElement":
        return ModuleElement(
            self.n, self.field, {i: poly.scale(c) for i, poly in self.components.items()}
        )

    def mul_mono(self, m: Monomial, c: int = 1) -> "ModuleElement":
        return ModuleElement(
            self.n, self.field, {i: poly.mul_mono(m, c) for i, poly in self.components.items()}
        )

    def as_poly(self) -> Poly:
        """The single component of an s=1 element (position 0)."""
        if self.is_zero():
            return Poly.zero(self.n, self.field)
        if set(self.components) != {0}:
            raise ValueError("not a rank-1 module element")
        return self.components[0]

    def __eq__(self, other):
        return (
            isinstance(other, ModuleElement)
            and self.n == other.n
            and self.components == other.components
        )

    def __repr__(self):
        inner = ", ".join(f"{i}: {format_poly(poly)}" for i, poly in self.components.items())
        return f"ModuleElement({{{inner}}})"


@dataclass
class PolyMatrix:
    """p x q matrix of homogeneous polynomials of one common entry degree."""

    p: int
    q: int
    entry_degree: int
    entries: list  # p rows, each a list of q Poly

    def __post_init__(self):
        if self.p > self.q:
            raise ValueError(f"need p <= q, got {self.p} x {self.q}")
        if len(self.entries) != self.p or any(len(r) != self.q for r in self.entries):
            raise ValueError("entry grid does not match declared shape")
        for row in self.entries:
            for f in row:
                if not f.is_zero() and f.degree != self.entry_degree:
                    raise ValueError(
                        f"entry degree {f.degree} != declared {self.entry_degree}"
                    )

    @property
    def n(self) -> int:
        return self.entries[0][0].n

    @property
    def field(self) -> PrimeField:
        return self.entries[0][0].field

    def column(self, j: int) -> list:
        return [self.entries[i][j] for i in range(self.p)]


def random_poly_matrix(n, p, q, d0, field, rng) -> PolyMatrix:
    rows = [[random_homogeneous(n, d0, field, rng) for _ in range(q)] for _ in range(p)]
    return PolyMatrix(p, q, d0, rows)
