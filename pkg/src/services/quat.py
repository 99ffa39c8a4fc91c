"""
Quaternion rings presented by ternary quadratic forms.

Usage:
    ring = ring_from_form(TernaryForm.parse("1 1 1 1 1 1"))   # Hurwitz order
    v1, v2, v3 = ring.basis_vectors()
    v2 * v1            # -> -1 + v1 + v2 + v3
    norm(v1), trace(v1)

The multiplication table is computed once per form by reducing words in the
even Clifford algebra of q_T, with v1 = e2e3, v2 = e3e1, v3 = e1e2.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from src.errors import DomainError, InvalidInputError, UsageError
from src.utils.scalars import CScalar, Scalar, parse_scalar, format_scalar, sigma

logger = logging.getLogger("fgsp6.quat")


@dataclass(frozen=True)
class TernaryForm:
    """q_T(x,y,z) = ax^2 + by^2 + cz^2 + dyz + ezx + fxy."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    e: Fraction
    f: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c", "d", "e", "f"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @classmethod
    def from_sextuple(cls, values: Sequence) -> "TernaryForm":
        if len(values) != 6:
            raise InvalidInputError(f"A ternary form needs 6 coefficients, got {len(values)}")
        return cls(*values)

    @classmethod
    def parse(cls, text: str) -> "TernaryForm":
        parts = text.split()
        if len(parts) != 6:
            raise InvalidInputError(f"A ternary form needs 6 integers 'a b c d e f', got {text!r}")
        try:
            return cls(*(int(p) for p in parts))
        except ValueError as exc:
            raise InvalidInputError(f"Form coefficients must be integers: {text!r}") from exc

    @classmethod
    def from_matrix(cls, t) -> "TernaryForm":
        """Inverse of ``matrix``: diagonal gives (a,b,c), off-diagonal doubles give (d,e,f)."""
        return cls(t[0][0], t[1][1], t[2][2], 2 * t[1][2], 2 * t[0][2], 2 * t[0][1])

    def sextuple(self) -> Tuple[Fraction, ...]:
        return (self.a, self.b, self.c, self.d, self.e, self.f)

    def matrix(self) -> List[List[Fraction]]:
        half = Fraction(1, 2)
        return [
            [self.a, half * self.f, half * self.e],
            [half * self.f, self.b, half * self.d],
            [half * self.e, half * self.d, self.c],
        ]

    def det(self) -> Fraction:
        a, b, c, d, e, f = self.sextuple()
        return a * b * c + (d * e * f - a * d * d - b * e * e - c * f * f) / 4

    def evaluate(self, x, y, z):
        return (self.a * x * x + self.b * y * y + self.c * z * z
                + self.d * y * z + self.e * z * x + self.f * x * y)

    def bilinear(self, u: Sequence, v: Sequence):
        """B(u,v) = q(u+v) - q(u) - q(v) = 2 u^T T v."""
        t = self.matrix()
        return 2 * sum(u[i] * t[i][j] * v[j] for i in range(3) for j in range(3))

    def is_positive_definite(self) -> bool:
        minor1 = 2 * self.a
        minor2 = 4 * self.a * self.b - self.f * self.f
        return minor1 > 0 and minor2 > 0 and self.det() > 0

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.sextuple())

    def scaled(self, lam) -> "TernaryForm":
        return TernaryForm(*(lam * x for x in self.sextuple()))

    def __str__(self):
        return " ".join(format_scalar(x) for x in self.sextuple())


class Quaternion:
    """Element t + x1 v1 + x2 v2 + x3 v3 of a quaternion ring; immutable."""

    __slots__ = ("ring", "coords")

    def __init__(self, ring: "QuaternionRing", coords: Sequence[Scalar]):
        if len(coords) != 4:
            raise InvalidInputError("A quaternion has 4 coordinates")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coords", tuple(
            Fraction(x) if isinstance(x, int) else x for x in coords))

    def __setattr__(self, name, value):
        raise AttributeError("Quaternion is immutable")

    def _check(self, other: "Quaternion"):
        if other.ring is not self.ring and other.ring.form != self.ring.form:
            raise UsageError(
                f"Quaternions from different rings ({self.ring.form} vs {other.ring.form})")

    def __add__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        self._check(other)
        return Quaternion(self.ring, [x + y for x, y in zip(self.coords, other.coords)])

    def __sub__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        self._check(other)
        return Quaternion(self.ring, [x - y for x, y in zip(self.coords, other.coords)])

    def __neg__(self):
        return Quaternion(self.ring, [-x for x in self.coords])

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return mul(self, other)
        if isinstance(other, (int, Fraction, CScalar)):
            return Quaternion(self.ring, [x * other for x in self.coords])
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, CScalar)):
            return Quaternion(self.ring, [other * x for x in self.coords])
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        return self.ring.form == other.ring.form and self.coords == other.coords

    def __hash__(self):
        return hash((self.ring.form, self.coords))

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.coords)

    def is_scalar(self) -> bool:
        return all(x == 0 for x in self.coords[1:])

    def conj(self) -> "Quaternion":
        return conj(self)

    def sigma(self) -> "Quaternion":
        """Complex conjugation of the coordinates (commutes with conj)."""
        return Quaternion(self.ring, [sigma(x) for x in self.coords])

    def __repr__(self):
        return f"Quaternion({self})"

    def __str__(self):
        return " ".join(format_scalar(x) for x in self.coords)


class QuaternionRing:
    """Free rank-4 ring with basis {1, v1, v2, v3} and a dense structure-constant table."""

    def __init__(self, form: TernaryForm, table: Sequence[Sequence[Sequence[Fraction]]]):
        self.form = form
        self.table = tuple(tuple(tuple(Fraction(x) for x in entry) for entry in row) for row in table)
        self._products = [
            [[(k, s) for k, s in enumerate(self.table[i][j]) if s != 0] for j in range(4)]
            for i in range(4)
        ]
        self.traces = (Fraction(2), form.d, form.e, form.f)
        self.pair_gram = [
            [self._basis_pair(i, j) for j in range(4)] for i in range(4)
        ]

    def _basis_pair(self, i: int, j: int) -> Fraction:
        # tr(b_i b_j^*) with b_j^* = tr(b_j) - b_j
        tr_j = self.traces[j]
        prod_coords = self.table[i][j]
        tr_prod = sum(self.traces[k] * prod_coords[k] for k in range(4))
        return tr_j * self.traces[i] - tr_prod

    def element(self, coords: Sequence[Scalar]) -> Quaternion:
        return Quaternion(self, coords)

    def zero(self) -> Quaternion:
        return Quaternion(self, (0, 0, 0, 0))

    def one(self) -> Quaternion:
        return Quaternion(self, (1, 0, 0, 0))

    def scalar(self, x: Scalar) -> Quaternion:
        return Quaternion(self, (x, 0, 0, 0))

    def basis(self, k: int) -> Quaternion:
        coords = [0, 0, 0, 0]
        coords[k] = 1
        return Quaternion(self, coords)

    def basis_vectors(self) -> Tuple[Quaternion, Quaternion, Quaternion]:
        return self.basis(1), self.basis(2), self.basis(3)

    def __eq__(self, other):
        return isinstance(other, QuaternionRing) and other.form == self.form

    def __hash__(self):
        return hash(self.form)

    def __repr__(self):
        return f"QuaternionRing({self.form})"


# ------------------- Clifford reduction -------------------

def _clifford_reducer(form: TernaryForm):
    q = (form.a, form.b, form.c)
    bil = {(1, 2): form.d, (2, 1): form.d, (0, 2): form.e, (2, 0): form.e,
           (0, 1): form.f, (1, 0): form.f}
    cache: Dict[tuple, Dict[tuple, Fraction]] = {}

    def combine(target, source, factor):
        for word, coeff in source.items():
            value = target.get(word, Fraction(0)) + factor * coeff
            if value == 0:
                target.pop(word, None)
            else:
                target[word] = value

    def reduce(word: tuple) -> Dict[tuple, Fraction]:
        if word in cache:
            return cache[word]
        result: Dict[tuple, Fraction] = {}
        for k in range(len(word) - 1):
            i, j = word[k], word[k + 1]
            if i == j:
                # e_i^2 = q(e_i)
                combine(result, reduce(word[:k] + word[k + 2:]), q[i])
                break
            if i > j:
                # e_i e_j = B(e_i, e_j) - e_j e_i
                combine(result, reduce(word[:k] + word[k + 2:]), bil[(i, j)])
                combine(result, reduce(word[:k] + (j, i) + word[k + 2:]), Fraction(-1))
                break
        else:
            result = {word: Fraction(1)}
        cache[word] = result
        return result

    return reduce


# words of 1, v1 = e2e3, v2 = e3e1, v3 = e1e2
_EVEN_BASIS_WORDS = ((), (1, 2), (2, 0), (0, 1))


def _normal_words_to_coords(form: TernaryForm, reduced: Dict[tuple, Fraction]) -> List[Fraction]:
    coords = [Fraction(0)] * 4
    for word, coeff in reduced.items():
        if word == ():
            coords[0] += coeff
        elif word == (1, 2):
            coords[1] += coeff
        elif word == (0, 1):
            coords[3] += coeff
        elif word == (0, 2):
            # e1e3 = e - v2
            coords[0] += coeff * form.e
            coords[2] -= coeff
        else:
            raise InvalidInputError(f"Odd word {word} in an even product")
    return coords


@lru_cache(maxsize=256)
def ring_from_form(form: TernaryForm) -> QuaternionRing:
    """Build the even Clifford ring of q_T in its good basis."""
    reduce = _clifford_reducer(form)
    table = [
        [_normal_words_to_coords(form, reduce(_EVEN_BASIS_WORDS[i] + _EVEN_BASIS_WORDS[j]))
         for j in range(4)]
        for i in range(4)
    ]
    logger.debug(f"Built quaternion ring for form {form}")
    return QuaternionRing(form, table)


def good_basis_table(form: TernaryForm) -> List[List[List[Fraction]]]:
    """The table forced by the good-basis laws, written out directly."""
    a, b, c, d, e, f = form.sextuple()
    one = [Fraction(1), 0, 0, 0]
    v = {1: [0, 1, 0, 0], 2: [0, 0, 1, 0], 3: [0, 0, 0, 1]}
    prods = {
        (1, 1): [-b * c, d, 0, 0],
        (2, 2): [-c * a, 0, e, 0],
        (3, 3): [-a * b, 0, 0, f],
        (2, 3): [a * d, -a, 0, 0],
        (3, 1): [b * e, 0, -b, 0],
        (1, 2): [c * f, 0, 0, -c],
        (3, 2): [-e * f, a, f, e],
        (1, 3): [-d * f, f, b, d],
        (2, 1): [-d * e, e, d, c],
    }
    table = [[None] * 4 for _ in range(4)]
    table[0][0] = one
    for k in (1, 2, 3):
        table[0][k] = v[k]
        table[k][0] = v[k]
    for (i, j), coords in prods.items():
        table[i][j] = coords
    return [[[Fraction(x) for x in entry] for entry in row] for row in table]


# ------------------- Arithmetic -------------------

def mul(x: Quaternion, y: Quaternion) -> Quaternion:
    x._check(y)
    products = x.ring._products
    out = [Fraction(0)] * 4
    for i, xi in enumerate(x.coords):
        if xi == 0:
            continue
        row = products[i]
        for j, yj in enumerate(y.coords):
            if yj == 0:
                continue
            xy = xi * yj
            for k, s in row[j]:
                out[k] = out[k] + xy * s
    return Quaternion(x.ring, out)


def trace(x: Quaternion) -> Scalar:
    t = x.ring.traces
    return sum((t[k] * x.coords[k] for k in range(4)), Fraction(0))


def conj(x: Quaternion) -> Quaternion:
    tr = trace(x)
    c = x.coords
    return Quaternion(x.ring, (tr - c[0], -c[1], -c[2], -c[3]))


def pair(u: Quaternion, v: Quaternion) -> Scalar:
    """(u, v) = tr(u v^*)."""
    u._check(v)
    gram = u.ring.pair_gram
    total = Fraction(0)
    for i, ui in enumerate(u.coords):
        if ui == 0:
            continue
        row = gram[i]
        for j, vj in enumerate(v.coords):
            if vj != 0 and row[j] != 0:
                total = total + ui * vj * row[j]
    return total


def norm(x: Quaternion) -> Scalar:
    return pair(x, x) / 2


def imaginary_part(x: Quaternion) -> Quaternion:
    return x - x.ring.scalar(trace(x) / 2)


def inverse(x: Quaternion) -> Quaternion:
    n = norm(x)
    if n == 0:
        raise DomainError(f"Quaternion {x} has norm 0 and no inverse")
    return conj(x) * (1 / n)


def left_mult_matrix(x: Quaternion) -> List[List[Scalar]]:
    """Matrix M with M[k][j] = k-th coordinate of x * b_j."""
    cols = [mul(x, x.ring.basis(j)).coords for j in range(4)]
    return [[cols[j][k] for j in range(4)] for k in range(4)]


def parse_quaternion(ring: QuaternionRing, text: str) -> Quaternion:
    parts = text.split()
    if len(parts) != 4:
        raise InvalidInputError(f"A quaternion needs 4 rationals 't x1 x2 x3', got {text!r}")
    return Quaternion(ring, [parse_scalar(p) for p in parts])
