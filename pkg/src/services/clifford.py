"""
Arithmetic invariant theory of good-based quaternion rings.

Usage:
    T = TernaryForm.parse("1 1 1 0 0 0")
    reduced_discriminant(T)                 # 4
    is_maximal(T)                           # False
    enumerate_suborders(T, 2)               # [(hnf, T'), ...]
    canonical_form(T)                       # class key for coefficient tables

Sub-index matrices act on the right of the row (v1 v2 v3): w_i = sum_j m[j][i] v_j,
so the lattice index of span{1, w1, w2, w3} is det(m).
"""
import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import factorint

from src.errors import DomainError, InvalidInputError, MissingCoefficientClass, PreconditionError
from src.services import jordan
from src.services.jordan import JElement, rational_matrix_action
from src.services.quat import (
    Quaternion,
    QuaternionRing,
    TernaryForm,
    imaginary_part,
    mul,
    ring_from_form,
    trace,
)
from src.utils import linalg
from src.utils.linalg import Matrix

logger = logging.getLogger("fgsp6.clifford")

# (i, j) for the rows of S: w2w3, w3w1, w1w2
_CYCLIC_PAIRS = ((2, 3), (3, 1), (1, 2))


@dataclass(frozen=True)
class GoodBasedOrder:
    ring: QuaternionRing
    form: TernaryForm

    @classmethod
    def from_form(cls, form: TernaryForm) -> "GoodBasedOrder":
        return cls(ring=ring_from_form(form), form=form)

    def good_basis(self) -> Tuple[Quaternion, Quaternion, Quaternion]:
        return self.ring.basis_vectors()


@dataclass(frozen=True)
class StructureConstants:
    """w_i w_j = s[i][j][0] + sum_k s[i][j][k] w_k for i, j in 1..3."""

    table: Tuple[Tuple[Tuple[Fraction, ...], ...], ...]

    def s(self, i: int, j: int, k: int) -> Fraction:
        return self.table[i - 1][j - 1][k]

    def s0(self) -> List[List[Fraction]]:
        return [[self.s(i, j, 0) for j in (1, 2, 3)] for i in (1, 2, 3)]

    def s_matrix(self) -> List[List[Fraction]]:
        return [[self.s(i, j, k) for k in (1, 2, 3)] for i, j in _CYCLIC_PAIRS]

    def is_symmetric(self) -> bool:
        m = self.s_matrix()
        return all(m[r][c] == m[c][r] for r in range(3) for c in range(r + 1, 3))


def _basis_matrix(ring: QuaternionRing, basis: Sequence[Quaternion]) -> Matrix:
    return [list(ring.one().coords)] + [list(w.coords) for w in basis]


def structure_constants(ring: QuaternionRing, basis: Sequence[Quaternion]) -> StructureConstants:
    """Structure constants of {1, w1, w2, w3}; a non-basis raises DomainError."""
    if len(basis) != 3:
        raise InvalidInputError("A basis needs three elements besides 1")
    change = linalg.inverse(_basis_matrix(ring, basis))
    table = tuple(
        tuple(tuple(linalg.vecmat(mul(wi, wj).coords, change)) for wj in basis)
        for wi in basis
    )
    return StructureConstants(table=table)


def good_basis_shift(sc: StructureConstants) -> Tuple[Fraction, Fraction, Fraction]:
    """The unique (x1, x2, x3) making w_i - x_i a good basis."""
    if not sc.is_symmetric():
        raise InvalidInputError("Structure constants are not symmetric; not a quaternion ring basis")
    return sc.s(3, 1, 3), sc.s(1, 2, 1), sc.s(2, 3, 2)


def form_from_good_basis(ring: QuaternionRing, basis: Sequence[Quaternion]) -> TernaryForm:
    """Read q_T off a good basis: v2v3 = ad - a v1 (cyclic), d = tr(v1), e = tr(v2), f = tr(v3)."""
    sc = structure_constants(ring, basis)
    if good_basis_shift(sc) != (0, 0, 0):
        raise InvalidInputError("Basis is not good")
    a, b, c = -sc.s(2, 3, 1), -sc.s(3, 1, 2), -sc.s(1, 2, 3)
    d, e, f = (trace(w) for w in basis)
    return TernaryForm(a, b, c, d, e, f)


def a_matrix(order: GoodBasedOrder) -> JElement:
    form = order.form
    v1, v2, v3 = order.good_basis()
    return JElement(order.ring, (form.a, form.b, form.c), (v1, v2, v3))


def reduced_discriminant(form: TernaryForm) -> Fraction:
    return 4 * form.det()


def _is_squarefree(n: int) -> bool:
    if n == 0:
        return False
    return all(e == 1 for e in factorint(abs(n)).values())


def is_maximal(form: TernaryForm) -> bool:
    if not form.is_positive_definite():
        raise DomainError(f"Form {form} is not positive definite")
    disc = reduced_discriminant(form)
    return disc.denominator == 1 and _is_squarefree(int(disc))


# ------------------- Suborders -------------------

def _check_m(m: Matrix) -> Fraction:
    d = linalg.det3(linalg.to_fraction_matrix(m))
    if d == 0:
        raise DomainError("Sub-index matrix is singular")
    return d


def cofactor(m: Matrix) -> Matrix:
    """c(m) = det(m) transpose(m)^-1."""
    return linalg.adjugate_transpose3(linalg.to_fraction_matrix(m))


def suborder_matrix(form: TernaryForm, m: Matrix) -> Matrix:
    _check_m(m)
    return linalg.matmul(linalg.matmul(linalg.inverse(m), form.matrix()), cofactor(m))


def suborder_form(form: TernaryForm, m: Matrix) -> TernaryForm:
    return TernaryForm.from_matrix(suborder_matrix(form, m))


def _is_half_integral(t: Matrix) -> bool:
    diag_ok = all(Fraction(t[i][i]).denominator == 1 for i in range(3))
    off_ok = all((2 * Fraction(t[i][j])).denominator == 1 for i in range(3) for j in range(3) if i != j)
    return diag_ok and off_ok


def suborder_test(form: TernaryForm, m: Matrix) -> bool:
    t = suborder_matrix(form, m)
    return linalg.is_integral(m) and _is_half_integral(t)


def suborder_good_basis(form: TernaryForm, m: Matrix) -> JElement:
    """m^-1 A(T) c(m); its off-diagonal entries are a good basis of the suborder."""
    _check_m(m)
    order = GoodBasedOrder.from_form(form)
    return rational_matrix_action(order.ring, linalg.inverse(m), a_matrix(order), cofactor(m))


def sublattice_basis(form: TernaryForm, m: Matrix) -> List[Quaternion]:
    """w_i = sum_j m[j][i] v_j."""
    ring = ring_from_form(form)
    v = ring.basis_vectors()
    return [sum((v[j] * m[j][i] for j in range(3)), ring.zero()) for i in range(3)]


def _integral_coords(change: Matrix, x: Quaternion) -> bool:
    return all(Fraction(c).denominator == 1 for c in linalg.vecmat(x.coords, change))


def lattice_is_closed(ring: QuaternionRing, basis: Sequence[Quaternion]) -> bool:
    """Whether span_Z{1, w1, w2, w3} is closed under multiplication."""
    change = linalg.inverse(_basis_matrix(ring, basis))
    for wi in basis:
        for wj in basis:
            if not _integral_coords(change, mul(wi, wj)):
                return False
    return True


def hnf_matrices(index: int) -> List[Matrix]:
    """Upper-triangular column HNFs of determinant ``index``, sorted by entries."""
    out = []
    for d1 in range(1, index + 1):
        if index % d1:
            continue
        for d2 in range(1, index // d1 + 1):
            if (index // d1) % d2:
                continue
            d3 = index // (d1 * d2)
            for m12, m13, m23 in itertools.product(range(d1), range(d1), range(d2)):
                out.append([[d1, m12, m13], [0, d2, m23], [0, 0, d3]])
    out.sort(key=lambda m: [x for row in m for x in row])
    return out


def enumerate_suborders(form: TernaryForm, index_bound: int) -> List[Tuple[Matrix, TernaryForm]]:
    if index_bound < 1:
        raise DomainError("index bound must be at least 1")
    found = []
    for index in range(1, index_bound + 1):
        for m in hnf_matrices(index):
            if suborder_test(form, m):
                found.append((m, suborder_form(form, m)))
    logger.debug(f"{len(found)} suborders of {form} with index <= {index_bound}")
    return found


def find_superorder(form: TernaryForm, p: int) -> Optional[Quaternion]:
    """An x in (1/p)B0 with B0 + Zx a ring strictly containing B0, if any."""
    ring = ring_from_form(form)
    basis = [ring.one()] + list(ring.basis_vectors())
    for c in itertools.product(range(p), repeat=4):
        if not any(c):
            continue
        x = ring.element([Fraction(k, p) for k in c])
        if _closed_with(ring, basis, x, p):
            return x
    return None


def _closed_with(ring: QuaternionRing, basis: List[Quaternion], x: Quaternion, p: int) -> bool:
    def member(y: Quaternion) -> bool:
        for t in range(p):
            z = y - x * t
            if all(Fraction(k).denominator == 1 for k in z.coords):
                return True
        return False

    products = [mul(x, x)]
    for v in basis[1:]:
        products.append(mul(x, v))
        products.append(mul(v, x))
    return all(member(y) for y in products)


def scaled_order_form(ring: QuaternionRing, basis: Sequence[Quaternion], lam) -> TernaryForm:
    """Form of Z + lam*O read off the good basis {lam v1', lam v2', lam v3'}."""
    return form_from_good_basis(ring, [v * lam for v in basis])


# ------------------- Rank-one completion -------------------

def rank_one_completion(ring: QuaternionRing, imaginary_parts: Sequence[Quaternion]) -> JElement:
    """The unique rank-one A whose off-diagonal entries have the given imaginary parts."""
    sc = structure_constants(ring, imaginary_parts)
    x = good_basis_shift(sc)
    v = [u - ring.scalar(xi) for u, xi in zip(imaginary_parts, x)]
    form = form_from_good_basis(ring, v)
    return JElement(ring, (form.a, form.b, form.c), tuple(v))


def imaginary_parts_determine(a1: JElement, a2: JElement) -> bool:
    """For rank-one a1, a2 with spanning off-diagonals: equal imaginary parts hold exactly when a1 == a2."""
    for a in (a1, a2):
        if jordan.jrank(a) != 1:
            raise PreconditionError(f"Expected a rank-one element, got rank {jordan.jrank(a)}")
        try:
            linalg.inverse(_basis_matrix(a.ring, a.a))
        except DomainError as exc:
            raise PreconditionError("Off-diagonal entries together with 1 do not span B") from exc
    same_parts = all(imaginary_part(x) == imaginary_part(y) for x, y in zip(a1.a, a2.a))
    return same_parts == (a1 == a2)


# ------------------- Equivalence of forms -------------------

def _require_definite(form: TernaryForm):
    if not form.is_positive_definite():
        raise DomainError(f"Form {form} is not positive definite")


def short_vectors(form: TernaryForm, bound) -> List[Tuple[int, int, int]]:
    """Nonzero integer vectors x with q_T(x) <= bound."""
    _require_definite(form)
    t = form.matrix()
    cof = linalg.adjugate_transpose3(t)
    det = linalg.det3(t)
    ranges = []
    for i in range(3):
        # |x_i|^2 <= bound * (T^-1)_ii
        limit = Fraction(bound) * cof[i][i] / det
        ranges.append(math.isqrt(math.floor(limit)) + 1)
    out = []
    for x in itertools.product(*(range(-r, r + 1) for r in ranges)):
        if any(x) and form.evaluate(*x) <= bound:
            out.append(x)
    out.sort(key=lambda x: (form.evaluate(*x), x))
    return out


def _transform(form: TernaryForm, cols: Sequence[Tuple[int, int, int]]) -> TernaryForm:
    """The form x -> q_T(P x) with P = (cols)."""
    q = [form.evaluate(*v) for v in cols]

    def b(u, v):
        return form.bilinear(u, v)

    return TernaryForm(q[0], q[1], q[2], b(cols[1], cols[2]), b(cols[0], cols[2]), b(cols[0], cols[1]))


def _det_cols(cols) -> int:
    return linalg.det3([[cols[j][i] for j in range(3)] for i in range(3)])


@lru_cache(maxsize=4096)
def canonical_form(form: TernaryForm) -> TernaryForm:
    """Lexicographically least GL3(Z)-equivalent sextuple."""
    _require_definite(form)
    bound = max(form.a, form.b, form.c)
    vectors = short_vectors(form, bound)
    best: Optional[Tuple[Fraction, ...]] = None
    for v1 in vectors:
        q1 = form.evaluate(*v1)
        if best is not None and q1 > best[0]:
            break
        for v2 in vectors:
            q2 = form.evaluate(*v2)
            if best is not None and (q1, q2) > best[:2]:
                break
            for v3 in vectors:
                q3 = form.evaluate(*v3)
                if best is not None and (q1, q2, q3) > best[:3]:
                    break
                if abs(_det_cols((v1, v2, v3))) != 1:
                    continue
                key = _transform(form, (v1, v2, v3)).sextuple()
                if best is None or key < best:
                    best = key
    return TernaryForm(*best)


def forms_equivalent(t1: TernaryForm, t2: TernaryForm) -> Optional[Matrix]:
    """k in GL3(Z) with det(k) k^-1 T1 c(k) = T2, or None."""
    _require_definite(t1)
    _require_definite(t2)
    if t1 == t2:
        return linalg.identity(3)
    if t1.det() != t2.det():
        return None
    bound = max(t2.a, t2.b, t2.c)
    by_norm: Dict[Fraction, List[Tuple[int, int, int]]] = {}
    for v in short_vectors(t1, bound):
        by_norm.setdefault(t1.evaluate(*v), []).append(v)
    targets = (t2.a, t2.b, t2.c)
    candidates = [by_norm.get(q, []) for q in targets]
    for cols in itertools.product(*candidates):
        if abs(_det_cols(cols)) != 1:
            continue
        if _transform(t1, cols) == t2:
            p = [[cols[j][i] for j in range(3)] for i in range(3)]
            return linalg.inverse(linalg.transpose(p))
    return None


# ------------------- Dirichlet series bookkeeping -------------------

class CoefficientTable:
    """Rational values a(T) keyed by canonical form."""

    def __init__(self, values: Optional[Dict[TernaryForm, Fraction]] = None):
        self._values: Dict[TernaryForm, Fraction] = {}
        for form, value in (values or {}).items():
            self.add(form, value)

    def add(self, form: TernaryForm, value):
        key = canonical_form(form)
        value = Fraction(value)
        if key in self._values and self._values[key] != value:
            raise InvalidInputError(
                f"Conflicting coefficients for class {key}: {self._values[key]} and {value}")
        self._values[key] = value

    def lookup(self, form: TernaryForm) -> Fraction:
        key = canonical_form(form)
        if key not in self._values:
            raise MissingCoefficientClass(f"No coefficient for the class of reduced form {key}")
        return self._values[key]

    def __len__(self):
        return len(self._values)

    def __contains__(self, form: TernaryForm):
        return canonical_form(form) in self._values


def required_classes(form: TernaryForm, max_n: int) -> List[TernaryForm]:
    """Canonical forms looked up by ``dirichlet_coefficients`` up to ``max_n``."""
    seen = []
    for n, lam, _, t in _dirichlet_terms(form, max_n):
        key = canonical_form(t.scaled(lam))
        if key not in seen:
            seen.append(key)
    return seen


def _dirichlet_terms(form: TernaryForm, max_n: int):
    suborders: Dict[int, List[TernaryForm]] = {}
    for m, t in enumerate_suborders(form, max_n):
        suborders.setdefault(int(linalg.det3(m)), []).append(t)
    for n in range(1, max_n + 1):
        for lam in range(1, n + 1):
            if n % lam:
                continue
            index = n // lam
            for t in suborders.get(index, []):
                yield n, lam, index, t


def dirichlet_coefficients(form: TernaryForm, weight: int, table: CoefficientTable,
                           max_n: int) -> List[Tuple[int, Fraction]]:
    """Coefficients of n^-s in sum a(Z + lam O) lam^-s [B0:O]^-(s - weight + 3)."""
    _require_definite(form)
    if max_n < 1:
        raise DomainError("max_n must be at least 1")
    coeffs = {n: Fraction(0) for n in range(1, max_n + 1)}
    for n, lam, index, t in _dirichlet_terms(form, max_n):
        coeffs[n] += table.lookup(t.scaled(lam)) * Fraction(index) ** (weight - 3)
    return sorted(coeffs.items())
