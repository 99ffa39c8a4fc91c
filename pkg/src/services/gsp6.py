"""
GSp6 as 6x6 matrices and its embedding into G through the wedge cube of W6.

W6 has the symplectic basis e1, e2, e3, f1, f2, f3 (indices 0..5) and GSp6 acts
on row vectors from the right. W sits inside (wedge^3 W6 (x) nu^-1) (x) B as

    a e1^e2^e3 + sum b_ij e_i*^f_j + sum c_ij f_i*^e_j + d f1^f2^f3

with e_i* = e_{i+1}^e_{i+2} and f_i* = f_{i+1}^f_{i+2}.
"""
import itertools
import logging
from fractions import Fraction
from functools import lru_cache
from typing import List, Sequence, Tuple

from src.errors import DomainError, InternalConsistencyError, InvalidInputError, NotInImageError
from src.services import clifford, jordan
from src.services.freudenthal import GroupElement, WElement, from_coords
from src.services.jordan import JElement, cross, rational_matrix_action, trace_pair
from src.services.quat import Quaternion, QuaternionRing, TernaryForm, ring_from_form
from src.utils import linalg
from src.utils.linalg import Matrix
from src.utils.scalars import Scalar, format_scalar, parse_rational

logger = logging.getLogger("fgsp6.gsp6")

J6 = [[Fraction(int(j == i + 3)) - Fraction(int(i == j + 3)) for j in range(6)] for i in range(6)]

WEDGE_BASIS: Tuple[Tuple[int, int, int], ...] = tuple(itertools.combinations(range(6), 3))
_WEDGE_INDEX = {t: k for k, t in enumerate(WEDGE_BASIS)}


class GSp6Element:
    """g with g J6 transpose(g) = nu J6."""

    def __init__(self, matrix: Matrix, similitude: Scalar):
        self.matrix = linalg.to_fraction_matrix(matrix)
        self.similitude = Fraction(similitude)
        if len(self.matrix) != 6 or any(len(row) != 6 for row in self.matrix):
            raise InvalidInputError("A GSp6 element is a 6x6 matrix")
        if self.similitude == 0:
            raise DomainError("Similitude must be nonzero")
        lhs = linalg.matmul(linalg.matmul(self.matrix, J6), linalg.transpose(self.matrix))
        if lhs != linalg.scale(J6, self.similitude):
            raise DomainError("Matrix is not a symplectic similitude with the given nu")

    @classmethod
    def from_matrix(cls, matrix: Matrix) -> "GSp6Element":
        m = linalg.to_fraction_matrix(matrix)
        nu = linalg.matmul(linalg.matmul(m, J6), linalg.transpose(m))[0][3]
        return cls(m, nu)

    def __mul__(self, other: "GSp6Element") -> "GSp6Element":
        return GSp6Element(linalg.matmul(self.matrix, other.matrix), self.similitude * other.similitude)

    def inverse(self) -> "GSp6Element":
        return GSp6Element(linalg.inverse(self.matrix), 1 / self.similitude)

    def __eq__(self, other):
        if not isinstance(other, GSp6Element):
            return NotImplemented
        return self.matrix == other.matrix and self.similitude == other.similitude

    def __hash__(self):
        return hash((tuple(tuple(row) for row in self.matrix), self.similitude))

    def __repr__(self):
        return f"GSp6Element(similitude={format_scalar(self.similitude)})"


def _blocks(a: Matrix, b: Matrix, c: Matrix, d: Matrix) -> Matrix:
    return [list(a[i]) + list(b[i]) for i in range(3)] + [list(c[i]) + list(d[i]) for i in range(3)]


def _zero3() -> Matrix:
    return linalg.zeros(3, 3)


def identity() -> GSp6Element:
    return GSp6Element(linalg.identity(6), 1)


def j_matrix() -> GSp6Element:
    return GSp6Element(J6, 1)


def scalar(z) -> GSp6Element:
    return GSp6Element(linalg.scale(linalg.identity(6), Fraction(z)), Fraction(z) ** 2)


def unipotent(u: Matrix) -> GSp6Element:
    u = linalg.to_fraction_matrix(u)
    if linalg.transpose(u) != u:
        raise DomainError("The unipotent parameter must be symmetric")
    return GSp6Element(_blocks(linalg.identity(3), u, _zero3(), linalg.identity(3)), 1)


def levi(lam, m: Matrix) -> GSp6Element:
    """diag(lam det(m) transpose(m)^-1, m) with nu = lam det(m)."""
    lam = Fraction(lam)
    m = linalg.to_fraction_matrix(m)
    det = linalg.det3(m)
    if lam == 0 or det == 0:
        raise DomainError("levi needs lam != 0 and an invertible m")
    upper = linalg.scale(linalg.transpose(linalg.inverse(m)), lam * det)
    return GSp6Element(_blocks(upper, _zero3(), _zero3(), m), lam * det)


def siegel_parabolic(u: Matrix, lam, m: Matrix) -> GSp6Element:
    return unipotent(u) * levi(lam, m)


def symmetric_to_jordan(ring: QuaternionRing, u: Matrix) -> JElement:
    return JElement(ring, (u[0][0], u[1][1], u[2][2]),
                    (ring.scalar(u[1][2]), ring.scalar(u[2][0]), ring.scalar(u[0][1])))


# ------------------- Wedge cube -------------------

def _sorted_with_sign(triple: Sequence[int]) -> Tuple[int, Tuple[int, int, int]]:
    items = list(triple)
    sign = 1
    for i in range(len(items)):
        for j in range(len(items) - 1 - i):
            if items[j] > items[j + 1]:
                items[j], items[j + 1] = items[j + 1], items[j]
                sign = -sign
    return sign, tuple(items)


def _b_triple(i: int, j: int) -> Tuple[int, int, int]:
    return ((i + 1) % 3, (i + 2) % 3, 3 + j)


def _c_triple(i: int, j: int) -> Tuple[int, int, int]:
    return (3 + (i + 1) % 3, 3 + (i + 2) % 3, j)


class Wedge3Element:
    """Quaternion coefficients on the lexicographic basis of wedge^3 W6."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: QuaternionRing, coeffs: Sequence[Quaternion]):
        if len(coeffs) != 20:
            raise InvalidInputError("A wedge-cube element has 20 coefficients")
        self.ring = ring
        self.coeffs = tuple(coeffs)

    def coefficient(self, triple: Sequence[int]) -> Quaternion:
        sign, key = _sorted_with_sign(triple)
        return self.coeffs[_WEDGE_INDEX[key]] * sign

    def __eq__(self, other):
        if not isinstance(other, Wedge3Element):
            return NotImplemented
        return self.coeffs == other.coeffs


def embed_w(v: WElement) -> Wedge3Element:
    ring = v.ring
    coeffs = [ring.zero()] * 20

    def put(triple, q: Quaternion):
        sign, key = _sorted_with_sign(triple)
        k = _WEDGE_INDEX[key]
        coeffs[k] = coeffs[k] + q * sign

    put((0, 1, 2), ring.scalar(v.a))
    bm, cm = jordan.to_matrix(v.b), jordan.to_matrix(v.c)
    for i in range(3):
        for j in range(3):
            put(_b_triple(i, j), bm[i][j])
            put(_c_triple(i, j), cm[i][j])
    put((3, 4, 5), ring.scalar(v.d))
    return Wedge3Element(ring, coeffs)


def project_w(x: Wedge3Element) -> WElement:
    ring = x.ring
    a, d = x.coefficient((0, 1, 2)), x.coefficient((3, 4, 5))
    if not a.is_scalar() or not d.is_scalar():
        raise NotInImageError("The e1^e2^e3 and f1^f2^f3 coefficients must be scalars")
    bm = [[x.coefficient(_b_triple(i, j)) for j in range(3)] for i in range(3)]
    cm = [[x.coefficient(_c_triple(i, j)) for j in range(3)] for i in range(3)]
    b = jordan.from_matrix(ring, bm, error=NotInImageError)
    c = jordan.from_matrix(ring, cm, error=NotInImageError)
    return WElement(ring, a.coords[0], b, c, d.coords[0])


def compound(g: GSp6Element) -> Matrix:
    """C[J][I] = det of the J-rows, I-columns minor of g."""
    m = g.matrix
    return [[linalg.det3([[m[r][c] for c in cols] for r in rows]) for cols in WEDGE_BASIS]
            for rows in WEDGE_BASIS]


def wedge_action(x: Wedge3Element, g: GSp6Element, comp: Matrix = None) -> Wedge3Element:
    """x . g on wedge^3 W6 (x) nu^-1."""
    comp = compound(g) if comp is None else comp
    inv_nu = 1 / g.similitude
    out = []
    for col in range(20):
        acc = x.ring.zero()
        for row in range(20):
            factor = comp[row][col]
            if factor != 0 and not x.coeffs[row].is_zero():
                acc = acc + x.coeffs[row] * factor
        out.append(acc * inv_nu)
    return Wedge3Element(x.ring, out)


@lru_cache(maxsize=256)
def _iota_cached(ring: QuaternionRing, g: GSp6Element) -> GroupElement:
    comp = compound(g)
    rows = []
    for k in range(32):
        coords = [0] * 32
        coords[k] = 1
        image = wedge_action(embed_w(from_coords(ring, coords)), g, comp)
        try:
            rows.append(project_w(image).coords())
        except NotInImageError as exc:
            raise InternalConsistencyError(f"GSp6 action left the image of W: {exc.message}") from exc
    return GroupElement.closed_form(ring, rows, g.similitude)


def iota(ring: QuaternionRing, g: GSp6Element) -> GroupElement:
    return _iota_cached(ring, g)


def levi_block_action(v: WElement, upper: Matrix, lower: Matrix) -> WElement:
    """(a,b,c,d) diag(M, N) = nu^-1 (det M a, det M M^-1 b N, det N N^-1 c M, det N d)."""
    ring = v.ring
    upper = linalg.to_fraction_matrix(upper)
    lower = linalg.to_fraction_matrix(lower)
    nu = linalg.matmul(upper, linalg.transpose(lower))[0][0]
    det_m, det_n = linalg.det3(upper), linalg.det3(lower)
    b = rational_matrix_action(ring, linalg.inverse(upper), v.b, lower) * det_m
    c = rational_matrix_action(ring, linalg.inverse(lower), v.c, upper) * det_n
    return WElement(ring, v.a * det_m, b, c, v.d * det_n) * (1 / nu)


# ------------------- Nilpotent logarithm -------------------

def log_n_matrix(x: JElement) -> Matrix:
    """L(X): (a,b,c,d) -> (0, aX, b x X, tr(c,X)) as a 32x32 row-action matrix."""
    ring = x.ring
    rows = []
    for k in range(32):
        coords = [0] * 32
        coords[k] = 1
        v = from_coords(ring, coords)
        rows.append(list(WElement(ring, 0, x * v.a, cross(v.b, x), trace_pair(v.c, x)).coords()))
    return rows


def nilpotent_exp(m: Matrix) -> Matrix:
    """1 + M + M^2/2 + M^3/6 for M with M^4 = 0."""
    m2 = linalg.matmul(m, m)
    m3 = linalg.matmul(m2, m)
    if not linalg.is_zero_matrix(linalg.matmul(m3, m)):
        raise InternalConsistencyError("Matrix is not nilpotent of order 4")
    out = linalg.identity(len(m))
    out = linalg.add(out, m)
    out = linalg.add(out, linalg.scale(m2, Fraction(1, 2)))
    return linalg.add(out, linalg.scale(m3, Fraction(1, 6)))


# ------------------- The element f_O -------------------

def f_o(form: TernaryForm) -> WElement:
    order = clifford.GoodBasedOrder.from_form(form)
    zero = jordan.zero(order.ring)
    return WElement(order.ring, 0, zero, clifford.a_matrix(order), 0)


def f_o_action(form: TernaryForm, u: Matrix, lam, m: Matrix) -> WElement:
    """f_O . unipotent(u) . levi(lam, m), checked against (0, 0, m^-1 A(T) c(m), tr(Tu)/lam)."""
    ring = ring_from_form(form)
    fo = f_o(form)
    g = siegel_parabolic(u, lam, m)
    image = iota(ring, g).apply(fo)
    m = linalg.to_fraction_matrix(m)
    tr_tu = trace_pair(fo.c, symmetric_to_jordan(ring, u))
    expected = WElement(ring, 0, jordan.zero(ring),
                        rational_matrix_action(ring, linalg.inverse(m), fo.c, clifford.cofactor(m)),
                        tr_tu / Fraction(lam))
    if image != expected:
        raise InternalConsistencyError(f"f_O action mismatch for u={u}, lam={lam}, m={m}")
    return image


def xi_indicator(form: TernaryForm, lam, m: Matrix) -> int:
    lam = Fraction(lam)
    if lam.denominator != 1:
        return 0
    if linalg.det3(m) == 0:
        return 0
    return int(clifford.suborder_test(form, m))


def stabilizes_line(form: TernaryForm, g: GSp6Element) -> bool:
    ring = ring_from_form(form)
    fo = f_o(form)
    image = iota(ring, g).apply(fo)
    # scalar multiple: compare against the first nonzero coordinate
    base = fo.coords()
    moved = image.coords()
    pivot = next(k for k, x in enumerate(base) if x != 0)
    ratio = moved[pivot] / base[pivot]
    return all(y == ratio * x for x, y in zip(base, moved))


# ------------------- Text formats -------------------

def parse_matrix(text: str, size: int) -> List[List[Fraction]]:
    parts = text.replace(",", " ").split()
    if len(parts) != size * size:
        raise InvalidInputError(f"Expected {size * size} rationals, got {len(parts)}")
    values = [parse_rational(p) for p in parts]
    return [values[r * size:(r + 1) * size] for r in range(size)]


def parse_gsp6(text: str) -> GSp6Element:
    return GSp6Element.from_matrix(parse_matrix(text, 6))
