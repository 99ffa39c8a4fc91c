"""
Freudenthal's space W = F + J + J + F and its similitude group G.

Usage:
    v = WElement(ring, a, b, c, d)
    symplectic(u, v), quartic(v), wrank(v)
    g = op_n(X)                 # verified GroupElement, similitude 1
    w = g.apply(v)              # right action v . g
    h = g * op_J6()             # product: v . (g h) = (v . g) . h

Every GroupElement is verified when it is built: the symplectic form is checked
on all basis pairs, the quartic form on a spanning set of basis quadruples (see
``verify_quartic``). Closed-form generators are re-checked on a fixed sample only.
"""
import itertools
import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from src import config
from src.errors import (
    DomainError,
    InternalConsistencyError,
    InvalidInputError,
    PreconditionError,
    UsageError,
)
from src.services import jordan
from src.services.jordan import (
    JElement,
    cross,
    dual_coords,
    jnorm,
    qmat_conj_transpose,
    qmat_equal,
    qmat_mul,
    qmat_scalar,
    sharp,
    to_matrix,
    trace_pair,
)
from src.services.quat import QuaternionRing
from src.utils import linalg
from src.utils.scalars import CScalar, Scalar, format_scalar, parse_scalar, sigma

logger = logging.getLogger("fgsp6.freudenthal")


class WElement:
    __slots__ = ("ring", "a", "b", "c", "d")

    def __init__(self, ring: QuaternionRing, a: Scalar, b: JElement, c: JElement, d: Scalar):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "a", Fraction(a) if isinstance(a, int) else a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", Fraction(d) if isinstance(d, int) else d)

    def __setattr__(self, name, value):
        raise AttributeError("WElement is immutable")

    def _check(self, other: "WElement"):
        if other.ring is not self.ring and other.ring.form != self.ring.form:
            raise UsageError("W elements over different rings")

    def __add__(self, other):
        if not isinstance(other, WElement):
            return NotImplemented
        self._check(other)
        return WElement(self.ring, self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d)

    def __sub__(self, other):
        if not isinstance(other, WElement):
            return NotImplemented
        self._check(other)
        return WElement(self.ring, self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d)

    def __neg__(self):
        return WElement(self.ring, -self.a, -self.b, -self.c, -self.d)

    def __mul__(self, scalar):
        if isinstance(scalar, (int, Fraction, CScalar)):
            return WElement(self.ring, self.a * scalar, self.b * scalar, self.c * scalar, self.d * scalar)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, WElement):
            return NotImplemented
        return self.ring.form == other.ring.form and self.coords() == other.coords()

    def __hash__(self):
        return hash((self.ring.form, self.coords()))

    def coords(self) -> Tuple[Scalar, ...]:
        return (self.a,) + self.b.coords() + self.c.coords() + (self.d,)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.coords())

    def is_real(self) -> bool:
        return all(not isinstance(x, CScalar) or x.im == 0 for x in self.coords())

    def sigma(self) -> "WElement":
        return WElement(self.ring, sigma(self.a), self.b.sigma(), self.c.sigma(), sigma(self.d))

    def __repr__(self):
        return f"WElement({self})"

    def __str__(self):
        return " ".join(format_scalar(x) for x in self.coords())


def from_coords(ring: QuaternionRing, coords: Sequence[Scalar]) -> WElement:
    if len(coords) != 32:
        raise InvalidInputError(f"A W element has 32 coordinates, got {len(coords)}")
    return WElement(ring, coords[0], jordan.from_coords(ring, coords[1:16]),
                    jordan.from_coords(ring, coords[16:31]), coords[31])


def parse_welement(ring: QuaternionRing, text: str) -> WElement:
    parts = text.split()
    if len(parts) != 32:
        raise InvalidInputError(f"A W element needs 32 rationals, got {len(parts)}")
    return from_coords(ring, [parse_scalar(p) for p in parts])


def zero(ring: QuaternionRing) -> WElement:
    z = jordan.zero(ring)
    return WElement(ring, 0, z, z, 0)


def e_vector(ring: QuaternionRing) -> WElement:
    z = jordan.zero(ring)
    return WElement(ring, 1, z, z, 0)


def f_vector(ring: QuaternionRing) -> WElement:
    z = jordan.zero(ring)
    return WElement(ring, 0, z, z, 1)


def basis(ring: QuaternionRing) -> List[WElement]:
    out = []
    for k in range(32):
        coords = [0] * 32
        coords[k] = 1
        out.append(from_coords(ring, coords))
    return out


def rank_one_from_jordan(x: JElement) -> WElement:
    """(N(X), X#, X, 1), the f-translate under nbar(X)."""
    return WElement(x.ring, jnorm(x), sharp(x), x, 1)


# ------------------- Forms -------------------

def symplectic(u: WElement, v: WElement) -> Scalar:
    u._check(v)
    return u.a * v.d - trace_pair(u.b, v.c) + trace_pair(u.c, v.b) - u.d * v.a


def quartic(v: WElement) -> Scalar:
    q = v.a * v.d - trace_pair(v.b, v.c)
    return (q * q + 4 * v.a * jnorm(v.c) + 4 * v.d * jnorm(v.b)
            - 4 * trace_pair(sharp(v.b), sharp(v.c)))


def fourlinear(w: WElement, x: WElement, y: WElement, z: WElement) -> Scalar:
    """Symmetric polarization of Q with (v,v,v,v) = Q(v), by inclusion-exclusion."""
    vectors = (w, x, y, z)
    total = Fraction(0)
    for size in range(1, 5):
        sign = 1 if (4 - size) % 2 == 0 else -1
        for subset in itertools.combinations(vectors, size):
            s = subset[0]
            for extra in subset[1:]:
                s = s + extra
            total = total + sign * quartic(s)
    return total / 24


def _functional(ga, gb: JElement, gc: JElement, gd) -> List[Scalar]:
    return [ga] + dual_coords(gb) + dual_coords(gc) + [gd]


def quartic_gradient(v: WElement) -> List[Scalar]:
    """Coordinates of dQ_v, so dQ_v[w] = sum_k grad[k] * w_k."""
    a, b, c, d = v.a, v.b, v.c, v.d
    q = a * d - trace_pair(b, c)
    bs, cs = sharp(b), sharp(c)
    ga = 2 * q * d + 4 * jnorm(c)
    gd = 2 * q * a + 4 * jnorm(b)
    gb = c * (-2 * q) + bs * (4 * d) - cross(b, cs) * 4
    gc = b * (-2 * q) + cs * (4 * a) - cross(c, bs) * 4
    return _functional(ga, gb, gc, gd)


def quartic_second_derivative(v: WElement, w: WElement) -> List[Scalar]:
    """Coordinates of w' -> d^2Q_v[w, w']."""
    a, b, c, d = v.a, v.b, v.c, v.d
    a2, b2, c2, d2 = w.a, w.b, w.c, w.d
    q = a * d - trace_pair(b, c)
    dq = a2 * d + a * d2 - trace_pair(b2, c) - trace_pair(b, c2)
    bs, cs = sharp(b), sharp(c)
    bxb2 = cross(b, b2)
    cxc2 = cross(c, c2)
    dga = 2 * dq * d + 2 * q * d2 + 4 * trace_pair(cs, c2)
    dgd = 2 * dq * a + 2 * q * a2 + 4 * trace_pair(bs, b2)
    dgb = (c * (-2 * dq) - c2 * (2 * q) + bs * (4 * d2) + bxb2 * (4 * d)
           - cross(b2, cs) * 4 - cross(b, cxc2) * 4)
    dgc = (b * (-2 * dq) - b2 * (2 * q) + cs * (4 * a2) + cxc2 * (4 * a)
           - cross(c2, bs) * 4 - cross(c, bxb2) * 4)
    return _functional(dga, dgb, dgc, dgd)


def polar3(v: WElement, w: WElement) -> Scalar:
    """(v, v, v, w)."""
    grad = quartic_gradient(v)
    return sum((g * x for g, x in zip(grad, w.coords()) if x != 0), Fraction(0)) / 4


def polar2(v: WElement, w: WElement, w2: WElement) -> Scalar:
    """(v, v, w, w2)."""
    second = quartic_second_derivative(v, w)
    return sum((g * x for g, x in zip(second, w2.coords()) if x != 0), Fraction(0)) / 12


def symplectic_functional(v: WElement) -> List[Scalar]:
    """Coordinates of x -> <v, x>."""
    return [-v.d] + dual_coords(v.c) + [-x for x in dual_coords(v.b)] + [v.a]


def orthogonal_complement(v: WElement) -> List[WElement]:
    """A basis of (Fv)^perp = {x : <v, x> = 0}."""
    rows = linalg.nullspace([symplectic_functional(v)])
    return [from_coords(v.ring, row) for row in rows]


def wrank(v: WElement) -> int:
    if v.is_zero():
        return 0
    if quartic(v) != 0:
        return 4
    if any(g != 0 for g in quartic_gradient(v)):
        return 3
    for w in orthogonal_complement(v):
        if any(g != 0 for g in quartic_second_derivative(v, w)):
            return 2
    return 1


def rank1_is_sharp_pair(v: WElement) -> bool:
    ring = v.ring
    if sharp(v.b) != v.c * v.a or sharp(v.c) != v.b * v.d:
        return False
    bm, cm = to_matrix(v.b), to_matrix(v.c)
    bc = qmat_mul(ring, bm, cm)
    cb = qmat_mul(ring, cm, bm)
    return qmat_equal(bc, cb) and qmat_equal(bc, qmat_scalar(ring, v.a * v.d))


# ------------------- Group elements -------------------

COMPLETE = "complete"
QUICK = "quick"


@lru_cache(maxsize=64)
def symplectic_gram(ring: QuaternionRing) -> Tuple[Tuple[Fraction, ...], ...]:
    b = basis(ring)
    return tuple(tuple(symplectic(x, y) for y in b) for x in b)


def quartic_samples(ring: QuaternionRing, count: int) -> List[WElement]:
    rng = random.Random(0x5EED)
    samples = []
    for _ in range(count):
        samples.append(from_coords(ring, [rng.randint(-2, 2) for _ in range(32)]))
    return samples


def lattice_points(degree: int):
    """Index multisets of ``degree`` basis vectors; their sums are unisolvent for forms of that degree."""
    return itertools.combinations_with_replacement(range(32), degree)


class GroupElement:
    """A 32x32 matrix acting on row vectors of W, with similitude nu.

    ``in_group`` records that membership in G is established: by the complete quartic
    check, or by construction (closed-form generators and the GSp6 embedding, and
    products and inverses of members). Members are re-checked on the fixed sample only.
    """

    def __init__(self, ring: QuaternionRing, matrix: Sequence[Sequence[Scalar]], similitude: Scalar,
                 verify: bool = True, quartic_check: Optional[str] = None):
        self.ring = ring
        self.matrix = [list(row) for row in matrix]
        self.similitude = similitude
        self.in_group = False
        if len(self.matrix) != 32 or any(len(row) != 32 for row in self.matrix):
            raise InvalidInputError("A group element is a 32x32 matrix")
        if similitude == 0:
            raise DomainError("Similitude must be nonzero")
        if verify:
            self.verify(quartic_check)

    @classmethod
    def closed_form(cls, ring: QuaternionRing, matrix: Sequence[Sequence[Scalar]],
                    similitude: Scalar) -> "GroupElement":
        """A matrix lying in G by construction; checked on basis pairs and the fixed sample."""
        g = cls(ring, matrix, similitude, verify=False)
        g.in_group = True
        g.verify()
        return g

    def apply(self, v: WElement) -> WElement:
        return from_coords(self.ring, linalg.vecmat(v.coords(), self.matrix))

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return self.compose(other)

    def compose(self, other: "GroupElement", verify: bool = True) -> "GroupElement":
        """The product g h, acting as v -> (v g) h."""
        product = GroupElement(self.ring, linalg.matmul(self.matrix, other.matrix),
                               self.similitude * other.similitude, verify=False)
        product.in_group = self.in_group and other.in_group
        if verify:
            product.verify()
        return product

    def inverse(self, verify: bool = False) -> "GroupElement":
        inv = GroupElement(self.ring, linalg.inverse(self.matrix), 1 / self.similitude, verify=False)
        inv.in_group = self.in_group
        if verify:
            inv.verify()
        return inv

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.similitude == other.similitude and self.matrix == other.matrix

    def __hash__(self):
        return hash((self.similitude, tuple(tuple(row) for row in self.matrix)))

    def verify(self, quartic_check: Optional[str] = None):
        self.verify_symplectic()
        if quartic_check is None:
            quartic_check = QUICK if self.in_group else config.QUARTIC_CHECK
        self.verify_quartic(quartic_check)
        if quartic_check == COMPLETE:
            self.in_group = True

    def verify_symplectic(self):
        gram = symplectic_gram(self.ring)
        m = self.matrix
        nu = self.similitude
        # (M Omega) restricted to nonzero Omega entries
        sparse = [[(l, x) for l, x in enumerate(row) if x != 0] for row in gram]
        m_omega = []
        for row in m:
            acc = [Fraction(0)] * 32
            for k, x in enumerate(row):
                if x == 0:
                    continue
                for l, g in sparse[k]:
                    acc[l] = acc[l] + x * g
            m_omega.append(acc)
        for i in range(32):
            left = m_omega[i]
            for j in range(32):
                value = sum((x * y for x, y in zip(left, m[j]) if x != 0 and y != 0), Fraction(0))
                if value != nu * gram[i][j]:
                    raise InternalConsistencyError(
                        f"Symplectic form not preserved on basis pair ({i},{j}): "
                        f"{format_scalar(value)} != {format_scalar(nu * gram[i][j])}")

    def verify_quartic(self, quartic_check: str = COMPLETE):
        if quartic_check == COMPLETE:
            self._verify_quartic_complete()
        elif quartic_check == QUICK:
            self._verify_quartic_quick()
        else:
            raise UsageError(f"Unknown quartic check '{quartic_check}'; expected {COMPLETE} or {QUICK}")

    def _verify_quartic_complete(self):
        # dQ_{xg}[e_u g] = nu^2 dQ_x[e_u] at every x in the cubic lattice and every basis u
        # is the four-linear form on all basis quadruples; x = u recovers Q(xg) = nu^2 Q(x)
        nu2 = self.similitude * self.similitude
        rows = self.matrix
        for combo in lattice_points(3):
            coords = [0] * 32
            for k in combo:
                coords[k] += 1
            x = from_coords(self.ring, coords)
            image = from_coords(self.ring, [sum((rows[k][j] for k in combo), Fraction(0)) for j in range(32)])
            lhs = linalg.matvec(rows, quartic_gradient(image))
            rhs = [nu2 * y for y in quartic_gradient(x)]
            if lhs != rhs:
                raise InternalConsistencyError(
                    f"Four-linear form not scaled by nu^2 at basis indices {combo}")

    def _verify_quartic_quick(self):
        nu2 = self.similitude * self.similitude
        for index, w in enumerate(quartic_samples(self.ring, config.QUARTIC_SAMPLES)):
            if quartic(self.apply(w)) != nu2 * quartic(w):
                raise InternalConsistencyError(
                    f"Quartic form not scaled by nu^2 at sample {index}: {w}")

    def __repr__(self):
        return f"GroupElement(similitude={format_scalar(self.similitude)})"


def identity_element(ring: QuaternionRing) -> GroupElement:
    g = GroupElement(ring, linalg.identity(32), Fraction(1), verify=False)
    g.in_group = True
    return g


def _build(ring, fn, nu, name) -> GroupElement:
    try:
        return GroupElement.closed_form(ring, [fn(e).coords() for e in basis(ring)], nu)
    except InternalConsistencyError as exc:
        raise InternalConsistencyError(f"{name} failed verification: {exc.message}") from exc


def op_n(x: JElement) -> GroupElement:
    xs, nx = sharp(x), jnorm(x)

    def act(v: WElement) -> WElement:
        return WElement(v.ring, v.a, v.b + x * v.a, v.c + cross(v.b, x) + xs * v.a,
                        v.d + trace_pair(v.c, x) + trace_pair(v.b, xs) + v.a * nx)

    return _build(x.ring, act, Fraction(1), "n(X)")


def op_nbar(y: JElement) -> GroupElement:
    ys, ny = sharp(y), jnorm(y)

    def act(v: WElement) -> WElement:
        return WElement(v.ring, v.a + trace_pair(v.b, y) + trace_pair(v.c, ys) + v.d * ny,
                        v.b + cross(v.c, y) + ys * v.d, v.c + y * v.d, v.d)

    return _build(y.ring, act, Fraction(1), "nbar(Y)")


def op_J6(ring: QuaternionRing) -> GroupElement:
    return _build(ring, lambda v: WElement(v.ring, -v.d, v.c, -v.b, v.a), Fraction(1), "J6")


def op_scalar(ring: QuaternionRing, lam: Scalar) -> GroupElement:
    if lam == 0:
        raise DomainError("Scalar must be nonzero")
    return _build(ring, lambda v: v * lam, lam * lam, "scalar")


def op_weight(ring: QuaternionRing, lam: Scalar) -> GroupElement:
    if lam == 0:
        raise DomainError("Weight must be nonzero")
    inv = 1 / Fraction(lam) if not isinstance(lam, CScalar) else 1 / lam
    return _build(ring, lambda v: WElement(v.ring, v.a * lam * lam, v.b * lam, v.c, v.d * inv),
                  lam, "weight")


def op_m(ring: QuaternionRing, m, r: Scalar) -> GroupElement:
    """(a,b,c,d) -> (lambda a, t(b), t~(c), lambda^-1 d) with t(b) = r^-1 m* b m."""
    if r == 0:
        raise DomainError("r must be nonzero")
    m_star = qmat_conj_transpose(ring, m)
    lam = jnorm(jordan.from_matrix(ring, qmat_mul(ring, m_star, m))) / r ** 3
    if lam == 0:
        raise DomainError("t is singular: N(m* m) = 0")

    def t(b: JElement) -> JElement:
        return jordan.from_matrix(ring, qmat_mul(ring, qmat_mul(ring, m_star, to_matrix(b)), m),
                                  error=InternalConsistencyError) * (1 / Fraction(r))

    jb = jordan.basis(ring)
    t_cols = [t(x).coords() for x in jb]
    t_mat = linalg.transpose([list(col) for col in t_cols])     # column convention
    gram = [list(row) for row in jordan.trace_gram(ring)]
    # transpose(t) G t~ = G
    t_tilde = linalg.matmul(linalg.inverse(linalg.matmul(linalg.transpose(t_mat), gram)), gram)

    def act(v: WElement) -> WElement:
        b_new = jordan.from_coords(ring, linalg.matvec(t_mat, v.b.coords()))
        c_new = jordan.from_coords(ring, linalg.matvec(t_tilde, v.c.coords()))
        return WElement(ring, v.a * lam, b_new, c_new, v.d / lam)

    return _build(ring, act, Fraction(1), "m(t)")


# ------------------- Rank-one normalization -------------------

@dataclass(frozen=True)
class NormalizedTranslate:
    gsp6_element: object
    group: GroupElement
    translate: WElement


def _x_candidates(bound: int):
    """Symmetric integer matrices: basis elements first, then combinations by height."""
    basis_mats = []
    for i in range(3):
        m = [[0] * 3 for _ in range(3)]
        m[i][i] = 1
        basis_mats.append(m)
    for i, j in ((0, 1), (0, 2), (1, 2)):
        m = [[0] * 3 for _ in range(3)]
        m[i][j] = m[j][i] = 1
        basis_mats.append(m)
    yield from basis_mats
    for height in range(1, bound + 1):
        for coeffs in itertools.product(range(-height, height + 1), repeat=6):
            if max(abs(x) for x in coeffs) != height:
                continue
            yield [[sum(k * bm[r][s] for k, bm in zip(coeffs, basis_mats)) for s in range(3)]
                   for r in range(3)]


def normalize_d1(v: WElement, bound: Optional[int] = None) -> NormalizedTranslate:
    """A GSp6(Q) translate of a rank-one v with d = 1, following the constructive proof."""
    from src.services import gsp6

    bound = config.X_SEARCH_BOUND if bound is None else bound
    if wrank(v) != 1:
        raise PreconditionError("normalize_d1 needs a rank-one element")
    ring = v.ring
    g6 = gsp6.identity()
    w = v
    if w.d == 0:
        if w.a != 0:
            g6 = gsp6.j_matrix()
        else:
            for u in _x_candidates(bound):
                x = gsp6.symmetric_to_jordan(ring, u)
                if trace_pair(w.c, x) + trace_pair(w.b, sharp(x)) != 0:
                    g6 = gsp6.unipotent(u)
                    break
            else:
                raise InternalConsistencyError("X-search exhausted without a nonzero d-slot")
        w = gsp6.iota(ring, g6).apply(w)
    if w.d != 1:
        g6 = g6 * gsp6.scalar(1 / w.d)
    group = gsp6.iota(ring, g6)
    translate = group.apply(v)
    if translate.d != 1:
        raise InternalConsistencyError("Normalized translate does not have d = 1")
    logger.debug(f"normalize_d1 used similitude {format_scalar(g6.similitude)}")
    return NormalizedTranslate(gsp6_element=g6, group=group, translate=translate)
