"""
The cubic Jordan algebra J = H_3(B) of Hermitian 3x3 matrices over a quaternion ring.

An element is stored as (c1, c2, c3; a1, a2, a3) for the matrix

    [[c1,  a3,  a2*],
     [a3*, c2,  a1 ],
     [a2,  a1*, c3 ]]

Coordinates (15 scalars) are ordered c1, c2, c3, a1, a2, a3 (quaternion coordinates each).
"""
from fractions import Fraction
from functools import lru_cache
from typing import List, Sequence, Tuple

from src.errors import InvalidInputError, UsageError
from src.services.quat import Quaternion, QuaternionRing, conj, mul, norm, pair, trace
from src.utils.linalg import Matrix
from src.utils.scalars import CScalar, Scalar, format_scalar, parse_scalar, sigma


class JElement:
    __slots__ = ("ring", "c", "a")

    def __init__(self, ring: QuaternionRing, c: Sequence[Scalar], a: Sequence[Quaternion]):
        if len(c) != 3 or len(a) != 3:
            raise InvalidInputError("A Jordan element has 3 diagonal scalars and 3 quaternions")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "c", tuple(Fraction(x) if isinstance(x, int) else x for x in c))
        object.__setattr__(self, "a", tuple(a))

    def __setattr__(self, name, value):
        raise AttributeError("JElement is immutable")

    def _check(self, other: "JElement"):
        if other.ring is not self.ring and other.ring.form != self.ring.form:
            raise UsageError("Jordan elements over different rings")

    def __add__(self, other):
        if not isinstance(other, JElement):
            return NotImplemented
        self._check(other)
        return JElement(self.ring, [x + y for x, y in zip(self.c, other.c)],
                        [x + y for x, y in zip(self.a, other.a)])

    def __sub__(self, other):
        if not isinstance(other, JElement):
            return NotImplemented
        self._check(other)
        return JElement(self.ring, [x - y for x, y in zip(self.c, other.c)],
                        [x - y for x, y in zip(self.a, other.a)])

    def __neg__(self):
        return JElement(self.ring, [-x for x in self.c], [-x for x in self.a])

    def __mul__(self, scalar):
        if isinstance(scalar, (int, Fraction, CScalar)):
            return JElement(self.ring, [x * scalar for x in self.c], [x * scalar for x in self.a])
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, JElement):
            return NotImplemented
        return self.ring.form == other.ring.form and self.coords() == other.coords()

    def __hash__(self):
        return hash((self.ring.form, self.coords()))

    def coords(self) -> Tuple[Scalar, ...]:
        out = list(self.c)
        for q in self.a:
            out.extend(q.coords)
        return tuple(out)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.coords())

    def sigma(self) -> "JElement":
        return JElement(self.ring, [sigma(x) for x in self.c], [q.sigma() for q in self.a])

    def __repr__(self):
        return f"JElement({self})"

    def __str__(self):
        return " ".join(format_scalar(x) for x in self.coords())


# ------------------- Constructors -------------------

def zero(ring: QuaternionRing) -> JElement:
    z = ring.zero()
    return JElement(ring, (0, 0, 0), (z, z, z))


def diag(ring: QuaternionRing, c1, c2, c3) -> JElement:
    z = ring.zero()
    return JElement(ring, (c1, c2, c3), (z, z, z))


def identity(ring: QuaternionRing) -> JElement:
    return diag(ring, 1, 1, 1)


def from_coords(ring: QuaternionRing, coords: Sequence[Scalar]) -> JElement:
    if len(coords) != 15:
        raise InvalidInputError(f"A Jordan element has 15 coordinates, got {len(coords)}")
    return JElement(ring, coords[:3],
                    [Quaternion(ring, coords[3 + 4 * k: 7 + 4 * k]) for k in range(3)])


def basis(ring: QuaternionRing) -> List[JElement]:
    out = []
    for k in range(15):
        coords = [0] * 15
        coords[k] = 1
        out.append(from_coords(ring, coords))
    return out


def off_diagonal(ring: QuaternionRing, i: int, u: Quaternion) -> JElement:
    """The element with a_i = u and every other entry 0 (i in 1..3)."""
    z = ring.zero()
    a = [z, z, z]
    a[i - 1] = u
    return JElement(ring, (0, 0, 0), a)


def parse_jelement(ring: QuaternionRing, text: str) -> JElement:
    parts = text.split()
    if len(parts) != 15:
        raise InvalidInputError(f"A Jordan element needs 15 rationals, got {len(parts)}")
    return from_coords(ring, [parse_scalar(p) for p in parts])


# ------------------- Cubic structure -------------------

def jtrace(h: JElement) -> Scalar:
    return h.c[0] + h.c[1] + h.c[2]


def jnorm(h: JElement) -> Scalar:
    c1, c2, c3 = h.c
    a1, a2, a3 = h.a
    return (c1 * c2 * c3 - c1 * norm(a1) - c2 * norm(a2) - c3 * norm(a3)
            + trace(mul(mul(a1, a2), a3)))


def sharp(h: JElement) -> JElement:
    c1, c2, c3 = h.c
    a1, a2, a3 = h.a
    s1, s2, s3 = conj(a1), conj(a2), conj(a3)
    return JElement(
        h.ring,
        (c2 * c3 - norm(a1), c1 * c3 - norm(a2), c1 * c2 - norm(a3)),
        (mul(s3, s2) - a1 * c1, mul(s1, s3) - a2 * c2, mul(s2, s1) - a3 * c3),
    )


def cross(x: JElement, y: JElement) -> JElement:
    return sharp(x + y) - sharp(x) - sharp(y)


def trace_pair(x: JElement, y: JElement) -> Scalar:
    total = x.c[0] * y.c[0] + x.c[1] * y.c[1] + x.c[2] * y.c[2]
    for u, v in zip(x.a, y.a):
        total = total + pair(u, v)
    return total


def trilinear(x: JElement, y: JElement, z: JElement) -> Scalar:
    return (jnorm(x + y + z) - jnorm(x + y) - jnorm(x + z) - jnorm(y + z)
            + jnorm(x) + jnorm(y) + jnorm(z))


def jrank(h: JElement) -> int:
    if jnorm(h) != 0:
        return 3
    if not sharp(h).is_zero():
        return 2
    if not h.is_zero():
        return 1
    return 0


@lru_cache(maxsize=64)
def trace_gram(ring: QuaternionRing) -> Tuple[Tuple[Fraction, ...], ...]:
    """Gram matrix of trace_pair on the 15 coordinate basis vectors."""
    b = basis(ring)
    return tuple(tuple(trace_pair(x, y) for y in b) for x in b)


def dual_coords(x: JElement) -> List[Scalar]:
    """Coordinates of the functional y -> tr(x, y) on the coordinate basis."""
    gram = trace_gram(x.ring)
    xs = x.coords()
    out = []
    for col in range(15):
        acc = Fraction(0)
        for k, v in enumerate(xs):
            if v != 0 and gram[k][col] != 0:
                acc = acc + v * gram[k][col]
        out.append(acc)
    return out


# ------------------- Transient M_3(B) representation -------------------

def _as_quaternion(ring: QuaternionRing, x) -> Quaternion:
    return x if isinstance(x, Quaternion) else ring.scalar(x)


def to_matrix(h: JElement) -> List[List[Quaternion]]:
    r = h.ring
    c1, c2, c3 = h.c
    a1, a2, a3 = h.a
    return [
        [r.scalar(c1), a3, conj(a2)],
        [conj(a3), r.scalar(c2), a1],
        [a2, conj(a1), r.scalar(c3)],
    ]


def from_matrix(ring: QuaternionRing, m, error=InvalidInputError) -> JElement:
    """Contract a Hermitian 3x3 quaternion matrix; raises ``error`` otherwise."""
    q = [[_as_quaternion(ring, x) for x in row] for row in m]
    for i in range(3):
        if not q[i][i].is_scalar():
            raise error(f"Diagonal entry ({i + 1},{i + 1}) is not a scalar")
    a1, a2, a3 = q[1][2], q[2][0], q[0][1]
    if q[2][1] != conj(a1) or q[0][2] != conj(a2) or q[1][0] != conj(a3):
        raise error("Matrix is not Hermitian")
    return JElement(ring, (q[0][0].coords[0], q[1][1].coords[0], q[2][2].coords[0]), (a1, a2, a3))


def qmat_mul(ring: QuaternionRing, x, y) -> List[List[Quaternion]]:
    """Product of 3x3 matrices whose entries are quaternions or scalars."""
    xq = [[_as_quaternion(ring, v) for v in row] for row in x]
    yq = [[_as_quaternion(ring, v) for v in row] for row in y]
    out = []
    for i in range(3):
        row = []
        for j in range(3):
            acc = ring.zero()
            for k in range(3):
                if xq[i][k].is_zero() or yq[k][j].is_zero():
                    continue
                acc = acc + mul(xq[i][k], yq[k][j])
            row.append(acc)
        out.append(row)
    return out


def qmat_conj_transpose(ring: QuaternionRing, m) -> List[List[Quaternion]]:
    return [[conj(_as_quaternion(ring, m[j][i])) for j in range(3)] for i in range(3)]


def qmat_scalar(ring: QuaternionRing, x) -> List[List[Quaternion]]:
    z = ring.zero()
    return [[ring.scalar(x) if i == j else z for j in range(3)] for i in range(3)]


def qmat_equal(x, y) -> bool:
    return all(x[i][j] == y[i][j] for i in range(3) for j in range(3))


def rational_matrix_action(ring: QuaternionRing, left: Matrix, h: JElement, right: Matrix) -> JElement:
    """left * h * right for rational 3x3 matrices, contracted back to J."""
    return from_matrix(ring, qmat_mul(ring, qmat_mul(ring, left, to_matrix(h)), right))
