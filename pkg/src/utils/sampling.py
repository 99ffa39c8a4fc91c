"""
Seeded random corpus generators. Every generator takes the caller's
``random.Random`` so that one seed reproduces a whole suite.
"""
import random
from fractions import Fraction
from typing import List

from src.errors import DomainError
from src.services import freudenthal, jordan
from src.services.freudenthal import GroupElement, WElement
from src.services.jordan import JElement
from src.services.quat import Quaternion, QuaternionRing, TernaryForm, ring_from_form
from src.utils import linalg
from src.utils.linalg import Matrix
from src.utils.scalars import CScalar


def random_rational(rng: random.Random, bound: int = 5, den_bound: int = 3) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, den_bound))


def random_gaussian(rng: random.Random, bound: int = 3, den_bound: int = 2) -> CScalar:
    return CScalar(random_rational(rng, bound, den_bound), random_rational(rng, bound, den_bound))


def random_form(rng: random.Random, bound: int = 5) -> TernaryForm:
    return TernaryForm(*(rng.randint(-bound, bound) for _ in range(6)))


def random_definite_form(rng: random.Random, bound: int = 5) -> TernaryForm:
    while True:
        a, b, c = (rng.randint(1, bound) for _ in range(3))
        d, e, f = (rng.randint(-bound, bound) for _ in range(3))
        form = TernaryForm(a, b, c, d, e, f)
        if form.is_positive_definite():
            return form


def random_ring(rng: random.Random, bound: int = 5) -> QuaternionRing:
    return ring_from_form(random_form(rng, bound))


def random_quaternion(rng: random.Random, ring: QuaternionRing, bound: int = 3,
                      den_bound: int = 2) -> Quaternion:
    return ring.element([random_rational(rng, bound, den_bound) for _ in range(4)])


def random_jelement(rng: random.Random, ring: QuaternionRing, bound: int = 3,
                    den_bound: int = 2) -> JElement:
    return jordan.from_coords(ring, [random_rational(rng, bound, den_bound) for _ in range(15)])


def random_cjelement(rng: random.Random, ring: QuaternionRing, bound: int = 2) -> JElement:
    return jordan.from_coords(ring, [random_gaussian(rng, bound) for _ in range(15)])


def random_welement(rng: random.Random, ring: QuaternionRing, bound: int = 3,
                    den_bound: int = 2) -> WElement:
    return freudenthal.from_coords(ring, [random_rational(rng, bound, den_bound) for _ in range(32)])


def random_rank_one(rng: random.Random, ring: QuaternionRing) -> WElement:
    """(N(X), X#, X, 1) scaled by a random nonzero rational."""
    v = freudenthal.rank_one_from_jordan(random_jelement(rng, ring))
    scale = random_rational(rng, 3, 2) or Fraction(1)
    return v * scale


def random_rank_le_two(rng: random.Random, ring: QuaternionRing) -> WElement:
    """(0, b, 0, 0) with b supported on the upper 2x2 block, so N(b) = 0."""
    z = ring.zero()
    b = JElement(ring, (random_rational(rng), random_rational(rng), 0),
                 (z, z, random_quaternion(rng, ring)))
    zero = jordan.zero(ring)
    return WElement(ring, 0, b, zero, 0)


def random_symmetric(rng: random.Random, bound: int = 3, den_bound: int = 2) -> Matrix:
    m = [[Fraction(0)] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(i, 3):
            m[i][j] = m[j][i] = random_rational(rng, bound, den_bound)
    return m


def random_skew(rng: random.Random, bound: int = 2) -> Matrix:
    m = [[Fraction(0)] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(i + 1, 3):
            x = random_rational(rng, bound, 2)
            m[i][j], m[j][i] = x, -x
    return m


def random_invertible(rng: random.Random, bound: int = 3, positive_det: bool = False) -> Matrix:
    while True:
        m = [[Fraction(rng.randint(-bound, bound)) for _ in range(3)] for _ in range(3)]
        det = linalg.det3(m)
        if det != 0 and (det > 0 or not positive_det):
            return m


def random_sl3(rng: random.Random, bound: int = 2) -> Matrix:
    while True:
        m = [[rng.randint(-bound, bound) for _ in range(3)] for _ in range(3)]
        if linalg.det3(m) == 1:
            return m


def random_parabolic(rng: random.Random):
    """unipotent(u) levi(lam, m) with lam > 0 and det m > 0."""
    from src.services import gsp6

    u = random_symmetric(rng)
    lam = Fraction(rng.randint(1, 3), rng.randint(1, 2))
    m = random_invertible(rng, 2, positive_det=True)
    return gsp6.siegel_parabolic(u, lam, m)


def random_gsp6(rng: random.Random):
    """P J P' with random Siegel-parabolic factors; similitude is positive."""
    from src.services import gsp6

    g = random_parabolic(rng)
    if rng.random() < 0.5:
        g = g * gsp6.j_matrix()
    return g * random_parabolic(rng)


def random_quaternion_matrix(rng: random.Random, ring: QuaternionRing) -> List[List[Quaternion]]:
    """An upper unitriangular matrix times a diagonal matrix of small integers."""
    one, zero = ring.one(), ring.zero()
    m = [[one if i == j else zero for j in range(3)] for i in range(3)]
    m[0][1] = random_quaternion(rng, ring, 2, 1)
    m[1][2] = random_quaternion(rng, ring, 2, 1)
    for i in range(3):
        k = rng.choice((1, -1, 2))
        m[i] = [x * k for x in m[i]]
    return m


def random_generator(rng: random.Random, ring: QuaternionRing, kinds=None) -> GroupElement:
    kinds = kinds or ("n", "nbar", "J", "m", "scalar", "weight")
    kind = rng.choice(kinds)
    if kind == "n":
        return freudenthal.op_n(random_jelement(rng, ring, 2, 2))
    if kind == "nbar":
        return freudenthal.op_nbar(random_jelement(rng, ring, 2, 2))
    if kind == "J":
        return freudenthal.op_J6(ring)
    if kind == "m":
        while True:
            try:
                return freudenthal.op_m(ring, random_quaternion_matrix(rng, ring), rng.choice((1, 2)))
            except DomainError:
                continue
    if kind == "scalar":
        return freudenthal.op_scalar(ring, Fraction(rng.choice((1, 2, 3)), rng.choice((1, 2))))
    return freudenthal.op_weight(ring, Fraction(rng.choice((1, 2, 3)), rng.choice((1, 2))))


def random_word(rng: random.Random, ring: QuaternionRing, length: int = 3, kinds=None,
                verify: bool = False) -> GroupElement:
    """A product of ``length`` random generators; only the factors are verified by default."""
    g = random_generator(rng, ring, kinds)
    for _ in range(length - 1):
        g = g.compose(random_generator(rng, ring, kinds), verify=False)
    if verify:
        g.verify()
    return g


def random_point_group(rng: random.Random, ring: QuaternionRing, length: int = 2) -> GroupElement:
    """Words with positive similitude, for the action on the Hermitian space."""
    return random_word(rng, ring, length, kinds=("n", "nbar", "J", "m", "weight"))

