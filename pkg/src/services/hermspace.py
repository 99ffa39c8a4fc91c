"""
The Hermitian symmetric space of G over exact Gaussian rationals.

Points Z = X + iY of H3(B (x) C) are JElements with CScalar coordinates. A group
element g acts through r(Z) g^-1 = j(g, Z) r(gZ), with r(Z) = (1, -Z, Z#, -N(Z)).
Every identity here is polynomial in z and sigma(z); |z|^2 means z sigma(z).
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from src.errors import (
    DegeneratePointError,
    DomainError,
    InternalConsistencyError,
    PreconditionError,
)
from src.services import freudenthal, gsp6, jordan
from src.services.freudenthal import GroupElement, WElement, symplectic, wrank
from src.services.jordan import JElement, jnorm, sharp, trace_pair
from src.services.quat import QuaternionRing, TernaryForm, norm, ring_from_form
from src.utils import linalg
from src.utils.linalg import Matrix
from src.utils.scalars import I, CScalar, Scalar, format_scalar, is_real, real_part, sigma

logger = logging.getLogger("fgsp6.hermspace")


def abs_sq(z: Scalar) -> Scalar:
    return z * sigma(z)


def i_point(ring: QuaternionRing) -> JElement:
    """i * 1_3."""
    return jordan.identity(ring) * I


def imaginary_part(z: JElement) -> JElement:
    """(Z - sigma Z) / 2i, returned with rational coordinates."""
    y = (z - z.sigma()) * (1 / (2 * I))
    coords = y.coords()
    if not all(is_real(x) for x in coords):
        raise InternalConsistencyError("Imaginary part is not real")
    return jordan.from_coords(z.ring, [real_part(x) for x in coords])


def is_positive(y: JElement) -> bool:
    """Diagonal entries, principal 2x2 minors (diagonal of Y#) and N(Y) all positive."""
    if any(real_part(c) <= 0 for c in y.c):
        return False
    if any(real_part(c) <= 0 for c in sharp(y).c):
        return False
    return real_part(jnorm(y)) > 0


@dataclass(frozen=True)
class PointH:
    z: JElement

    def __post_init__(self):
        if not is_positive(imaginary_part(self.z)):
            raise DomainError(f"Imaginary part of {self.z} is not positive definite")


def r_of(z: JElement) -> WElement:
    return WElement(z.ring, 1, -z, sharp(z), -jnorm(z))


def j_factor(g: GroupElement, z: JElement) -> Scalar:
    """<r(Z) g^-1, f>, the a-slot of r(Z) g^-1."""
    value = g.inverse().apply(r_of(z)).a
    if value == 0:
        raise DegeneratePointError(f"j(g, Z) vanishes at Z = {z}")
    return value


def act_on_h(g: GroupElement, point: PointH) -> PointH:
    moved = g.inverse().apply(r_of(point.z))
    j = moved.a
    if j == 0:
        raise DegeneratePointError(f"j(g, Z) vanishes at Z = {point.z}")
    gz = moved.b * (-1 / j)
    if moved.c != sharp(gz) * j or moved.d != -j * jnorm(gz):
        raise InternalConsistencyError("r(Z) g^-1 is not a multiple of r(gZ)")
    return PointH(gz)


def j_gsp6(g: gsp6.GSp6Element, z: Matrix) -> Scalar:
    """nu(g)^-2 det(C Z + D) for the lower blocks (C, D) of g."""
    m = g.matrix
    c = [row[:3] for row in m[3:]]
    d = [row[3:] for row in m[3:]]
    cz_d = linalg.add(linalg.matmul(c, z), d)
    return linalg.det(cz_d) / (g.similitude * g.similitude)


def scalar_matrix_of(z: JElement) -> Matrix:
    """The symmetric scalar matrix of a point whose entries are scalar quaternions."""
    if not all(a.is_scalar() for a in z.a):
        raise DomainError("Point has non-scalar off-diagonal entries")
    a1, a2, a3 = (a.coords[0] for a in z.a)
    c1, c2, c3 = z.c
    return [[c1, a3, a2], [a3, c2, a1], [a2, a1, c3]]


def cocycle_check(g: GroupElement, h: GroupElement, point: PointH):
    """j(gh, Z) = j(h, Z) j(g, hZ) and (gh)Z = g(hZ) for the right action."""
    gh = g.compose(h, verify=False)
    lhs = j_factor(gh, point.z)
    h_z = act_on_h(h, point)
    rhs = j_factor(h, point.z) * j_factor(g, h_z.z)
    if lhs != rhs:
        raise InternalConsistencyError(f"Cocycle relation fails: {format_scalar(lhs)} != {format_scalar(rhs)}")
    if act_on_h(gh, point).z != act_on_h(g, h_z).z:
        raise InternalConsistencyError("Action is not compatible with products")


# ------------------- Norms and pairings -------------------

def norm_sq(v: WElement) -> Scalar:
    """||v||^2 = <v, v J6>."""
    return symplectic(v, WElement(v.ring, -v.d, v.c, -v.b, v.a))


def pairing_r_i(v: WElement) -> Scalar:
    """<r(i), v> = (d - tr b) + i (tr c - a)."""
    return symplectic(r_of(i_point(v.ring)), v)


def check_rk1_norm(v: WElement):
    if not v.is_real():
        raise PreconditionError("check_rk1_norm needs real coordinates")
    if wrank(v) != 1:
        raise PreconditionError("check_rk1_norm needs a rank-one element")
    pairing = pairing_r_i(v)
    if abs_sq(pairing) != norm_sq(v):
        raise InternalConsistencyError(
            f"|<r(i), v>|^2 = {format_scalar(abs_sq(pairing))} but ||v||^2 = {format_scalar(norm_sq(v))}")


def im_norm_identity(z: JElement):
    """N(Im Z) = <sigma r(Z), r(Z)> / 8i."""
    r = r_of(z)
    lhs = jnorm(imaginary_part(z))
    rhs = symplectic(r.sigma(), r) / (8 * I)
    if lhs != rhs:
        raise InternalConsistencyError(
            f"N(Im Z) = {format_scalar(lhs)} but <sigma r, r>/8i = {format_scalar(rhs)}")


def f_o_eqn_check(form: TernaryForm, g: gsp6.GSp6Element):
    """nu(g)^-1 j(g,i)^-1 <r(i), f_O g> = tr(T (g i)) for g in the Siegel parabolic."""
    m = g.matrix
    if any(m[r][c] != 0 for r in range(3, 6) for c in range(3)):
        raise PreconditionError("g must be block upper-triangular")
    if g.similitude <= 0:
        raise PreconditionError("g must have positive similitude")
    ring = ring_from_form(form)
    group = gsp6.iota(ring, g)
    point = PointH(i_point(ring))
    fo = gsp6.f_o(form)
    lhs = pairing_r_i(group.apply(fo)) / (g.similitude * j_factor(group, point.z))
    rhs = trace_pair(fo.c, act_on_h(group, point).z)
    if lhs != rhs:
        raise InternalConsistencyError(f"f_O equation fails: {format_scalar(lhs)} != {format_scalar(rhs)}")
    j_classical = j_gsp6(g, scalar_matrix_of(point.z))
    if j_factor(group, point.z) != j_classical:
        raise InternalConsistencyError("j factor differs from nu^-2 det(CZ + D)")


# ------------------- Equivariance under the stabilizer of i -------------------

def cayley_orthogonal(s: Matrix) -> Matrix:
    """(1 - S)(1 + S)^-1 for a skew-symmetric rational S; orthogonal with det 1."""
    s = linalg.to_fraction_matrix(s)
    if linalg.transpose(s) != linalg.scale(s, -1):
        raise DomainError("Cayley transform needs a skew-symmetric matrix")
    one = linalg.identity(3)
    return linalg.matmul(linalg.sub(one, s), linalg.inverse(linalg.add(one, s)))


def phi_equivariance_check(v: WElement, k: GroupElement):
    """<r(i), v k> = nu(k) j(k, i) <r(i), v> for k fixing i 1_3."""
    point = PointH(i_point(v.ring))
    if act_on_h(k, point).z != point.z:
        raise PreconditionError("k does not fix i 1_3")
    lhs = pairing_r_i(k.apply(v))
    rhs = k.similitude * j_factor(k, point.z) * pairing_r_i(v)
    if lhs != rhs:
        raise InternalConsistencyError(f"Equivariance fails: {format_scalar(lhs)} != {format_scalar(rhs)}")


# ------------------- The archimedean differential identity -------------------

def _h_element(ring: QuaternionRing) -> GroupElement:
    one = jordan.identity(ring)
    return freudenthal.op_n(one * I).compose(freudenthal.op_nbar(one * (I / 2)), verify=False)


def dphi_identity_check(g: GroupElement, h: Optional[GroupElement] = None) -> WElement:
    """With J = <r(i), f g> and v = 8iJ f g h: a = |J|^2, d = 8iJ^2 and
    N(b) - 3tr(b,c) + 15d = 8i(|J|^4 - 9|J|^2 + 15)J^2."""
    ring = g.ring
    h = _h_element(ring) if h is None else h
    fg = g.apply(freudenthal.f_vector(ring))
    j = pairing_r_i(fg)
    v = h.apply(fg) * (8 * I * j)
    mod = abs_sq(j)
    if v.a != mod:
        raise InternalConsistencyError(f"a-slot {format_scalar(v.a)} != |J|^2 = {format_scalar(mod)}")
    if v.d != 8 * I * j * j:
        raise InternalConsistencyError(f"d-slot {format_scalar(v.d)} != 8iJ^2")
    lhs = jnorm(v.b) - 3 * trace_pair(v.b, v.c) + 15 * v.d
    rhs = 8 * I * (mod * mod - 9 * mod + 15) * j * j
    if lhs != rhs:
        raise InternalConsistencyError(f"N(b) - 3tr(b,c) + 15d = {format_scalar(lhs)} != {format_scalar(rhs)}")
    if wrank(v) != 1:
        raise InternalConsistencyError("8iJ f g h is not rank one")
    return v


def hamilton_ring() -> QuaternionRing:
    return ring_from_form(TernaryForm(1, 1, 1, 0, 0, 0))
