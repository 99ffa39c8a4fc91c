"""
The cubic operator D0 in Sym^3(J) and its three evaluation sums.

D0 is the trace-dual of the coordinate expansion of the Jordan norm over the
Hamilton-type ring (form 1 1 1 0 0 0) with units 1, i = v1, j = v2, k = v1 v2.
For w = (a, b, c, d) the sums are expected to be N(b), -3 tr(b, c) and 15 d.
"""
import itertools
import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from src.services import jordan
from src.services.freudenthal import WElement, symplectic
from src.services.jordan import JElement, cross, jnorm, trace_pair
from src.services.quat import Quaternion, QuaternionRing, TernaryForm, mul, ring_from_form
from src.utils.sampling import random_welement
from src.utils.scalars import Scalar

logger = logging.getLogger("fgsp6.diffop")

HAMILTON_FORM = TernaryForm(1, 1, 1, 0, 0, 0)


@dataclass(frozen=True)
class CubicTensorTerm:
    alpha: Fraction
    x: JElement
    y: JElement
    z: JElement

    def permuted(self, order: Sequence[int]) -> "CubicTensorTerm":
        factors = (self.x, self.y, self.z)
        return CubicTensorTerm(self.alpha, *(factors[k] for k in order))


@dataclass(frozen=True)
class D0Expression:
    ring: QuaternionRing
    terms: Tuple[CubicTensorTerm, ...]

    def __len__(self):
        return len(self.terms)


def hamilton_units(ring: QuaternionRing) -> Dict[str, Quaternion]:
    i, j = ring.basis(1), ring.basis(2)
    return {"1": ring.one(), "i": i, "j": j, "k": mul(i, j)}


def e_diag(ring: QuaternionRing, i: int) -> JElement:
    c = [0, 0, 0]
    c[i - 1] = 1
    return jordan.diag(ring, *c)


def v_offdiag(ring: QuaternionRing, i: int, u: Quaternion) -> JElement:
    """v_i(u) = u e_{i+1,i+2} + u* e_{i+2,i+1}."""
    return jordan.off_diagonal(ring, i, u)


def build_d0(ring: Optional[QuaternionRing] = None) -> D0Expression:
    ring = ring_from_form(HAMILTON_FORM) if ring is None else ring
    units = hamilton_units(ring)
    quarter = Fraction(1, 4)
    terms: List[CubicTensorTerm] = []

    def add(alpha, x, y, z):
        terms.append(CubicTensorTerm(Fraction(alpha), x, y, z))

    add(1, e_diag(ring, 1), e_diag(ring, 2), e_diag(ring, 3))
    for i in (1, 2, 3):
        for name in ("1", "i", "j", "k"):
            v = v_offdiag(ring, i, units[name])
            add(-quarter, e_diag(ring, i), v, v)
    add(quarter, *(v_offdiag(ring, i, units["1"]) for i in (1, 2, 3)))
    for i in (1, 2, 3):
        nxt, last = i % 3 + 1, (i + 1) % 3 + 1
        for name in ("i", "j", "k"):
            add(-quarter, v_offdiag(ring, i, units["1"]),
                v_offdiag(ring, nxt, units[name]), v_offdiag(ring, last, units[name]))
    # det(v_j(u)), rows u in (i, j, k), columns j in (1, 2, 3)
    names = ("i", "j", "k")
    for perm in itertools.permutations(range(3)):
        sign = _permutation_sign(perm)
        add(-quarter * sign, *(v_offdiag(ring, col + 1, units[names[perm[col]]]) for col in range(3)))
    return D0Expression(ring=ring, terms=tuple(terms))


def _permutation_sign(perm: Sequence[int]) -> int:
    sign = 1
    for a in range(len(perm)):
        for b in range(a + 1, len(perm)):
            if perm[a] > perm[b]:
                sign = -sign
    return sign


# ------------------- Evaluations -------------------

def _c_slot(x: JElement) -> WElement:
    z = jordan.zero(x.ring)
    return WElement(x.ring, 0, z, x, 0)


def _b_slot(x: JElement) -> WElement:
    z = jordan.zero(x.ring)
    return WElement(x.ring, 0, x, z, 0)


def d1(term: CubicTensorTerm, w: WElement) -> Scalar:
    return (symplectic(_c_slot(term.x), w) * symplectic(_c_slot(term.y), w)
            * symplectic(_c_slot(term.z), w))


def d2(term: CubicTensorTerm, w: WElement) -> Scalar:
    x, y, z = term.x, term.y, term.z
    return (symplectic(_c_slot(x), w) * symplectic(_b_slot(cross(y, z)), w)
            + symplectic(_c_slot(y), w) * symplectic(_b_slot(cross(z, x)), w)
            + symplectic(_c_slot(z), w) * symplectic(_b_slot(cross(x, y)), w))


def d3(term: CubicTensorTerm, w: WElement) -> Scalar:
    zero = jordan.zero(w.ring)
    lead = trace_pair(term.z, cross(term.x, term.y))
    return symplectic(WElement(w.ring, lead, zero, zero, 0), w)


def _evaluate(evaluator: Callable, expr: D0Expression, w: WElement) -> Scalar:
    total = Fraction(0)
    for term in expr.terms:
        total = total + term.alpha * evaluator(term, w)
    return total


def eval_d1(expr: D0Expression, w: WElement) -> Scalar:
    return _evaluate(d1, expr, w)


def eval_d2(expr: D0Expression, w: WElement) -> Scalar:
    return _evaluate(d2, expr, w)


def eval_d3(expr: D0Expression, w: WElement) -> Scalar:
    return _evaluate(d3, expr, w)


def permuted_expression(expr: D0Expression, order: Sequence[int]) -> D0Expression:
    return D0Expression(ring=expr.ring, terms=tuple(t.permuted(order) for t in expr.terms))


@dataclass
class PropositionResult:
    checks: int
    counterexample: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None


def check_point(expr: D0Expression, w: WElement) -> Optional[str]:
    """None when all three sums match at w, else a description of the mismatch."""
    expected = (jnorm(w.b), -3 * trace_pair(w.b, w.c), 15 * w.d)
    got = (eval_d1(expr, w), eval_d2(expr, w), eval_d3(expr, w))
    for label, e, g in zip(("D1", "D2", "D3"), expected, got):
        if e != g:
            return f"{label} sum {g} != {e} at w = {w}"
    return None


def verify_proposition(trials: int, seed: int, expr: Optional[D0Expression] = None,
                       sampler: Optional[Callable] = None) -> PropositionResult:
    """Check the three sums at ``trials`` points drawn from the generator seeded by ``seed``."""
    expr = build_d0() if expr is None else expr
    rng = random.Random(f"fgsp6:{seed}:diffop")
    sampler = sampler or random_welement
    result = PropositionResult(checks=0)
    for _ in range(trials):
        w = sampler(rng, expr.ring)
        result.checks += 1
        problem = check_point(expr, w)
        if problem:
            result.counterexample = problem
            logger.warning(problem)
            break
    return result


def norm_polynomial_points(ring: QuaternionRing):
    """All b = sum m_k e_k with sum m_k = 3 over the 15 coordinates (680 points)."""
    basis = jordan.basis(ring)
    for combo in itertools.combinations_with_replacement(range(15), 3):
        b = jordan.zero(ring)
        for k in combo:
            b = b + basis[k]
        yield b


def check_norm_polynomial(expr: Optional[D0Expression] = None) -> Optional[str]:
    """The D1 sum agrees with N(b) on a unisolvent set for cubic forms."""
    expr = build_d0() if expr is None else expr
    zero = jordan.zero(expr.ring)
    for b in norm_polynomial_points(expr.ring):
        w = WElement(expr.ring, 0, b, zero, 0)
        if eval_d1(expr, w) != jnorm(b):
            return f"D1 sum differs from N(b) at b = {b}"
    return None
