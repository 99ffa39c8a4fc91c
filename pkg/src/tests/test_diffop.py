from fractions import Fraction

from src.services import diffop, jordan
from src.services.freudenthal import WElement
from src.utils import sampling


def test_d0_has_twenty_nine_terms():
    expr = diffop.build_d0()
    assert len(expr) == 29
    leading = [t for t in expr.terms
               if (t.x, t.y, t.z) == tuple(diffop.e_diag(expr.ring, i) for i in (1, 2, 3))]
    assert [t.alpha for t in leading] == [1]


def test_first_sum_is_the_norm():
    assert diffop.check_norm_polynomial() is None


def test_three_sums(rng):
    expr = diffop.build_d0()
    for _ in range(5):
        w = sampling.random_welement(rng, expr.ring)
        assert diffop.eval_d1(expr, w) == jordan.jnorm(w.b)
        assert diffop.eval_d2(expr, w) == -3 * jordan.trace_pair(w.b, w.c)
        assert diffop.eval_d3(expr, w) == 15 * w.d


def test_verify_proposition():
    result = diffop.verify_proposition(10, seed=3)
    assert result.passed
    assert result.checks == 10


def test_verify_proposition_is_seeded():
    def recording(points):
        def sample(rng, ring):
            w = sampling.random_welement(rng, ring)
            points.append(w)
            return w
        return sample

    first, again, other = [], [], []
    diffop.verify_proposition(4, 7, sampler=recording(first))
    diffop.verify_proposition(4, 7, sampler=recording(again))
    diffop.verify_proposition(4, 8, sampler=recording(other))
    assert first == again
    assert first != other


def test_a_broken_expression_is_caught(rng):
    expr = diffop.build_d0()
    first = expr.terms[0]
    broken = diffop.D0Expression(
        ring=expr.ring,
        terms=(diffop.CubicTensorTerm(first.alpha * 2, first.x, first.y, first.z),) + expr.terms[1:],
    )
    ring = expr.ring
    zero = jordan.zero(ring)
    b = jordan.identity(ring)
    assert diffop.check_point(broken, WElement(ring, 0, b, zero, Fraction(0))) is not None
    assert diffop.check_norm_polynomial(broken) is not None


def test_sums_are_symmetric_in_the_tensor_factors(rng):
    expr = diffop.build_d0()
    w = sampling.random_welement(rng, expr.ring)
    for order in ((1, 0, 2), (2, 0, 1)):
        moved = diffop.permuted_expression(expr, order)
        assert diffop.eval_d1(moved, w) == diffop.eval_d1(expr, w)
        assert diffop.eval_d2(moved, w) == diffop.eval_d2(expr, w)
        assert diffop.eval_d3(moved, w) == diffop.eval_d3(expr, w)
