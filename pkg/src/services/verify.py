"""
Property suites over the whole library.

Each suite draws from its own generator seeded by (seed, suite name), so a suite
reproduces identically whether it runs alone or inside ``all``. Randomized
properties scale with ``trials``; the documented corpus sizes are reached at
``trials=500``. Fixed checks always run.
"""
import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional

from src.config import DEFAULT_TOLERANCE
from src.errors import Fgsp6Exception, UsageError
from src.services import clifford, ctable, diffop, freudenthal, gsp6, hermspace, jordan
from src.services.quat import TernaryForm, good_basis_table, ring_from_form
from src.utils import linalg, sampling
from src.utils.scalars import CScalar, format_scalar

logger = logging.getLogger("fgsp6.verify")

FULL_TRIALS = 500

HURWITZ = TernaryForm(1, 1, 1, 1, 1, 1)
IDENTITY_FORM = TernaryForm(1, 1, 1, 0, 0, 0)
FIXED_FORMS = (IDENTITY_FORM, HURWITZ, TernaryForm(2, 3, 5, 1, 1, 1))


class _Stop(Exception):
    pass


@dataclass
class SuiteResult:
    suite: str
    checks: int = 0
    counterexample: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None


class Checker:
    """Counts checks and stops the suite at the first counterexample."""

    def __init__(self, suite: str, seed: int, trials: int, tolerance: float):
        self.result = SuiteResult(suite=suite)
        self.rng = random.Random(f"fgsp6:{seed}:{suite}")
        self.trials = trials
        self.tolerance = tolerance

    def size(self, full: int) -> int:
        """``full`` instances at trials=500, proportionally fewer (at least one) below."""
        if self.trials <= 0:
            return 0
        return max(1, -(-self.trials * full // FULL_TRIALS))

    def check(self, ok: bool, describe: Callable[[], str]):
        self.result.checks += 1
        if not ok:
            self.result.counterexample = describe()
            raise _Stop()

    def equal(self, label: str, lhs, rhs, context: Callable[[], str] = lambda: ""):
        def describe():
            suffix = context()
            return f"{label}: {_fmt(lhs)} != {_fmt(rhs)}" + (f" at {suffix}" if suffix else "")
        self.check(lhs == rhs, describe)

    def raises_nothing(self, label: str, fn: Callable[[], object], context: Callable[[], str] = lambda: ""):
        self.result.checks += 1
        try:
            fn()
        except Fgsp6Exception as exc:
            suffix = context()
            self.result.counterexample = f"{label}: {exc.message}" + (f" at {suffix}" if suffix else "")
            raise _Stop()

    def close(self, label: str, value: complex, expected: complex, context: Callable[[], str] = lambda: ""):
        def describe():
            suffix = context()
            return f"{label}: {value!r} differs from {expected!r}" + (f" at {suffix}" if suffix else "")
        self.check(abs(value - expected) <= self.tolerance, describe)


def _fmt(x) -> str:
    if isinstance(x, (int, Fraction, CScalar)):
        return format_scalar(x)
    return str(x)


# ------------------- Suites -------------------

def suite_jordan(c: Checker):
    one = jordan.identity(ring_from_form(HURWITZ))
    c.equal("N(1)", jordan.jnorm(one), 1)
    c.equal("1#", jordan.sharp(one), one)
    rings = [sampling.random_ring(c.rng) for _ in range(5)]
    for k in range(c.size(500)):
        ring = rings[k % len(rings)]
        h = sampling.random_jelement(c.rng, ring)
        x = sampling.random_jelement(c.rng, ring)
        y = sampling.random_jelement(c.rng, ring)
        where = lambda: f"h = {h} over {ring.form}"
        n = jordan.jnorm(h)
        hh = jordan.qmat_mul(ring, jordan.to_matrix(h), jordan.to_matrix(jordan.sharp(h)))
        c.check(jordan.qmat_equal(hh, jordan.qmat_scalar(ring, n)), lambda: f"h h# != N(h) 1 at {where()}")
        c.equal("(h#)#", jordan.sharp(jordan.sharp(h)), h * n, where)
        c.equal("tr(x cross y, h)", jordan.trace_pair(jordan.cross(x, y), h), jordan.trilinear(x, y, h), where)
        expansion = (jordan.jnorm(x) + jordan.trace_pair(jordan.sharp(x), y)
                     + jordan.trace_pair(x, jordan.sharp(y)) + jordan.jnorm(y))
        c.equal("N(x+y)", jordan.jnorm(x + y), expansion, lambda: f"x = {x}, y = {y}")


def _mixed_corpus(c: Checker, ring, count: int):
    makers = (sampling.random_rank_one, sampling.random_rank_le_two, sampling.random_welement,
              lambda rng, r: freudenthal.f_vector(r))
    for k in range(count):
        yield makers[k % len(makers)](c.rng, ring)


def suite_freudenthal(c: Checker):
    ring = ring_from_form(HURWITZ)
    e, f = freudenthal.e_vector(ring), freudenthal.f_vector(ring)
    c.equal("rank(e)", freudenthal.wrank(e), 1)
    c.equal("rank(f)", freudenthal.wrank(f), 1)
    c.equal("rank(e + f)", freudenthal.wrank(e + f), 4)

    for _ in range(c.size(100)):
        r = sampling.random_ring(c.rng)
        v, w, w2 = (sampling.random_welement(c.rng, r) for _ in range(3))
        where = lambda: f"v = {v} over {r.form}"
        c.equal("(v,v,v,v)", freudenthal.fourlinear(v, v, v, v), freudenthal.quartic(v), where)
        c.equal("(v,v,v,w)", freudenthal.fourlinear(v, v, v, w), freudenthal.polar3(v, w), where)
        c.equal("(v,v,w,w')", freudenthal.fourlinear(v, v, w, w2), freudenthal.polar2(v, w, w2), where)

    corpus = list(_mixed_corpus(c, ring, c.size(300)))
    for v in corpus:
        c.check(freudenthal.rank1_is_sharp_pair(v) == (freudenthal.wrank(v) <= 1),
                lambda: f"sharp-pair test disagrees with rank {freudenthal.wrank(v)} at v = {v}")

    for k in range(c.size(200)):
        g = sampling.random_word(c.rng, ring, length=2)
        v = corpus[k % len(corpus)] if corpus else sampling.random_rank_one(c.rng, ring)
        c.equal("rank(v g)", freudenthal.wrank(g.apply(v)), freudenthal.wrank(v), lambda: f"v = {v}")

    for _ in range(c.size(100)):
        x, y = sampling.random_jelement(c.rng, ring, 2), sampling.random_jelement(c.rng, ring, 2)
        v = sampling.random_welement(c.rng, ring)
        lhs = freudenthal.op_n(x + y).apply(v)
        rhs = freudenthal.op_n(y).apply(freudenthal.op_n(x).apply(v))
        c.equal("n(X+Y)", lhs, rhs, lambda: f"X = {x}, Y = {y}")

    for _ in range(c.size(50)):
        v = sampling.random_rank_one(c.rng, ring)
        if c.rng.random() < 0.5:
            v = freudenthal.op_J6(ring).apply(v)
        normalized = []
        c.raises_nothing("normalize_d1", lambda: normalized.append(freudenthal.normalize_d1(v)),
                         lambda: f"v = {v}")
        c.equal("normalized d", normalized[0].translate.d, 1, lambda: f"v = {v}")


def suite_embedding(c: Checker):
    ring = ring_from_form(HURWITZ)
    c.equal("iota(1)", gsp6.iota(ring, gsp6.identity()), freudenthal.identity_element(ring))
    c.equal("iota(J)", gsp6.iota(ring, gsp6.j_matrix()), freudenthal.op_J6(ring))

    for _ in range(c.size(50)):
        r = sampling.random_ring(c.rng, 3)
        u = sampling.random_symmetric(c.rng)
        c.equal("iota(n(u))", gsp6.iota(r, gsp6.unipotent(u)), freudenthal.op_n(gsp6.symmetric_to_jordan(r, u)),
                lambda: f"u = {u} over {r.form}")

    for _ in range(c.size(50)):
        r = sampling.random_ring(c.rng, 3)
        lam = sampling.random_rational(c.rng, 3, 2) or Fraction(1)
        m = sampling.random_invertible(c.rng, 2)
        g = gsp6.levi(lam, m)
        upper = [row[:3] for row in g.matrix[:3]]
        v = sampling.random_welement(c.rng, r)
        c.equal("iota(levi)", gsp6.iota(r, g).apply(v), gsp6.levi_block_action(v, upper, m),
                lambda: f"lam = {lam}, m = {m}")

    for _ in range(c.size(50)):
        x = sampling.random_jelement(c.rng, ring, 2)
        expected = linalg.to_fraction_matrix(freudenthal.op_n(x).matrix)
        c.equal("exp(L(X))", gsp6.nilpotent_exp(gsp6.log_n_matrix(x)), expected, lambda: f"X = {x}")

    for _ in range(c.size(100)):
        g, h = sampling.random_gsp6(c.rng), sampling.random_gsp6(c.rng)
        lhs = gsp6.iota(ring, g * h)
        rhs = gsp6.iota(ring, g).compose(gsp6.iota(ring, h), verify=False)
        c.equal("iota(gh)", lhs, rhs, lambda: f"g = {g.matrix}, h = {h.matrix}")

    for k in range(c.size(100)):
        form = FIXED_FORMS[k % len(FIXED_FORMS)]
        u = sampling.random_symmetric(c.rng)
        lam = Fraction(c.rng.randint(1, 3), c.rng.randint(1, 2))
        m = sampling.random_invertible(c.rng, 2)
        c.raises_nothing("f_O action", lambda: gsp6.f_o_action(form, u, lam, m),
                         lambda: f"T = {form}, u = {u}, lam = {lam}, m = {m}")


def _hnf_up_to(bound: int):
    for index in range(1, bound + 1):
        yield from clifford.hnf_matrices(index)


def _entries_integral(x: jordan.JElement) -> bool:
    return all(Fraction(v).denominator == 1 for v in x.coords())


def suite_clifford(c: Checker):
    c.equal("disc(Hurwitz)", clifford.reduced_discriminant(HURWITZ), 2)
    c.equal("maximal(Hurwitz)", clifford.is_maximal(HURWITZ), True)
    c.equal("disc(identity)", clifford.reduced_discriminant(IDENTITY_FORM), 4)
    c.equal("maximal(identity)", clifford.is_maximal(IDENTITY_FORM), False)
    witness = clifford.find_superorder(IDENTITY_FORM, 2)
    c.check(witness is not None, lambda: "no index-2 superorder of the identity form")

    for form in FIXED_FORMS:
        ring = ring_from_form(form)
        c.equal("A(T)#", jordan.sharp(clifford.a_matrix(clifford.GoodBasedOrder(ring, form))),
                jordan.zero(ring), lambda: f"T = {form}")
        for m in _hnf_up_to(8):
            half_integral = clifford.suborder_test(form, m)
            closed = clifford.lattice_is_closed(ring, clifford.sublattice_basis(form, m))
            integral = _entries_integral(clifford.suborder_good_basis(form, m))
            c.check(half_integral == closed == integral,
                    lambda: f"T = {form}, m = {m}: half-integral {half_integral}, "
                            f"closed {closed}, integral good basis {integral}")
            if half_integral:
                t2 = clifford.suborder_form(form, m)
                c.equal("4det(T')", clifford.reduced_discriminant(t2),
                        linalg.det3(m) * clifford.reduced_discriminant(form), lambda: f"T = {form}, m = {m}")

    for _ in range(c.size(500)):
        form = sampling.random_form(c.rng)
        ring = ring_from_form(form)
        c.equal("form roundtrip", clifford.form_from_good_basis(ring, ring.basis_vectors()), form)
        c.equal("good-basis table", [[list(e) for e in row] for row in ring.table], good_basis_table(form),
                lambda: f"T = {form}")

    for _ in range(c.size(100)):
        form = sampling.random_form(c.rng)
        ring = ring_from_form(form)
        shift = tuple(Fraction(c.rng.randint(-3, 3)) for _ in range(3))
        basis = [v + ring.scalar(x) for v, x in zip(ring.basis_vectors(), shift)]
        c.equal("good_basis_shift", clifford.good_basis_shift(clifford.structure_constants(ring, basis)), shift,
                lambda: f"T = {form}")
        a1 = clifford.a_matrix(clifford.GoodBasedOrder(ring, form))
        a2 = clifford.rank_one_completion(ring, basis)
        c.equal("rank-one completion", a2, a1, lambda: f"T = {form}")
        c.check(clifford.imaginary_parts_determine(a1, a2), lambda: f"imaginary parts do not determine A(T) for T = {form}")

    for _ in range(c.size(100)):
        form = sampling.random_form(c.rng)
        ring = ring_from_form(form)
        lam = c.rng.randint(1, 4)
        c.equal("Z + lam O", clifford.scaled_order_form(ring, ring.basis_vectors(), lam), form.scaled(lam),
                lambda: f"T = {form}, lam = {lam}")

    for _ in range(c.size(25)):
        form = sampling.random_definite_form(c.rng, 3)
        k = sampling.random_sl3(c.rng)
        moved = clifford.suborder_form(form, k)
        c.check(clifford.forms_equivalent(form, moved) is not None,
                lambda: f"no equivalence found between {form} and {moved}")


def suite_hermspace(c: Checker):
    ring = hermspace.hamilton_ring()
    i_point = hermspace.PointH(hermspace.i_point(ring))
    c.raises_nothing("N(Im Z) at i", lambda: hermspace.im_norm_identity(i_point.z))
    c.raises_nothing("DPhi at the identity", lambda: hermspace.dphi_identity_check(freudenthal.identity_element(ring)))

    for _ in range(c.size(200)):
        v = sampling.random_rank_one(c.rng, ring)
        c.raises_nothing("rank-one |<r(i), v>|^2", lambda: hermspace.check_rk1_norm(v), lambda: f"v = {v}")

    for _ in range(c.size(200)):
        z = sampling.random_cjelement(c.rng, ring)
        c.raises_nothing("N(Im Z)", lambda: hermspace.im_norm_identity(z), lambda: f"Z = {z}")

    for _ in range(c.size(50)):
        g = sampling.random_point_group(c.rng, ring, 1)
        h = sampling.random_point_group(c.rng, ring, 1)
        point = hermspace.act_on_h(sampling.random_point_group(c.rng, ring, 1), i_point)
        c.raises_nothing("cocycle", lambda: hermspace.cocycle_check(g, h, point), lambda: f"Z = {point.z}")

    for k in range(c.size(100)):
        form = FIXED_FORMS[k % len(FIXED_FORMS)]
        g6 = sampling.random_parabolic(c.rng)
        c.raises_nothing("f_O equation", lambda: hermspace.f_o_eqn_check(form, g6),
                         lambda: f"T = {form}, g = {g6.matrix}")

    for _ in range(c.size(50)):
        g = sampling.random_point_group(c.rng, ring, 2)
        c.raises_nothing("DPhi identity", lambda: hermspace.dphi_identity_check(g))

    for _ in range(c.size(50)):
        k = freudenthal.op_m(ring, hermspace.cayley_orthogonal(sampling.random_skew(c.rng)), 1)
        if c.rng.random() < 0.5:
            k = k.compose(freudenthal.op_J6(ring), verify=False)
        v = sampling.random_welement(c.rng, ring)
        c.raises_nothing("equivariance", lambda: hermspace.phi_equivariance_check(v, k), lambda: f"v = {v}")


def suite_diffop(c: Checker):
    expr = diffop.build_d0()
    c.equal("D0 terms", len(expr), 29)
    problem = diffop.check_norm_polynomial(expr)
    c.check(problem is None, lambda: problem)
    for _ in range(c.size(500)):
        w = sampling.random_welement(c.rng, expr.ring)
        problem = diffop.check_point(expr, w)
        c.check(problem is None, lambda: problem)


def suite_ctable(c: Checker):
    c.equal("lambda_s from delta", ctable.lambda_from_delta(), (ctable.Affine(3, -15),) + ctable.LAMBDA_S)
    c.equal("|W(C3)|", len(set(ctable.weyl_group())), 48)
    for entry in ctable.coset_table():
        c.equal(f"c{entry.index}", entry.c, ctable.listed_c_function(entry.index))
    c8 = ctable.c_factor(ctable.coset_roots(8))
    zeta = ctable.ZETA
    top = [ctable.Factor(zeta, ctable.Affine(2, x)) for x in (-10, -14, -18)]
    split = ctable.ZetaFactorProduct.build(top, [ctable.Factor(zeta, ctable.Affine(2, x)) for x in (0, -4, -8)])
    ramified = ctable.ZetaFactorProduct.build(top, [ctable.Factor(zeta, ctable.Affine(2, x)) for x in (0, -8, -16)])
    c.equal("c8 split", ctable.expand_place(c8, "split"), split)
    c.equal("c8 ramified", ctable.expand_place(c8, "ramified"), ramified)
    words = ctable.reduced_words(ctable.longest_coset_element())
    c.check(len(words) >= 2, lambda: f"only {len(words)} reduced words for w8")
    for word in (words[0], words[-1]):
        c.equal(f"c8 via s{''.join(map(str, word))}", ctable.c_factor_via_word(word), c8)

    fixed = ctable.functional_equation_constant([2], complex(2.3, 0.7))
    c.close("FE constant at 2.3+0.7i", fixed.constant, 1)
    c.close("E0* ratio at 2.3+0.7i", fixed.ratio, 1)
    for primes in ([2], [3], [5]):
        for k in range(c.size(20)):
            re = 2.5 if k % 2 == 0 else c.rng.uniform(1.2, 3.8)
            s = complex(re, c.rng.uniform(0.5, 6.0))
            values = ctable.functional_equation_constant(primes, s)
            where = lambda: f"D_B = {primes}, s = {s}"
            c.close("FE constant", values.constant, 1, where)
            c.close("E0* ratio", values.ratio, 1, where)
    for _ in range(c.size(20)):
        s = complex(c.rng.uniform(3.0, 5.0), c.rng.uniform(0.5, 4.0))
        primes = [c.rng.choice((2, 3, 5, 7))]
        expected = ctable.arch_c_closed_form(primes, s)
        c.close("c8 at infinity", ctable.numeric_local(c8, "arch", s, primes), expected,
                lambda: f"D_B = {primes}, s = {s}")


SUITES: Dict[str, Callable[[Checker], None]] = {
    "jordan": suite_jordan,
    "freudenthal": suite_freudenthal,
    "embedding": suite_embedding,
    "clifford": suite_clifford,
    "hermspace": suite_hermspace,
    "diffop": suite_diffop,
    "ctable": suite_ctable,
}


def run_suite(name: str, seed: int, trials: int, tolerance: float = DEFAULT_TOLERANCE) -> SuiteResult:
    if name not in SUITES:
        raise UsageError(f"Unknown suite '{name}'; expected all or one of {', '.join(SUITES)}")
    checker = Checker(name, seed, trials, tolerance)
    try:
        SUITES[name](checker)
    except _Stop:
        logger.warning(f"suite {name} failed after {checker.result.checks} checks")
    return checker.result


def run(selection: str, seed: int, trials: int, tolerance: float = DEFAULT_TOLERANCE) -> List[SuiteResult]:
    """Run one suite or ``all`` in fixed order."""
    names = list(SUITES) if selection == "all" else [selection]
    results = []
    for name in names:
        results.append(run_suite(name, seed, trials, tolerance))
        logger.info(f"suite {name}: {results[-1].checks} checks")
    return results
