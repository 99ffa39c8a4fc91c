from fractions import Fraction

import pytest

from src import config
from src.errors import DomainError, InternalConsistencyError, InvalidInputError, PreconditionError, UsageError
from src.services import freudenthal, jordan
from src.services.freudenthal import GroupElement
from src.utils import linalg, sampling


def test_distinguished_vectors(hurwitz_ring):
    e, f = freudenthal.e_vector(hurwitz_ring), freudenthal.f_vector(hurwitz_ring)
    assert freudenthal.symplectic(e, f) == 1
    assert freudenthal.quartic(e + f) == 1
    assert freudenthal.wrank(e) == 1
    assert freudenthal.wrank(f) == 1
    assert freudenthal.wrank(e + f) == 4
    assert freudenthal.wrank(freudenthal.zero(hurwitz_ring)) == 0


def test_fourlinear_normalization(rng):
    for _ in range(5):
        ring = sampling.random_ring(rng)
        v, w, w2 = (sampling.random_welement(rng, ring) for _ in range(3))
        assert freudenthal.fourlinear(v, v, v, v) == freudenthal.quartic(v)
        assert freudenthal.fourlinear(v, v, v, w) == freudenthal.polar3(v, w)
        assert freudenthal.fourlinear(v, v, w, w2) == freudenthal.polar2(v, w, w2)


def test_rank_one_elements(rng, hurwitz_ring):
    for _ in range(10):
        v = sampling.random_rank_one(rng, hurwitz_ring)
        assert freudenthal.wrank(v) == 1
        assert freudenthal.rank1_is_sharp_pair(v)
    v = sampling.random_rank_le_two(rng, hurwitz_ring)
    assert freudenthal.wrank(v) <= 2


def test_sharp_pair_test_agrees_with_rank(rng, hurwitz_ring):
    for _ in range(20):
        v = sampling.random_welement(rng, hurwitz_ring, 1, 1)
        assert freudenthal.rank1_is_sharp_pair(v) == (freudenthal.wrank(v) <= 1)


def test_rank_is_invariant_under_the_group(rng, hurwitz_ring):
    for _ in range(10):
        g = sampling.random_word(rng, hurwitz_ring, length=2)
        v = sampling.random_rank_one(rng, hurwitz_ring) if rng.random() < 0.5 \
            else sampling.random_welement(rng, hurwitz_ring)
        assert freudenthal.wrank(g.apply(v)) == freudenthal.wrank(v)


def test_n_is_a_homomorphism(rng, hurwitz_ring):
    for _ in range(5):
        x = sampling.random_jelement(rng, hurwitz_ring, 2)
        y = sampling.random_jelement(rng, hurwitz_ring, 2)
        composed = freudenthal.op_n(x).compose(freudenthal.op_n(y))
        assert composed == freudenthal.op_n(x + y)


def test_generators_preserve_the_forms(rng, hurwitz_ring):
    x = sampling.random_jelement(rng, hurwitz_ring)
    for g in (freudenthal.op_n(x), freudenthal.op_nbar(x), freudenthal.op_J6(hurwitz_ring),
              freudenthal.op_scalar(hurwitz_ring, 2), freudenthal.op_weight(hurwitz_ring, Fraction(3, 2))):
        u, v = sampling.random_welement(rng, hurwitz_ring), sampling.random_welement(rng, hurwitz_ring)
        assert freudenthal.symplectic(g.apply(u), g.apply(v)) == g.similitude * freudenthal.symplectic(u, v)
        assert freudenthal.quartic(g.apply(u)) == g.similitude ** 2 * freudenthal.quartic(u)


def test_op_m_with_quaternion_matrix(rng, hurwitz_ring):
    g = freudenthal.op_m(hurwitz_ring, sampling.random_quaternion_matrix(rng, hurwitz_ring), 1)
    v = sampling.random_welement(rng, hurwitz_ring)
    assert freudenthal.quartic(g.apply(v)) == freudenthal.quartic(v)
    with pytest.raises(DomainError):
        freudenthal.op_m(hurwitz_ring, sampling.random_quaternion_matrix(rng, hurwitz_ring), 0)


def test_inverse_and_identity(rng, hurwitz_ring):
    g = sampling.random_word(rng, hurwitz_ring, length=2)
    assert g.compose(g.inverse(), verify=False) == freudenthal.identity_element(hurwitz_ring)


def test_non_group_matrix_is_rejected(hurwitz_ring):
    m = linalg.identity(32)
    m[0][1] = Fraction(1)
    with pytest.raises(InternalConsistencyError):
        GroupElement(hurwitz_ring, m, Fraction(1))


def _transvection_rows(ring, v):
    return [(e + v * freudenthal.symplectic(e, v)).coords() for e in freudenthal.basis(ring)]


def test_transvection_fixing_the_quick_vectors_is_rejected(hurwitz_ring):
    samples = freudenthal.quartic_samples(hurwitz_ring, config.QUARTIC_SAMPLES)
    v = freudenthal.from_coords(
        hurwitz_ring, linalg.nullspace([freudenthal.symplectic_functional(w) for w in samples])[0])
    rows = _transvection_rows(hurwitz_ring, v)

    g = GroupElement(hurwitz_ring, rows, Fraction(1), verify=False)
    g.verify_symplectic()
    g.verify_quartic(freudenthal.QUICK)
    with pytest.raises(InternalConsistencyError):
        g.verify_quartic(freudenthal.COMPLETE)
    with pytest.raises(InternalConsistencyError):
        GroupElement(hurwitz_ring, rows, Fraction(1))
    assert not g.in_group


def test_complete_check_accepts_a_generator_matrix(hurwitz_ring):
    j6 = freudenthal.op_J6(hurwitz_ring)
    g = GroupElement(hurwitz_ring, j6.matrix, j6.similitude)
    assert g.in_group
    assert g == j6


def test_membership_follows_construction(rng, hurwitz_ring):
    x = sampling.random_jelement(rng, hurwitz_ring)
    n = freudenthal.op_n(x)
    assert n.in_group
    assert freudenthal.identity_element(hurwitz_ring).in_group
    assert n.compose(freudenthal.op_J6(hurwitz_ring)).in_group
    assert n.inverse().in_group
    unchecked = GroupElement(hurwitz_ring, n.matrix, n.similitude, verify=False)
    assert not unchecked.in_group
    assert not unchecked.compose(n, verify=False).in_group


def test_unknown_quartic_check_mode(hurwitz_ring):
    with pytest.raises(UsageError):
        freudenthal.identity_element(hurwitz_ring).verify_quartic("sometimes")


def test_normalize_d1(rng, hurwitz_ring):
    for v in (sampling.random_rank_one(rng, hurwitz_ring),
              freudenthal.e_vector(hurwitz_ring),
              freudenthal.rank_one_from_jordan(jordan.diag(hurwitz_ring, 0, 0, 1)) * 3):
        result = freudenthal.normalize_d1(v)
        assert result.translate.d == 1
        assert result.group.apply(v) == result.translate
    with pytest.raises(PreconditionError):
        freudenthal.normalize_d1(freudenthal.e_vector(hurwitz_ring) + freudenthal.f_vector(hurwitz_ring))


def test_parse_welement(hurwitz_ring):
    v = freudenthal.parse_welement(hurwitz_ring, " ".join(["0"] * 31 + ["1"]))
    assert v == freudenthal.f_vector(hurwitz_ring)
    with pytest.raises(InvalidInputError):
        freudenthal.parse_welement(hurwitz_ring, "1 2 3")
