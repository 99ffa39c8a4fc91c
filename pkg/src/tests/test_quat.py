from fractions import Fraction

import pytest

from src.errors import DomainError, InvalidInputError, UsageError
from src.services import quat
from src.services.quat import TernaryForm, good_basis_table, ring_from_form
from src.utils import sampling


def test_hurwitz_table_matches_good_basis_laws(hurwitz_form, hurwitz_ring):
    assert [[list(e) for e in row] for row in hurwitz_ring.table] == good_basis_table(hurwitz_form)
    v1 = hurwitz_ring.basis(1)
    assert quat.mul(v1, v1) == hurwitz_ring.element([-1, 1, 0, 0])


def test_clifford_table_matches_good_basis_laws_on_random_forms(rng):
    for _ in range(20):
        form = sampling.random_form(rng)
        table = ring_from_form(form).table
        assert [[list(e) for e in row] for row in table] == good_basis_table(form)


def test_hamilton_units(hamilton_ring):
    v1, v2, v3 = hamilton_ring.basis_vectors()
    minus_one = hamilton_ring.scalar(-1)
    assert quat.mul(v1, v1) == minus_one
    assert quat.mul(v2, v3) == -v1
    assert quat.mul(v3, v2) == v1
    assert quat.norm(v1) == 1
    assert quat.trace(v1) == 0


def test_trace_norm_and_conjugate(rng, hurwitz_ring):
    for _ in range(20):
        x = sampling.random_quaternion(rng, hurwitz_ring)
        y = sampling.random_quaternion(rng, hurwitz_ring)
        assert quat.mul(x, quat.conj(x)) == hurwitz_ring.scalar(quat.norm(x))
        assert quat.norm(quat.mul(x, y)) == quat.norm(x) * quat.norm(y)
        assert quat.conj(quat.mul(x, y)) == quat.mul(quat.conj(y), quat.conj(x))
        assert quat.trace(quat.imaginary_part(x)) == 0


def test_left_multiplication_has_trace_twice_the_trace(rng):
    for _ in range(10):
        ring = sampling.random_ring(rng)
        x = sampling.random_quaternion(rng, ring)
        m = quat.left_mult_matrix(x)
        assert sum(m[i][i] for i in range(4)) == 2 * quat.trace(x)


def test_inverse(rng, hurwitz_ring):
    x = hurwitz_ring.element([1, 2, Fraction(1, 3), -1])
    assert quat.mul(quat.inverse(x), x) == hurwitz_ring.one()
    with pytest.raises(DomainError):
        quat.inverse(hurwitz_ring.zero())


def test_form_parsing_and_determinant(hurwitz_form):
    assert TernaryForm.parse("1 1 1 1 1 1") == hurwitz_form
    assert hurwitz_form.det() == Fraction(1, 2)
    assert hurwitz_form.is_positive_definite()
    assert not TernaryForm(1, -1, 1, 0, 0, 0).is_positive_definite()
    with pytest.raises(InvalidInputError):
        TernaryForm.parse("1 1 1 1 1")
    with pytest.raises(InvalidInputError):
        TernaryForm.parse("1 1 1 1 1 x")


def test_mixing_rings_is_rejected(hurwitz_ring, hamilton_ring):
    with pytest.raises(UsageError):
        hurwitz_ring.one() + hamilton_ring.one()


def test_quaternion_parsing(hurwitz_ring):
    assert quat.parse_quaternion(hurwitz_ring, "1 -2 1/3 0") == hurwitz_ring.element([1, -2, Fraction(1, 3), 0])
    with pytest.raises(InvalidInputError):
        quat.parse_quaternion(hurwitz_ring, "1 2 3")
