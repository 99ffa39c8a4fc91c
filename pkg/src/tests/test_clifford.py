from fractions import Fraction

import pytest

from src.errors import DomainError, InvalidInputError, MissingCoefficientClass, PreconditionError
from src.services import clifford, jordan
from src.services.clifford import CoefficientTable, GoodBasedOrder
from src.services.quat import TernaryForm, ring_from_form
from src.utils import linalg, sampling
from src.utils.read_file import read_coefficient_table, read_structure_constants

IDENTITY = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_discriminant_and_maximality(hurwitz_form, identity_form):
    assert clifford.reduced_discriminant(hurwitz_form) == 2
    assert clifford.is_maximal(hurwitz_form)
    assert clifford.reduced_discriminant(identity_form) == 4
    assert not clifford.is_maximal(identity_form)
    assert clifford.reduced_discriminant(TernaryForm(1, 1, 2, 0, 0, 0)) == 8
    assert not clifford.is_maximal(TernaryForm(1, 1, 2, 0, 0, 0))


def test_maximality_needs_a_definite_form():
    with pytest.raises(DomainError):
        clifford.is_maximal(TernaryForm(1, 1, -1, 0, 0, 0))


def test_identity_form_has_an_index_two_superorder(identity_form, hurwitz_form):
    assert clifford.find_superorder(identity_form, 2) is not None
    assert clifford.find_superorder(hurwitz_form, 2) is None


@pytest.mark.parametrize("form", [
    TernaryForm(1, 1, 1, 0, 0, 0),
    TernaryForm(1, 1, 1, 1, 1, 1),
    TernaryForm(0, 0, 0, 0, 0, 0),
    TernaryForm(2, 3, 5, 1, 1, 1),
])
def test_a_matrix_is_rank_one(form):
    a = clifford.a_matrix(GoodBasedOrder.from_form(form))
    assert jordan.sharp(a).is_zero()
    assert a.c == (form.a, form.b, form.c)


def test_good_basis_shift(hurwitz_ring):
    assert clifford.good_basis_shift(clifford.structure_constants(hurwitz_ring, hurwitz_ring.basis_vectors())) == (0, 0, 0)
    shifted = [v + hurwitz_ring.scalar(x) for v, x in zip(hurwitz_ring.basis_vectors(), (1, 2, 3))]
    assert clifford.good_basis_shift(clifford.structure_constants(hurwitz_ring, shifted)) == (1, 2, 3)


def test_good_basis_shift_rejects_asymmetric_constants(hurwitz_ring):
    sc = clifford.structure_constants(hurwitz_ring, hurwitz_ring.basis_vectors())
    table = [[list(e) for e in row] for row in sc.table]
    table[1][2][2] += 1
    broken = clifford.StructureConstants(table=tuple(tuple(tuple(e) for e in row) for row in table))
    with pytest.raises(InvalidInputError):
        clifford.good_basis_shift(broken)


def test_form_roundtrip(rng):
    for _ in range(25):
        form = sampling.random_form(rng)
        ring = ring_from_form(form)
        assert clifford.form_from_good_basis(ring, ring.basis_vectors()) == form


def test_suborder_examples(identity_form):
    assert clifford.suborder_test(identity_form, [[1, 0, 0], [0, 2, 0], [0, 0, 2]])
    assert clifford.suborder_form(identity_form, [[1, 0, 0], [0, 2, 0], [0, 0, 2]]) == TernaryForm(4, 1, 1, 0, 0, 0)
    assert not clifford.suborder_test(identity_form, [[1, 0, 0], [0, 1, 0], [0, 0, 2]])
    assert clifford.suborder_test(identity_form, IDENTITY)
    assert clifford.suborder_form(identity_form, IDENTITY) == identity_form
    with pytest.raises(DomainError):
        clifford.suborder_test(identity_form, [[1, 0, 0], [0, 0, 0], [0, 0, 1]])


def test_hnf_counts():
    assert clifford.hnf_matrices(1) == [IDENTITY]
    assert len(clifford.hnf_matrices(2)) == 7
    assert all(linalg.det3(m) == 4 for m in clifford.hnf_matrices(4))


@pytest.mark.parametrize("form", [
    TernaryForm(1, 1, 1, 0, 0, 0),
    TernaryForm(1, 1, 1, 1, 1, 1),
    TernaryForm(2, 3, 5, 1, 1, 1),
])
def test_suborder_criterion_matches_closure(form):
    ring = ring_from_form(form)
    for index in (1, 2, 3, 4):
        for m in clifford.hnf_matrices(index):
            closed = clifford.lattice_is_closed(ring, clifford.sublattice_basis(form, m))
            assert clifford.suborder_test(form, m) == closed
            if closed:
                t2 = clifford.suborder_form(form, m)
                assert clifford.reduced_discriminant(t2) == index * clifford.reduced_discriminant(form)


def test_enumerate_suborders(identity_form):
    assert clifford.enumerate_suborders(identity_form, 1) == [(IDENTITY, identity_form)]
    found = clifford.enumerate_suborders(identity_form, 2)
    assert all(clifford.suborder_test(identity_form, m) for m, _ in found)
    with pytest.raises(DomainError):
        clifford.enumerate_suborders(identity_form, 0)


def test_scaling_law(hurwitz_ring, hurwitz_form):
    assert clifford.scaled_order_form(hurwitz_ring, hurwitz_ring.basis_vectors(), 3) == hurwitz_form.scaled(3)


def test_rank_one_completion(rng):
    for _ in range(10):
        form = sampling.random_form(rng)
        ring = ring_from_form(form)
        a = clifford.a_matrix(GoodBasedOrder(ring, form))
        moved = [v + ring.scalar(rng.randint(-2, 2)) for v in ring.basis_vectors()]
        assert clifford.rank_one_completion(ring, moved) == a


def test_imaginary_parts_determine(hurwitz_ring, hurwitz_form):
    a = clifford.a_matrix(GoodBasedOrder(hurwitz_ring, hurwitz_form))
    completed = clifford.rank_one_completion(hurwitz_ring, hurwitz_ring.basis_vectors())
    assert clifford.imaginary_parts_determine(a, completed)
    assert clifford.imaginary_parts_determine(a, a * 2)
    assert clifford.imaginary_parts_determine(a * 2, a)


def test_imaginary_parts_determine_needs_spanning_rank_one(hurwitz_ring, hurwitz_form):
    a = clifford.a_matrix(GoodBasedOrder(hurwitz_ring, hurwitz_form))
    with pytest.raises(PreconditionError):
        clifford.imaginary_parts_determine(a, jordan.zero(hurwitz_ring))
    with pytest.raises(PreconditionError):
        clifford.imaginary_parts_determine(jordan.diag(hurwitz_ring, 1, 0, 0), a)


def test_forms_equivalent(rng):
    form = TernaryForm(2, 3, 5, 1, 1, 1)
    k = sampling.random_sl3(rng)
    moved = clifford.suborder_form(form, k)
    assert clifford.forms_equivalent(form, moved) is not None
    assert clifford.canonical_form(form) == clifford.canonical_form(moved)
    assert clifford.forms_equivalent(form, TernaryForm(1, 1, 1, 0, 0, 0)) is None


def test_dirichlet_single_term(identity_form):
    table = CoefficientTable({identity_form: 1})
    assert clifford.dirichlet_coefficients(identity_form, 4, table, 1) == [(1, 1)]


def test_dirichlet_missing_class(hurwitz_form):
    table = CoefficientTable({hurwitz_form: 1})
    with pytest.raises(MissingCoefficientClass):
        clifford.dirichlet_coefficients(hurwitz_form, 4, table, 2)


def test_dirichlet_matches_double_loop(hurwitz_form):
    classes = clifford.required_classes(hurwitz_form, 4)
    table = CoefficientTable({t: k + 1 for k, t in enumerate(classes)})
    weight = 6
    expected = {n: Fraction(0) for n in range(1, 5)}
    for lam in range(1, 5):
        for index in range(1, 4 // lam + 1):
            for m in clifford.hnf_matrices(index):
                if clifford.suborder_test(hurwitz_form, m):
                    t = clifford.suborder_form(hurwitz_form, m).scaled(lam)
                    expected[lam * index] += table.lookup(t) * Fraction(index) ** (weight - 3)
    assert clifford.dirichlet_coefficients(hurwitz_form, weight, table, 4) == sorted(expected.items())


def test_coefficient_table_conflicts(identity_form):
    table = CoefficientTable({identity_form: 1})
    table.add(identity_form, 1)
    with pytest.raises(InvalidInputError):
        table.add(identity_form, 2)


def test_read_coefficient_table(tmp_path, identity_form):
    path = tmp_path / "coeffs.tsv"
    path.write_text("# a b c d e f value\n1 1 1 0 0 0 3/2\n1 1 1 1 1 1 -1\n")
    table = read_coefficient_table(path)
    assert len(table) == 2
    assert table.lookup(identity_form) == Fraction(3, 2)


def test_read_coefficient_table_errors(tmp_path):
    bad = tmp_path / "bad.tsv"
    bad.write_text("1 1 1 0 0 x 1\n")
    with pytest.raises(InvalidInputError):
        read_coefficient_table(bad)
    short = tmp_path / "short.tsv"
    short.write_text("1 1 1 0 0 1\n")
    with pytest.raises(InvalidInputError):
        read_coefficient_table(short)
    with pytest.raises(InvalidInputError):
        read_coefficient_table(tmp_path / "missing.tsv")


def test_read_structure_constants(tmp_path, hurwitz_ring):
    shifted = [v + hurwitz_ring.scalar(x) for v, x in zip(hurwitz_ring.basis_vectors(), (1, 0, -2))]
    sc = clifford.structure_constants(hurwitz_ring, shifted)
    rows = [f"{i} {j} " + " ".join(str(x) for x in sc.table[i - 1][j - 1]) for i in (1, 2, 3) for j in (1, 2, 3)]
    path = tmp_path / "sc.txt"
    path.write_text("\n".join(rows) + "\n")
    assert clifford.good_basis_shift(read_structure_constants(path)) == (1, 0, -2)
