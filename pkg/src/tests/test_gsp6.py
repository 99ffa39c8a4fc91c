from fractions import Fraction

import pytest

from src.errors import DomainError, InvalidInputError, NotInImageError
from src.services import freudenthal, gsp6
from src.services.quat import TernaryForm
from src.utils import linalg, sampling


def test_iota_on_identity_and_j(hurwitz_ring):
    assert gsp6.iota(hurwitz_ring, gsp6.identity()) == freudenthal.identity_element(hurwitz_ring)
    assert gsp6.iota(hurwitz_ring, gsp6.j_matrix()) == freudenthal.op_J6(hurwitz_ring)


def test_iota_on_unipotents(rng, hurwitz_ring):
    for _ in range(3):
        u = sampling.random_symmetric(rng)
        expected = freudenthal.op_n(gsp6.symmetric_to_jordan(hurwitz_ring, u))
        assert gsp6.iota(hurwitz_ring, gsp6.unipotent(u)) == expected


def test_iota_on_levi(rng, hurwitz_ring):
    lam = Fraction(2, 3)
    m = sampling.random_invertible(rng, 2)
    g = gsp6.levi(lam, m)
    upper = [row[:3] for row in g.matrix[:3]]
    v = sampling.random_welement(rng, hurwitz_ring)
    assert gsp6.iota(hurwitz_ring, g).apply(v) == gsp6.levi_block_action(v, upper, m)


def test_iota_is_a_homomorphism(rng, hurwitz_ring):
    for _ in range(2):
        g, h = sampling.random_gsp6(rng), sampling.random_gsp6(rng)
        product = gsp6.iota(hurwitz_ring, g).compose(gsp6.iota(hurwitz_ring, h), verify=False)
        assert gsp6.iota(hurwitz_ring, g * h) == product


def test_embedding_roundtrip(rng, hurwitz_ring):
    v = sampling.random_welement(rng, hurwitz_ring)
    assert gsp6.project_w(gsp6.embed_w(v)) == v


def test_projection_off_the_image(hurwitz_ring):
    coeffs = [hurwitz_ring.zero()] * 20
    coeffs[0] = hurwitz_ring.basis(1)
    with pytest.raises(NotInImageError):
        gsp6.project_w(gsp6.Wedge3Element(hurwitz_ring, coeffs))


def test_nilpotent_logarithm(rng, hurwitz_ring):
    x = sampling.random_jelement(rng, hurwitz_ring, 2)
    assert gsp6.nilpotent_exp(gsp6.log_n_matrix(x)) == freudenthal.op_n(x).matrix


def test_levi_needs_invertible_data():
    with pytest.raises(DomainError):
        gsp6.levi(1, [[1, 0, 0], [0, 0, 0], [0, 0, 1]])
    with pytest.raises(DomainError):
        gsp6.levi(0, linalg.identity(3))
    with pytest.raises(DomainError):
        gsp6.unipotent([[0, 1, 0], [0, 0, 0], [0, 0, 0]])


def test_non_symplectic_matrix_is_rejected():
    m = linalg.identity(6)
    m[0][1] = Fraction(1)
    with pytest.raises(DomainError):
        gsp6.GSp6Element(m, 1)


@pytest.mark.parametrize("form", [
    TernaryForm(1, 1, 1, 0, 0, 0),
    TernaryForm(1, 1, 1, 1, 1, 1),
    TernaryForm(2, 3, 5, 1, 1, 1),
])
def test_f_o_action(rng, form):
    u = sampling.random_symmetric(rng)
    m = sampling.random_invertible(rng, 2)
    image = gsp6.f_o_action(form, u, Fraction(3, 2), m)
    assert image.a == 0
    assert image.b.is_zero()


def test_xi_indicator(identity_form):
    assert gsp6.xi_indicator(identity_form, 1, linalg.identity(3)) == 1
    assert gsp6.xi_indicator(identity_form, Fraction(1, 2), linalg.identity(3)) == 0
    assert gsp6.xi_indicator(identity_form, 1, [[1, 0, 0], [0, 2, 0], [0, 0, 2]]) == 1
    assert gsp6.xi_indicator(identity_form, 1, [[1, 0, 0], [0, 1, 0], [0, 0, 2]]) == 0


def test_xi_indicator_is_zero_off_the_support(identity_form):
    assert gsp6.xi_indicator(identity_form, 1, [[1, 0, 0], [0, 1, 0], [0, 0, 0]]) == 0
    assert gsp6.xi_indicator(identity_form, 1, [[1, 2, 0], [2, 4, 0], [0, 0, 1]]) == 0


def test_stabilizes_line(identity_form):
    assert gsp6.stabilizes_line(identity_form, gsp6.identity())
    assert gsp6.stabilizes_line(identity_form, gsp6.scalar(2))
    assert not gsp6.stabilizes_line(identity_form, gsp6.j_matrix())


def test_parse_gsp6():
    g = gsp6.parse_gsp6(" ".join(str(x) for row in linalg.identity(6) for x in row))
    assert g == gsp6.identity()
    with pytest.raises(InvalidInputError):
        gsp6.parse_gsp6("1 0 0")
