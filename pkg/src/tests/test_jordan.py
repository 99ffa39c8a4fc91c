import pytest

from src.errors import InvalidInputError
from src.services import jordan
from src.utils import sampling


def test_identity_and_ranks(hurwitz_ring):
    one = jordan.identity(hurwitz_ring)
    assert jordan.jnorm(one) == 1
    assert jordan.jtrace(one) == 3
    assert jordan.sharp(one) == one
    assert jordan.jrank(one) == 3
    assert jordan.jrank(jordan.diag(hurwitz_ring, 1, 1, 0)) == 2
    assert jordan.jrank(jordan.diag(hurwitz_ring, 0, 0, 5)) == 1
    assert jordan.jrank(jordan.zero(hurwitz_ring)) == 0


def test_sharp_identities(rng):
    for _ in range(30):
        ring = sampling.random_ring(rng)
        h = sampling.random_jelement(rng, ring)
        n = jordan.jnorm(h)
        product = jordan.qmat_mul(ring, jordan.to_matrix(h), jordan.to_matrix(jordan.sharp(h)))
        assert jordan.qmat_equal(product, jordan.qmat_scalar(ring, n))
        assert jordan.sharp(jordan.sharp(h)) == h * n


def test_trilinear_and_norm_of_sum(rng, hurwitz_ring):
    for _ in range(30):
        x, y, z = (sampling.random_jelement(rng, hurwitz_ring) for _ in range(3))
        assert jordan.trace_pair(jordan.cross(x, y), z) == jordan.trilinear(x, y, z)
        assert jordan.trilinear(x, x, x) == 6 * jordan.jnorm(x)
        assert jordan.jnorm(x + y) == (jordan.jnorm(x) + jordan.trace_pair(jordan.sharp(x), y)
                                       + jordan.trace_pair(x, jordan.sharp(y)) + jordan.jnorm(y))


def test_matrix_roundtrip(rng, hurwitz_ring):
    h = sampling.random_jelement(rng, hurwitz_ring)
    assert jordan.from_matrix(hurwitz_ring, jordan.to_matrix(h)) == h
    m = jordan.to_matrix(h)
    m[0][1] = m[0][1] + hurwitz_ring.basis(1)
    with pytest.raises(InvalidInputError):
        jordan.from_matrix(hurwitz_ring, m)


def test_dual_coordinates(rng, hurwitz_ring):
    x = sampling.random_jelement(rng, hurwitz_ring)
    dual = jordan.dual_coords(x)
    assert dual == [jordan.trace_pair(x, e) for e in jordan.basis(hurwitz_ring)]


def test_parse_jelement(hurwitz_ring):
    h = jordan.parse_jelement(hurwitz_ring, " ".join(["1"] * 15))
    assert h.c == (1, 1, 1)
    with pytest.raises(InvalidInputError):
        jordan.parse_jelement(hurwitz_ring, "1 2 3")
