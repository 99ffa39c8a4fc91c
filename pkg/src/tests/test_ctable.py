import pytest

from src.errors import DomainError, PoleError
from src.services import ctable
from src.services.ctable import ZETA, ZETA_B, Affine, Factor, ZetaFactorProduct


def zetas(*c2):
    return [Factor(ZETA, Affine(2, c)) for c in c2]


def test_root_system():
    assert len(ctable.all_roots()) == 18
    assert len(ctable.positive_roots()) == 9
    assert sum(ctable.is_long(r) for r in ctable.positive_roots()) == 3
    assert len(set(ctable.weyl_group())) == 48


def test_lambda_s_from_the_modulus_character():
    assert ctable.lambda_from_delta() == (Affine(3, -15),) + ctable.LAMBDA_S
    assert str(Affine(1, -9)) == "s - 9/2"


@pytest.mark.parametrize("index", range(1, 9))
def test_c_functions_match_the_listed_products(index):
    assert ctable.c_factor(ctable.coset_roots(index)) == ctable.listed_c_function(index)


def test_coset_lengths():
    assert [len(ctable.coset_roots(i)) for i in range(1, 9)] == [0, 1, 2, 3, 3, 4, 5, 6]
    assert ctable.length(ctable.longest_coset_element()) == 6
    with pytest.raises(DomainError):
        ctable.coset_roots(9)


def test_c_function_of_a_non_inversion_set_is_rejected():
    with pytest.raises(DomainError):
        ctable.c_factor([(-1, -1, 0)])


def test_gindikin_karpelevich_over_reduced_words():
    c8 = ctable.c_factor(ctable.coset_roots(8))
    words = ctable.reduced_words(ctable.longest_coset_element())
    assert len(words) >= 2
    for word in words:
        assert ctable.word_element(word) == ctable.longest_coset_element()
        assert ctable.c_factor_via_word(word) == c8


def test_c8_expansions():
    c8 = ctable.c_factor(ctable.coset_roots(8))
    assert c8.symbols() == {ZETA, ZETA_B}
    assert ctable.expand_place(c8, "split") == ZetaFactorProduct.build(zetas(-10, -14, -18), zetas(0, -4, -8))
    assert ctable.expand_place(c8, "ramified") == ZetaFactorProduct.build(zetas(-10, -14, -18), zetas(0, -8, -16))
    arch = ctable.expand_place(c8, "arch")
    assert arch.d_power == (0, -3)
    with pytest.raises(DomainError):
        ctable.expand_place(c8, "padic")


def test_first_coset_has_trivial_c_function():
    assert ctable.c_factor(ctable.coset_roots(1)).is_one()
    assert str(ctable.ONE) == "1"


def test_arch_expansion_matches_closed_form():
    c8 = ctable.c_factor(ctable.coset_roots(8))
    s = complex(3.3, 1.7)
    value = ctable.numeric_local(c8, "arch", s, [2])
    assert abs(value - ctable.arch_c_closed_form([2], s)) < 1e-9 * max(1, abs(value))


@pytest.mark.parametrize("primes", [[2], [3], [5], [2, 3, 5]])
def test_functional_equation_constant(primes):
    for s in (complex(2.3, 0.7), complex(2.5, 3.1), complex(1.7, 5.2)):
        values = ctable.functional_equation_constant(primes, s)
        assert abs(values.constant - 1) < 1e-9
        assert abs(values.ratio - 1) < 1e-9


def test_functional_equation_domain():
    with pytest.raises(DomainError):
        ctable.functional_equation_constant([], complex(2.3, 0.7))
    with pytest.raises(DomainError):
        ctable.functional_equation_constant([2, 3], complex(2.3, 0.7))
    with pytest.raises(DomainError):
        ctable.functional_equation_constant([4], complex(2.3, 0.7))
    with pytest.raises(DomainError):
        ctable.functional_equation_constant([2], complex(2, 0))


def test_poles_are_reported():
    with pytest.raises(PoleError):
        ctable.gamma_r(0)
    with pytest.raises(PoleError):
        ctable.riemann_zeta(1)
    with pytest.raises(PoleError):
        ctable.zeta_p(2, 0)


def test_normalization_factors():
    factors = ctable.normalization_factors(2)
    assert factors.weight == 4
    assert factors.eisenstein["ramified"] == ZetaFactorProduct.build(zetas(-8))
    assert factors.section["split"] == ZetaFactorProduct.build(zetas(0, -4, -8))
    with pytest.raises(DomainError):
        ctable.normalization_factors(-1)


def test_pairing_table():
    table = ctable.pairing_table()
    assert len(table) == 9
    assert table[(2, 0, 0)] == Affine(1, -9)
    assert table[(0, 0, 2)] == Affine(1, -1)
    assert table[(1, 1, 0)] == Affine(2, -14)
    assert table[(1, -1, 0)] == Affine(0, -4)
