import pytest

from src.errors import DomainError, PreconditionError
from src.services import freudenthal, hermspace, jordan
from src.services.hermspace import PointH
from src.services.quat import TernaryForm
from src.utils import sampling
from src.utils.scalars import I


def test_i_point_is_fixed_by_the_stabilizer(rng, hamilton_ring):
    point = PointH(hermspace.i_point(hamilton_ring))
    k = freudenthal.op_m(hamilton_ring, hermspace.cayley_orthogonal(sampling.random_skew(rng)), 1)
    assert hermspace.act_on_h(k, point).z == point.z
    assert hermspace.act_on_h(freudenthal.op_J6(hamilton_ring), point).z == point.z


def test_point_needs_positive_imaginary_part(hamilton_ring):
    with pytest.raises(DomainError):
        PointH(jordan.identity(hamilton_ring) * (-I))
    with pytest.raises(DomainError):
        PointH(jordan.zero(hamilton_ring))


def test_rank_one_norm(rng, hamilton_ring):
    for _ in range(10):
        hermspace.check_rk1_norm(sampling.random_rank_one(rng, hamilton_ring))
    e, f = freudenthal.e_vector(hamilton_ring), freudenthal.f_vector(hamilton_ring)
    with pytest.raises(PreconditionError):
        hermspace.check_rk1_norm(e + f)


def test_imaginary_norm_identity(rng, hamilton_ring):
    hermspace.im_norm_identity(hermspace.i_point(hamilton_ring))
    for _ in range(10):
        hermspace.im_norm_identity(sampling.random_cjelement(rng, hamilton_ring))


def test_cocycle(rng, hamilton_ring):
    base = PointH(hermspace.i_point(hamilton_ring))
    for _ in range(3):
        g = sampling.random_point_group(rng, hamilton_ring, 1)
        h = sampling.random_point_group(rng, hamilton_ring, 1)
        point = hermspace.act_on_h(sampling.random_point_group(rng, hamilton_ring, 1), base)
        hermspace.cocycle_check(g, h, point)


@pytest.mark.parametrize("form", [TernaryForm(1, 1, 1, 0, 0, 0), TernaryForm(2, 3, 5, 1, 1, 1)])
def test_f_o_equation(rng, form):
    for _ in range(2):
        hermspace.f_o_eqn_check(form, sampling.random_parabolic(rng))


def test_f_o_equation_needs_a_parabolic_element(identity_form):
    from src.services import gsp6

    with pytest.raises(PreconditionError):
        hermspace.f_o_eqn_check(identity_form, gsp6.j_matrix())


def test_dphi_identity(rng, hamilton_ring):
    v = hermspace.dphi_identity_check(freudenthal.identity_element(hamilton_ring))
    assert v.a == 1
    for _ in range(3):
        hermspace.dphi_identity_check(sampling.random_point_group(rng, hamilton_ring, 2))


def test_phi_equivariance(rng, hamilton_ring):
    k = freudenthal.op_m(hamilton_ring, hermspace.cayley_orthogonal(sampling.random_skew(rng)), 1)
    k = k.compose(freudenthal.op_J6(hamilton_ring), verify=False)
    for _ in range(3):
        hermspace.phi_equivariance_check(sampling.random_welement(rng, hamilton_ring), k)
    with pytest.raises(PreconditionError):
        hermspace.phi_equivariance_check(freudenthal.e_vector(hamilton_ring),
                                         freudenthal.op_scalar(hamilton_ring, 2).compose(
                                             freudenthal.op_n(jordan.identity(hamilton_ring))))


def test_cayley_needs_skew_input():
    with pytest.raises(DomainError):
        hermspace.cayley_orthogonal([[1, 0, 0], [0, 0, 0], [0, 0, 0]])
