import pytest

from cobcalc.core_algebra import ZZ, TRING, TEPS, b_ring
from cobcalc.chow_models import (
    VarietySpec,
    VirtualSplitBundle,
    build_model,
    cm_add,
)
from cobcalc.symmfunc import (
    q_alpha,
    lambda_coeffs,
    m_product,
    total_P,
    total_P_deformed,
    cf_class,
    pi_series,
    b_image_for,
)

B = b_ring(ZZ)


def test_q_alpha_oracles():
    assert q_alpha(()) == {(): 1}
    assert q_alpha((1,)) == {(1,): 1}
    assert q_alpha((2,)) == {(1, 1): 1, (2,): -2}
    assert q_alpha((1, 1)) == {(2,): 1}
    assert q_alpha((2, 1)) == {(2, 1): 1, (3,): -3}
    assert q_alpha((1, 1, 1)) == {(3,): 1}


def test_q_alpha_rejects_non_partition():
    with pytest.raises(ValueError):
        q_alpha((1, 2))
    with pytest.raises(ValueError):
        q_alpha((0,))


def test_m_product_oracle():
    assert m_product((1,), (1,)) == {(2,): 1, (1, 1): 2}
    assert m_product((2,), (1,)) == {(3,): 1, (2, 1): 1}
    assert m_product((), (2, 1)) == {(2, 1): 1}


def test_lambda_oracles():
    assert lambda_coeffs(()) == {(): 1}
    assert lambda_coeffs((1,)) == {(1,): -1}
    assert lambda_coeffs((2,)) == {(2,): -1}
    assert lambda_coeffs((1, 1)) == {(2,): 1, (1, 1): 1}
    assert lambda_coeffs((3,)) == {(3,): -1}  # single rows stay single rows


def test_pi_series_images():
    p = pi_series(B, 4)
    assert p.coefficient((0,)) == B.one()
    assert p.coefficient((2,)) == B.gen(2)
    q = pi_series(TRING, 4)
    assert q.coefficient((1,)) == {1: -1}  # b_1 -> -t
    assert q.coefficient((2,)) == {2: 1}
    r = pi_series(TEPS, 4)
    assert r.coefficient((3,)) == {(3, 1): 1}
    with pytest.raises(ValueError):
        b_image_for(ZZ)


def test_pi_inverse_square_series():
    # 1/pi(y)^2 = 1 - 2 b1 y + (3 b1^2 - 2 b2) y^2 - ...
    p = pi_series(B, 3)
    inv2 = p.mul(p).inverse()
    assert inv2.coefficient((1,)) == B.int_scale(B.gen(1), -2)
    expected = B.add(B.int_scale(B.mul(B.gen(1), B.gen(1)), 3), B.int_scale(B.gen(2), -2))
    assert inv2.coefficient((2,)) == expected


def test_total_P_neg_tangent_P1():
    m = build_model(VarietySpec.multiproj([1]))
    P = total_P(m.tangent().neg(), B)
    assert P == {(0,): B.one(), (1,): B.int_scale(B.gen(1), -2)}


def test_total_P_multiplicative_inverse():
    m = build_model(VarietySpec.multiproj([2, 1]))
    h0, h1 = m.gen_element(0), m.gen_element(1)
    E = VirtualSplitBundle(
        m, plus_lines=[h0, cm_add(ZZ, h0, h1)], minus_lines=[h1], plus_trivial=1
    )
    prod = m.mul(B, total_P(E, B), total_P(E.neg(), B))
    assert prod == m.one(B)


def test_total_P_deformed_point_is_pi():
    pt = build_model(VarietySpec.point())
    E = VirtualSplitBundle(pt, plus_trivial=1)
    d = total_P_deformed(E, B, 3)
    assert d[0] == pt.one(B)
    assert d[2] == {(): B.gen(2)}
    dm = total_P_deformed(E.neg(), B, 2)
    assert dm[1] == {(): B.neg(B.gen(1))}  # 1/pi(y) starts 1 - b1 y


def test_total_P_deformed_specializes_to_tensor():
    # evaluating the y-deformation at y = c1(O(bh)) is tensoring by that line
    m = build_model(VarietySpec.multiproj([3]))
    h = m.gen_element(0)
    E = VirtualSplitBundle(m, plus_lines=[h])
    d = total_P_deformed(E, B, 3)
    two_h = {(1,): 2}
    acc = {}
    power = m.one(ZZ)
    for k in range(4):
        if k in d:
            acc = cm_add(B, acc, m.mul(B, d[k], {e: B.from_int(c) for e, c in power.items()}))
        power = m.mul(ZZ, power, two_h)
    three_h = cm_add(ZZ, h, two_h)
    direct = total_P(VirtualSplitBundle(m, plus_lines=[three_h]), B)
    assert acc == direct


def test_cf_class_oracles():
    p2 = build_model(VarietySpec.multiproj([2]))
    assert cf_class(p2.tangent().neg(), (2,)) == {(2,): -3}
    p3 = build_model(VarietySpec.multiproj([3]))
    assert cf_class(p3.tangent().neg(), (3,)) == {(3,): -4}
    assert cf_class(p3.tangent().neg(), (1, 1, 1)) == {(3,): -20}
    assert cf_class(p3.tangent().neg(), ()) == p3.one(ZZ)


def test_cf_class_on_honest_bundle():
    # O(1) + O(2) on P^2: c_(1) = 3h, c_(1,1) = e_2 = 2h^2, c_(2) = 5h^2
    m = build_model(VarietySpec.multiproj([2]))
    h = m.gen_element(0)
    E = VirtualSplitBundle(m, plus_lines=[h, {(1,): 2}])
    assert cf_class(E, (1,)) == {(1,): 3}
    assert cf_class(E, (1, 1)) == {(2,): 2}
    assert cf_class(E, (2,)) == {(2,): 5}


def test_lambda_identity_against_direct_classes():
    # c_alpha(-E) computed directly must match the lambda expansion in
    # classes of E
    m = build_model(VarietySpec.multiproj([2, 1]))
    h0, h1 = m.gen_element(0), m.gen_element(1)
    E = VirtualSplitBundle(m, plus_lines=[h0, h1, cm_add(ZZ, h0, h1)])
    for alpha in [(1,), (2,), (1, 1), (2, 1), (3,), (1, 1, 1)]:
        direct = cf_class(E.neg(), alpha)
        expanded = {}
        for beta, nb in lambda_coeffs(alpha).items():
            term = cf_class(E, beta)
            expanded = cm_add(ZZ, expanded, {e: nb * c for e, c in term.items()})
        assert direct == expanded, alpha
