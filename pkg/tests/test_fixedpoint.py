import pytest

from cobcalc.chow_models import VarietySpec, VirtualSplitBundle, build_model, tangent_bundle
from cobcalc.fixedpoint import (
    FixedComponent,
    MuTwoActionModel,
    builtin_action,
    verify_L2_relations,
    verify_additive,
    verify_all,
    verify_decomposable,
    verify_euler,
    verify_ks,
    verify_lmod2,
    verify_trivial_normal,
)


def pn(n):
    return VarietySpec.multiproj([n])


def by_id(report, cid):
    return {c.id: c for c in report.checks}[cid]


def test_component_validation():
    with pytest.raises(ValueError):
        FixedComponent.from_lines(VarietySpec.disjoint([pn(1), pn(1)]), 1, [], 1)
    with pytest.raises(ValueError):
        FixedComponent.from_lines(pn(1), -1, [])
    # rank != codim
    with pytest.raises(ValueError):
        FixedComponent.from_lines(pn(1), 2, [[1]])
    # wrong vector length
    with pytest.raises(ValueError):
        FixedComponent.from_lines(pn(1), 1, [[1, 0]])
    # more than one subtracted trivial summand
    model = build_model(pn(2))
    bad = VirtualSplitBundle(model, [model.gen_element(0)] * 4, (), 0, 2)
    with pytest.raises(ValueError):
        FixedComponent(pn(2), 2, bad)


def test_action_validation():
    comp = FixedComponent.from_lines(pn(1), 1, [[1]])
    with pytest.raises(ValueError):
        MuTwoActionModel(pn(3), [comp])
    act = MuTwoActionModel(pn(2), [comp])
    assert act.dim == 2 and act.fix_dim == 1
    free = MuTwoActionModel(VarietySpec.disjoint([pn(1), pn(1)]), [])
    assert free.fix_dim == -1


def test_builtin_validation():
    with pytest.raises(ValueError):
        builtin_action("linear_pn", n=2)
    with pytest.raises(ValueError):
        builtin_action("linear_pn", n=2, a=2)
    with pytest.raises(ValueError):
        builtin_action("factorwise_p1n", n=0)
    with pytest.raises(ValueError):
        builtin_action("swap_square")
    with pytest.raises(ValueError):
        builtin_action("no_such_action", n=1)


def test_action_json_round_trip():
    act = builtin_action("linear_pn", n=3, a=1)
    blob = act.to_json()
    back = MuTwoActionModel.from_json(blob)
    assert back.to_json() == blob
    # the swap action needs the subtracted-trivial extension field
    sw = builtin_action("swap_square", spec=pn(2))
    blob = sw.to_json()
    assert blob["components"][0]["normal_minus_trivial_rank"] == 1
    back = MuTwoActionModel.from_json(blob)
    assert back.to_json() == blob
    assert verify_euler(back).ok


def test_swap_normal_is_tangent():
    sw = builtin_action("swap_square", spec=pn(2))
    comp = sw.components[0]
    assert comp.codim == 2
    assert comp.normal.rank == 2
    tan = tangent_bundle(pn(2))
    assert comp.normal.plus_lines == tan.plus_lines
    assert comp.normal.minus_trivial == tan.minus_trivial == 1


def test_l2_line_involution():
    rep = verify_L2_relations(builtin_action("linear_pn", n=1, a=0))
    assert rep.ok
    cls = by_id(rep, "l2:class")
    assert cls.lhs == "-4*b1" and cls.rhs == "-2*b1"
    assert by_id(rep, "l2:route:0").status == "pass"
    assert by_id(rep, "l2:twist:1").lhs == "2"


def test_lmod2_line_involution_exact():
    rep = verify_lmod2(builtin_action("linear_pn", n=1, a=0))
    assert rep.ok
    # the corrected twist-0 class reproduces the ambient class on the nose
    assert by_id(rep, "lmod2:class").lhs == "-2*b1"
    assert by_id(rep, "lmod2:int:1").lhs == "-1"


def test_lmod2_order_guard():
    act = builtin_action("linear_pn", n=2, a=0)
    with pytest.raises(ValueError):
        verify_lmod2(act, order=4)
    assert verify_lmod2(act, order=6).ok


def test_ks_polynomial_example():
    # integral of c_1^2 over the plane is 9; the twisted fixed-locus
    # integral reproduces it exactly here, and mod 2 in general
    act = builtin_action("linear_pn", n=2, a=0)
    rep = verify_ks(act, alphas=(), f={(2,): 1})
    assert rep.ok
    chk = by_id(rep, "ks:poly")
    assert chk.lhs == 9 and chk.rhs == 9


def test_ks_alpha_guard():
    act = builtin_action("linear_pn", n=2, a=0)
    with pytest.raises(ValueError):
        verify_ks(act, alphas=[(5,)])


def test_additive_mod4_line():
    rep = verify_additive(builtin_action("linear_pn", n=1, a=0))
    assert rep.ok
    chk = by_id(rep, "additive:mod4:1")
    assert chk.lhs == -2 and chk.rhs == -2
    assert by_id(rep, "additive:twist:1").lhs == 2


def test_additive_rejects_points():
    act = MuTwoActionModel(VarietySpec.point(), [])
    with pytest.raises(ValueError):
        verify_additive(act)


def test_trivial_normal_hypothesis():
    # odd normal data: the hypothesis is reported as not met, nothing fails
    rep = verify_trivial_normal(builtin_action("linear_pn", n=2, a=0))
    assert rep.ok
    assert by_id(rep, "trivial-normal:hypothesis").status == "hypothesis-not-met"
    assert len(rep.checks) == 1
    # even normal data on both components
    rep = verify_trivial_normal(builtin_action("linear_pn", n=3, a=1))
    assert rep.ok
    assert by_id(rep, "trivial-normal:hypothesis").status == "pass"
    assert by_id(rep, "trivial-normal:ambient:(2,1)").lhs == 20
    assert by_id(rep, "trivial-normal:fix:1:(1)").lhs == -4


def test_trivial_normal_factorwise():
    rep = verify_trivial_normal(builtin_action("factorwise_p1n", n=2))
    assert rep.ok
    assert by_id(rep, "trivial-normal:hypothesis").status == "pass"
    # 4 fixed points, each contributing degree one
    assert by_id(rep, "trivial-normal:fix:0:()").lhs == 4


def test_euler_small_fix():
    rep = verify_euler(builtin_action("factorwise_p1n", n=3))
    assert rep.ok
    assert by_id(rep, "euler:mod4").status == "pass"
    chk = by_id(rep, "euler:small-fix")
    assert chk.status == "pass" and chk.lhs == 8


def test_decomposable_small_fix():
    rep = verify_decomposable(builtin_action("factorwise_p1n", n=3))
    assert rep.ok
    assert by_id(rep, "decomposable:small-fix").status == "pass"
    rep = verify_decomposable(builtin_action("linear_pn", n=2, a=1))
    assert by_id(rep, "decomposable:small-fix").status == "hypothesis-not-met"


def test_free_action_disjoint_double():
    p1 = pn(1)
    free = MuTwoActionModel(VarietySpec.disjoint([p1, p1]), [])
    for fn in (verify_L2_relations, verify_lmod2, verify_euler, verify_ks,
               verify_trivial_normal, verify_additive, verify_decomposable):
        assert fn(free).ok
    rep = verify_euler(free)
    assert by_id(rep, "euler:small-fix").status == "pass"
    assert by_id(rep, "euler:small-fix").lhs == 0


def test_catalog_small_all_verifiers():
    actions = [
        builtin_action("linear_pn", n=2, a=0),
        builtin_action("linear_pn", n=3, a=1),
        builtin_action("factorwise_p1n", n=2),
        builtin_action("swap_square", spec=pn(1)),
        builtin_action("swap_square", spec=pn(2)),
    ]
    for act in actions:
        rep = verify_all(act)
        assert rep.command == "all"
        assert rep.ok, "%s: %r" % (act.name, rep.failures)


def test_custom_action_from_json():
    # independent involution on a product of two lines, acting on one factor
    blob = {
        "ambient": {"type": "multiproj", "dims": [1, 1]},
        "components": [
            {"spec": {"type": "multiproj", "dims": [1]}, "codim": 1,
             "normal_lines": [], "normal_trivial_rank": 1},
            {"spec": {"type": "multiproj", "dims": [1]}, "codim": 1,
             "normal_lines": [], "normal_trivial_rank": 1},
        ],
    }
    act = MuTwoActionModel.from_json(blob, name="one_factor")
    assert verify_all(act).ok


def test_inconsistent_action_fails():
    # dropping the isolated fixed point from the plane involution breaks
    # the parity relations: the verifiers must notice
    act = MuTwoActionModel(
        pn(2), [FixedComponent.from_lines(pn(1), 1, [[1]])], name="broken")
    rep = verify_euler(act)
    assert not rep.ok
    assert by_id(rep, "euler:mod2").status == "fail"
    assert not verify_L2_relations(act).ok
    assert not verify_ks(act).ok


def test_report_json_shape():
    rep = verify_euler(builtin_action("linear_pn", n=1, a=0))
    blob = rep.to_json()
    assert blob["command"] == "euler"
    assert blob["status"] == "pass"
    assert all(set(c) >= {"id", "statement", "status"} for c in blob["checks"])
