from __future__ import annotations

import numpy as np
import pytest

from skeinforge.cyclo import CycNum
from skeinforge.errors import (
    ClosureMismatchError,
    GradingMismatchError,
    NonIntegralError,
    ShapeMismatchError,
    UnsupportedNError,
)
from skeinforge.fusion import (
    ModularDataSlice,
    SubRing,
    adjoint_subring,
    associativity_tensors,
    balancing_check,
    build_metaplectic,
    center_numerology,
    check_grading,
    claimed_centralizer,
    fusion_closure,
    grading,
    grading_is_group_law,
    integral_parameter,
    lemma28_subcategory,
    theorem29_check,
    verify_ring,
)

INTEGRAL_N = [9, 25, 49, 81, 18, 50, 98, 8, 32, 72]


def members(S):
    return set(S.members)


def test_listed_products():
    R9 = build_metaplectic(9)
    assert R9.product("Y1", "Y1") == {"1": 1, "Z": 1, "Y2": 1}
    assert R9.product("Y4", "Y4") == {"1": 1, "Z": 1, "Y1": 1}
    assert build_metaplectic(18).product("Y4", "Y5") == {"g": 1, "g3": 1, "Y1": 1}
    assert build_metaplectic(8).product("Y2", "Y2") == {"1": 1, "f": 1, "g": 1, "fg": 1}


def test_labels_and_dims():
    R = build_metaplectic(9)
    assert R.labels == ("1", "Z", "Y1", "Y2", "Y3", "Y4")
    assert R.dims == (1, 1, 2, 2, 2, 2)
    assert build_metaplectic(18).labels[:4] == ("1", "g", "g2", "g3")
    assert build_metaplectic(8).labels == ("1", "f", "g", "fg", "Y1", "Y2", "Y3")
    g = build_metaplectic(18)
    assert g.labels[g.dual[g.index("g")]] == "g3"


def test_unsupported_n():
    with pytest.raises(UnsupportedNError):
        build_metaplectic(1)
    with pytest.raises(NonIntegralError):
        integral_parameter(12)
    with pytest.raises(NonIntegralError):
        lemma28_subcategory(10)


@pytest.mark.parametrize("N", range(3, 101))
def test_ring_axioms_and_grading_up_to_100(N):
    R = build_metaplectic(N)
    assert verify_ring(R).ok
    comps = check_grading(R)
    labels = [x for c in comps for x in c.members]
    assert sorted(labels) == sorted(R.labels)
    assert grading_is_group_law(R, comps)


def test_associativity_against_einsum():
    R = build_metaplectic(25)
    left, right = associativity_tensors(R)
    M = R.N
    assert (left == np.einsum("ijm,mkl->ijkl", M, M)).all()
    assert (right == np.einsum("jkm,iml->ijkl", M, M)).all()


def test_corrupted_constant_is_reported():
    R = build_metaplectic(8).with_constant("Y1", "Y2", "Y2", 1)
    rep = verify_ring(R)
    assert not rep.ok
    assert rep.checks["associativity"] is False
    assert len(rep.witness) == 4


def test_corrupted_unit_is_reported_first():
    R = build_metaplectic(9).with_constant("1", "Y1", "Y2", 1)
    rep = verify_ring(R)
    assert not rep.ok and rep.first_violation.startswith("unit")


def test_grading_examples():
    g9 = grading(build_metaplectic(9))
    assert [members(c) for c in g9] == [{"1", "Z", "Y1", "Y2", "Y3", "Y4"}]
    g18 = grading(build_metaplectic(18))
    assert members(g18[0]) == {"1", "g2", "Y2", "Y4", "Y6", "Y8"}
    assert members(g18[1]) == {"g", "g3", "Y1", "Y3", "Y5", "Y7"}
    g8 = grading(build_metaplectic(8))
    assert members(g8[0]) == {"1", "f", "g", "fg", "Y2"}
    assert members(g8[1]) == {"Y1", "Y3"}


def test_grading_mismatch_raises():
    R = build_metaplectic(18)
    broken = R.with_constant("Y1", "Y1", "g", 1)
    with pytest.raises(GradingMismatchError):
        check_grading(broken)


def test_lemma28_examples():
    L9 = lemma28_subcategory(9)
    assert members(L9) == {"1", "Z", "Y3"} and L9.dim == 6
    L18 = lemma28_subcategory(18)
    assert members(L18) == {"1", "g2", "Y6"} and L18.dim == 6
    L8 = lemma28_subcategory(8)
    assert members(L8) == {"1", "f", "g", "fg"} and L8.dim == 4


@pytest.mark.parametrize("N", INTEGRAL_N)
def test_lemma28_dimensions(N):
    family, s = integral_parameter(N)
    L = lemma28_subcategory(N)
    assert L.dim == 2 * s
    assert members(fusion_closure(L.parent, L.members)) == members(L)


def test_closure_mismatch_detected():
    R = build_metaplectic(9).with_constant("Y3", "Y3", "Y1", 1)
    with pytest.raises(ClosureMismatchError):
        lemma28_subcategory(9, R)


def test_centralizer_examples():
    C9 = claimed_centralizer(9)
    assert members(C9) == {"1", "Z", "Y3"} and C9.dim == 6
    C18 = claimed_centralizer(18)
    assert members(C18) == {"1", "g", "g2", "g3", "Y3", "Y6"} and C18.dim == 12
    C8 = claimed_centralizer(8)
    assert members(C8) == {"1", "f", "g", "fg", "Y2"} and C8.dim == 8


@pytest.mark.parametrize("N", INTEGRAL_N)
def test_dimension_identity(N):
    assert lemma28_subcategory(N).dim * claimed_centralizer(N).dim == 4 * N


def test_adjoint_examples():
    assert members(adjoint_subring(claimed_centralizer(9))) == {"1", "Z", "Y3"}
    assert members(adjoint_subring(claimed_centralizer(8))) == {"1", "f", "g", "fg"}
    R = build_metaplectic(9)
    assert members(adjoint_subring(SubRing(R, frozenset({"1", "Z"})))) == {"1"}


@pytest.mark.parametrize("N", [n for n in range(3, 101)
                               if (n % 2 and int(n ** 0.5) ** 2 == n)
                               or (n % 2 == 0 and int((n // 2) ** 0.5) ** 2 == n // 2)])
def test_theorem29_all_integral_n(N):
    rep = theorem29_check(N)
    assert rep.ok, rep.outside


def test_balancing_examples():
    one = ModularDataSlice([[1]], [1], [1], [[[1]]])
    assert balancing_check(one).ok
    zz = [[[1, 0], [0, 1]], [[0, 1], [1, 0]]]
    assert balancing_check(ModularDataSlice([[1, 1], [1, 1]], [1, 1], [1, 1], zz)).ok
    rep = balancing_check(ModularDataSlice([[1, 1], [1, -1]], [1, 1], [1, 1], zz))
    assert not rep.ok
    (i, j, lhs, rhs), = rep.violations
    assert (i, j) == (1, 1) and lhs == -1 and rhs == 1


def test_balancing_semion():
    # semion: theta = (1, i), d = (1, 1), S = [[1, 1], [1, -1]]
    i = CycNum.zeta(4)
    zz = [[[1, 0], [0, 1]], [[0, 1], [1, 0]]]
    rep = balancing_check(ModularDataSlice([[1, 1], [1, -1]], [1, i], [1, 1], zz))
    assert rep.ok


def test_balancing_shape_errors():
    with pytest.raises(ShapeMismatchError):
        ModularDataSlice([[1, 1]], [1, 1], [1, 1], np.zeros((2, 2, 2)))
    with pytest.raises(ShapeMismatchError):
        ModularDataSlice.from_json({"S": [[1]], "theta": [1]})
    data = ModularDataSlice.from_json({"S": [[{"num": [1] + [0] * 7, "den": 1}]],
                                       "theta": [1], "dims": [1], "N": [[[1]]]})
    assert balancing_check(data).ok


def test_numerology():
    rep = center_numerology(8)
    assert rep["dim_C"] == 32 and rep["dim_center"] == 1024
    assert rep["rank_C_from_fusion_rules"] == 11
    assert rep["rank_center_asserted"] == 256
    assert rep["group_order"] == 32
    assert rep["metadata"] == "G = SmallGroup(32,49), nontrivial cocycle, 72 Morita classes"
    with pytest.raises(UnsupportedNError):
        center_numerology(9)
