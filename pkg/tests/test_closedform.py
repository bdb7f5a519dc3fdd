import pytest
from hypothesis import assume, given, settings, strategies as st

from ssw.closedform import (
    SupportWeightDistribution,
    WeightEnumerator,
    hierarchy_closed,
    hierarchy_p1,
    hierarchy_p2,
    hierarchy_simplex,
    lifted_weight_enumerator,
    projective_transform,
    swd_closed,
    swd_p1,
    swd_p2,
    swd_p2_u1eq1,
    swd_simplex,
    wd_l1_p2,
)
from ssw.errors import InvalidDims, NonDivisibleExponent
from ssw.qcombin import gaussian_binomial

import goldens as G

# frozen from tests/brute.py (subcode enumeration over plain tuples)
BRUTE_P1_2_4_1 = {1: {7: 8, 8: 7}, 2: {11: 28, 12: 7}, 3: {13: 14, 14: 1}, 4: {14: 1}}
BRUTE_P2_2_3_1_1 = {1: {2: 2, 3: 4, 4: 1}, 2: {4: 5, 5: 2}, 3: {5: 1}}
BRUTE_P2_2_5_1_3 = {
    1: {11: 14, 12: 14, 15: 2, 16: 1},
    2: {17: 84, 18: 28, 19: 35, 20: 7, 23: 1},
    3: {20: 56, 21: 85, 22: 7, 23: 7},
    4: {22: 23, 23: 8},
    5: {23: 1},
}
BRUTE_WD_3_3_1_1 = {0: 1, 14: 12, 16: 12, 18: 2}


def _params(draw_q=st.sampled_from([2, 3, 4, 5])):
    return st.tuples(draw_q, st.integers(2, 7)).flatmap(
        lambda qk: st.tuples(
            st.just(qk[0]),
            st.just(qk[1]),
            st.integers(1, qk[1] - 1).flatmap(lambda u1: st.tuples(st.just(u1), st.integers(1, qk[1] - u1))),
        )
    )


def test_simplex():
    s = swd_simplex(2, 3)
    assert s.column(1) == {4: 7} and s.column(2) == {6: 7} and s.column(3) == {7: 1}
    assert swd_simplex(3, 2).column(1) == {3: 4}
    for q in (2, 3, 4):
        for k in range(1, 6):
            s = swd_simplex(q, k)
            assert s.column(k) == {s.n: 1}
            assert hierarchy_simplex(q, k) == s.hierarchy()


def test_derived_tables():
    assert swd_p1(2, 4, 1).table == BRUTE_P1_2_4_1
    assert swd_p2(2, 3, 1, 1).table == BRUTE_P2_2_3_1_1
    assert swd_p2_u1eq1(2, 5, 3).table == BRUTE_P2_2_5_1_3
    assert swd_p2(2, 5, 1, 3).table == BRUTE_P2_2_5_1_3
    assert wd_l1_p2(3, 3, 1, 1).coeffs == BRUTE_WD_3_3_1_1
    assert tuple(hierarchy_p1(2, 4, 1)) == (7, 11, 13, 14)


def test_reference_tables():
    assert swd_p1(3, 3, 2).table == G.EX1_SWD
    assert swd_p2(2, 6, 2, 3).table == G.EX2_SWD
    assert swd_p2(3, 4, 1, 2).table == G.EX3_SWD
    assert swd_p2_u1eq1(3, 4, 2) == swd_p2(3, 4, 1, 2)
    assert wd_l1_p2(2, 6, 2, 3).coeffs == {0: 1, 26: 42, 28: 14, 30: 6, 32: 1}
    assert tuple(hierarchy_p1(3, 3, 2)) == G.EX1_HIER
    assert tuple(hierarchy_p2(2, 6, 2, 3)) == G.EX2_HIER
    assert tuple(hierarchy_p2(3, 4, 1, 2)) == G.EX3_HIER


def test_lifted_examples():
    e1 = lifted_weight_enumerator(swd_p1(3, 3, 2), 2)
    assert e1.coeffs == G.EX1_A2
    assert str(e1) == "1 + 96z^12 + 432z^16 + 200z^18"
    assert projective_transform(e1, 3).coeffs == G.EX1_A2_PROJ
    e2 = lifted_weight_enumerator(swd_p2(2, 6, 2, 3), 3)
    assert e2.coeffs == G.EX2_A3 and e2.total() == 8**6
    e3 = lifted_weight_enumerator(swd_p2(3, 4, 1, 2), 2)
    assert e3.coeffs == {0: 1, **G.EX3_A2_PRINTED}
    assert projective_transform(e3, 3).coeffs == {0: 1, **G.EX3_A2_PROJ_PRINTED}


def test_projective_transform():
    e = WeightEnumerator({0: 1, 3: 4})
    assert projective_transform(e, 2) == e
    with pytest.raises(NonDivisibleExponent):
        projective_transform({0: 1, 3: 2}, 3)
    assert projective_transform({0: 1, 4: 2}, 3).coeffs == {0: 1, 2: 2}


def test_projective_table_and_hierarchy():
    full = swd_p2(3, 4, 1, 2)
    proj = full.projective()
    assert proj.n == 35 and tuple(proj.hierarchy()) == G.EX3_HIER_PROJ
    assert tuple(swd_p1(3, 3, 2).projective().hierarchy()) == G.EX1_HIER_PROJ


def test_invalid_dims():
    with pytest.raises(InvalidDims):
        swd_p1(2, 3, 3)
    with pytest.raises(InvalidDims):
        swd_p2(2, 4, 2, 3)
    with pytest.raises(InvalidDims):
        swd_closed(2, 6, (1, 1, 1))
    with pytest.raises(InvalidDims):
        lifted_weight_enumerator(swd_simplex(2, 2), 0)


def test_closed_dispatch():
    s = swd_closed(3, 3, ())
    assert s.n == 26 and s.column(1) == {18: 13}
    assert tuple(hierarchy_closed(3, 3, ())) == (18, 24, 26)
    assert swd_closed(2, 4, (1,)) == swd_p1(2, 4, 1)


@given(_params())
@settings(max_examples=120, deadline=None)
def test_swd_invariants(params):
    q, k, (u1, u2) = params
    for s in (swd_p1(q, k, u1), swd_p2(q, k, u1, u2)):
        for j in range(1, k + 1):
            assert s.total(j) == gaussian_binomial(k, j, q)
            assert max(s.column(j)) <= s.n
        assert s.column(k) == {s.n: 1}
        h = s.hierarchy()
        assert h.is_strictly_increasing() and h.values[-1] == s.n
    assert swd_p1(q, k, u1).hierarchy() == hierarchy_p1(q, k, u1)
    assert swd_p2(q, k, u1, u2).hierarchy() == hierarchy_p2(q, k, u1, u2)
    assert swd_p2(q, k, u1, u2) == swd_p2(q, k, u2, u1)
    if 1 in (u1, u2):
        assert swd_p2_u1eq1(q, k, u1 + u2 - 1) == swd_p2(q, k, 1, u1 + u2 - 1)


@given(_params(), st.integers(1, 4))
@settings(max_examples=80, deadline=None)
def test_lift_invariants(params, ell):
    q, k, (u1, u2) = params
    assume((q, k) != (2, 2))  # q=2, k=2, (1,1) leaves a rank-1 matrix
    s = swd_p2(q, k, u1, u2)
    e = lifted_weight_enumerator(s, ell)
    assert e.total() == q ** (ell * k) and e[0] == 1
    # l=1 keeps only the 1-dim subcodes, each a line of q-1 nonzero codewords
    one = lifted_weight_enumerator(s, 1)
    assert one.coeffs == {0: 1, **{i: (q - 1) * c for i, c in s.column(1).items()}}
    assert one == wd_l1_p2(q, k, u1, u2)
    # the weight q^k - q^(k-1) has frequency q^(k-u1-u2) - 1, absent when u1 + u2 = k
    assert len(one.coeffs) - 1 == 4 - (u1 == u2) - (u1 + u2 == k)
    if q > 2:
        projective_transform(e, q)  # every exponent divisible by q-1


def test_swd_container():
    s = SupportWeightDistribution(2, 2, 3, {1: {2: 3, 5: 0}, 2: {}})
    assert s.table == {1: {2: 3}}
    s.add(2, 3, 1)
    s.add(2, 3, 0)
    assert list(s.entries()) == [(1, 2, 3), (2, 3, 1)]
    with pytest.raises(NonDivisibleExponent):
        SupportWeightDistribution(3, 1, 3, {1: {3: 1}}).projective()
