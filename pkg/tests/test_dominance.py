import random

import pytest
from hypothesis import given
import hypothesis.strategies as st

from i3type import load_fixture
from i3type.core import ValidationError
from i3type.dominance import (
    DEFAULT_INDICATORS,
    IndicatorMatrix,
    Orientation,
    Verdict,
    dominates,
    dominates_tensor,
    pareto_front,
)
from oracles import front_brute, oriented, strictly_dominates, weakly_ge

NAMES = ("X1", "X2", "X3", "Y1")


def m(eid, axis=None, **values):
    return IndicatorMatrix(eid, values, axis)


def base(**over):
    v = dict(X1=1.0, X2=2.0, X3=3.0, Y1=4.0)
    v.update(over)
    return v


def test_equal():
    assert dominates(m("a", **base()), m("b", **base())) is Verdict.EQUAL


def test_better_everywhere():
    a = base()
    b = {k: (v + 1 if k != "X3" else v - 1) for k, v in a.items()}
    assert dominates(m("b", **b), m("a", **a)) is Verdict.STRICTLY_BETTER
    assert dominates(m("a", **a), m("b", **b)) is Verdict.STRICTLY_WORSE


def test_smaller_uncited_share_is_better():
    assert dominates(m("a", **base(X3=1)), m("b", **base(X3=2))) is Verdict.STRICTLY_BETTER


def test_mixed_is_incomparable():
    assert dominates(m("a", **base(X1=2)), m("b", **base(Y1=5))) is Verdict.INCOMPARABLE


def test_mismatched_sets():
    with pytest.raises(ValidationError):
        dominates(m("a", X1=1), m("b", Y1=1))


def test_epsilon_ties_are_flagged_weak():
    a, b = m("a", **base(X1=1.5, X2=1.99)), m("b", **base())
    assert dominates(a, b) is Verdict.INCOMPARABLE
    assert dominates(a, b, epsilon=0.05) is Verdict.WEAKLY_BETTER
    assert dominates(b, a, epsilon=0.05) is Verdict.WEAKLY_WORSE
    assert dominates(m("a", **base(X1=1.01)), m("b", **base()), epsilon=0.05) is Verdict.EQUAL


def test_orientation_override():
    o = Orientation().with_override("X3", "higher")
    assert dominates(m("a", **base(X3=1)), m("b", **base(X3=2)), o) is Verdict.STRICTLY_WORSE
    with pytest.raises(ValidationError):
        Orientation({"X1": "sideways"})


matrices = st.fixed_dictionaries({k: st.integers(0, 4).map(float) for k in NAMES})


@given(matrices, matrices)
def test_flip_symmetry(a, b):
    assert dominates(m("a", **a), m("b", **b)) is dominates(m("b", **b), m("a", **a)).flipped()


@given(matrices, matrices, st.sampled_from(NAMES))
def test_orientation_consistency(a, b, name):
    flipped = Orientation().with_override(name, "lower" if Orientation().of(name) == "higher" else "higher")
    na = {**a, name: -a[name]}
    nb = {**b, name: -b[name]}
    assert dominates(m("a", **a), m("b", **b)) is dominates(m("a", **na), m("b", **nb), flipped)


def test_partial_order_random_triples():
    rng = random.Random(3)
    lower = {"X3"}
    for _ in range(600):
        a, b, c = ({k: float(rng.randint(0, 2)) for k in NAMES} for _ in range(3))
        A, B, C = m("a", **a), m("b", **b), m("c", **c)
        oa, ob, oc = oriented(a, lower), oriented(b, lower), oriented(c, lower)
        # reflexive
        assert dominates(A, A) is Verdict.EQUAL
        # verdict agrees with the oracle
        v = dominates(A, B)
        assert (v is Verdict.STRICTLY_BETTER) == strictly_dominates(oa, ob)
        assert (v is Verdict.EQUAL) == (oa == ob)
        # antisymmetric
        ab = v in (Verdict.STRICTLY_BETTER, Verdict.EQUAL)
        ba = dominates(B, A) in (Verdict.STRICTLY_BETTER, Verdict.EQUAL)
        if ab and ba:
            assert v is Verdict.EQUAL
        # transitive
        if ab and dominates(B, C) in (Verdict.STRICTLY_BETTER, Verdict.EQUAL):
            assert dominates(A, C) in (Verdict.STRICTLY_BETTER, Verdict.EQUAL)
            assert weakly_ge(oa, oc)


def test_tensor_reduces_to_matrix():
    a, b = m("a", "p", **base(X1=2)), m("b", "p", **base())
    assert dominates_tensor([a], [b]) is dominates(a, b)


def test_tensor_mixed_periods():
    A = [m("a", "p1", **base(X1=2)), m("a", "p2", **base())]
    B = [m("b", "p1", **base()), m("b", "p2", **base(X1=2))]
    assert dominates_tensor(A, B) is Verdict.INCOMPARABLE


def test_tensor_shape_errors():
    a = m("a", "p1", **base())
    with pytest.raises(ValidationError):
        dominates_tensor([a], [])
    with pytest.raises(ValidationError):
        dominates_tensor([a], [m("b", "p2", **base())])


def test_tensor_university_periods():
    # MIT is at least as good as Yale on every indicator in both periods
    periods = ("2009_2013", "2011_2015")
    rows = {p: {r.entity_id: r for r in load_fixture(f"universities_{p}.csv").indicator_rows()} for p in periods}
    A = [IndicatorMatrix.from_row(rows[p]["MIT"], DEFAULT_INDICATORS, p) for p in periods]
    B = [IndicatorMatrix.from_row(rows[p]["YALE UNIV"], DEFAULT_INDICATORS, p) for p in periods]
    lower = {"X3"}
    elems_a = [oriented(dict(x.values), lower) for x in A]
    elems_b = [oriented(dict(x.values), lower) for x in B]
    assert all(weakly_ge(x, y) for x, y in zip(elems_a, elems_b))
    assert any(strictly_dominates(x, y) for x, y in zip(elems_a, elems_b))
    assert dominates_tensor(A, B) is Verdict.STRICTLY_BETTER
    assert dominates_tensor(B, A) is Verdict.STRICTLY_WORSE


def test_pareto_small_cases():
    a = m("a", **base())
    assert pareto_front([a]) == [a]
    chain = [m("c", **base()), m("a", **base(X1=3)), m("b", **base(X1=2))]
    assert [r.entity_id for r in pareto_front(chain)] == ["a"]


def test_pareto_matches_brute_force():
    rng = random.Random(5)
    for _ in range(200):
        items = [{k: float(rng.randint(0, 3)) for k in NAMES} for _ in range(10)]
        rows = [m(f"e{i}", **v) for i, v in enumerate(items)]
        got = [int(r.entity_id[1:]) for r in pareto_front(rows)]
        assert got == front_brute(items, {"X3"})
