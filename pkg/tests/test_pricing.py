import pytest
from hypothesis import given
from hypothesis import strategies as st

from equirisk import (
    NegativeTime,
    ProblemInstance,
    Project,
    effective_cost,
    effective_costs,
    total_planned_cost,
)

positive = st.floats(0.01, 1e3)
nonneg = st.floats(0.0, 1e3)


@pytest.mark.parametrize(
    "c, k, t, expected",
    [(2, 0.1, 10, 3), (3, 0.4, 10, 7), (1, 0.2, 10, 3), (5, 0.9, 0, 5)],
)
def test_effective_cost(c, k, t, expected):
    assert effective_cost(Project("p", 1, c, k, 0), t) == pytest.approx(expected, rel=1e-15)


def test_negative_time():
    with pytest.raises(NegativeTime):
        effective_cost(Project("p", 1, 1, 1, 0), -0.5)


def test_effective_costs_paper(paper):
    assert effective_costs(paper).costs == pytest.approx((3, 7, 3), rel=1e-15)


def test_zero_inflation_keeps_base_costs(paper):
    flat = ProblemInstance(tuple(Project(p.id, p.volume, p.base_cost, 0, p.delay)
                                 for p in paper.projects), 295)
    assert effective_costs(flat).costs == (2, 3, 1)


def test_total_planned_cost():
    assert total_planned_cost(ProblemInstance((Project("a", 1, 1),), 1)) == 1
    two = ProblemInstance((Project("a", 10, 2), Project("b", 5, 4)), 1)
    assert total_planned_cost(two) == 10 * 2 + 5 * 4


def test_total_planned_cost_paper(paper):
    assert total_planned_cost(paper) == 1350


@given(c=positive, k=nonneg, t=nonneg, dt=nonneg, dk=nonneg)
def test_monotone_in_time_and_rate(c, k, t, dt, dk):
    p = Project("p", 1, c, k, 0)
    assert effective_cost(p, t + dt) >= effective_cost(p, t)
    assert effective_cost(Project("p", 1, c, k + dk, 0), t) >= effective_cost(p, t)
    assert effective_cost(p, t) >= c


@given(c=positive, k=positive, a=nonneg, b=st.floats(0.01, 1e3))
def test_linear_in_time(c, k, a, b):
    p = Project("p", 1, c, k, 0)
    diff = effective_cost(p, a + b) - effective_cost(p, a)
    # subtraction of two O(c + k*a) numbers; error bounded by their magnitude
    scale = c + k * (a + b)
    assert abs(diff - k * b) <= 1e-12 * max(k * b, scale)


@given(st.lists(st.tuples(positive, positive), min_size=1, max_size=12), st.randoms())
def test_total_cost_permutation_invariant(pairs, rnd):
    projects = [Project(f"p{i}", v, c) for i, (v, c) in enumerate(pairs)]
    shuffled = projects[:]
    rnd.shuffle(shuffled)
    assert total_planned_cost(ProblemInstance(projects, 1)) == \
        total_planned_cost(ProblemInstance(shuffled, 1))
