import math

import pytest

from equirisk import (
    DuplicateId,
    EmptyProjectList,
    NegativeDelay,
    NegativeRate,
    NonPositiveBudget,
    NonPositiveCost,
    NonPositiveVolume,
    ProblemInstance,
    Project,
    SchemaError,
    ValidationError,
    validate_instance,
)


def raw_paper():
    return {
        "budget": 295,
        "projects": [
            {"id": "1", "volume": 100, "base_cost": 2, "inflation_rate": 0.1, "delay": 10},
            {"id": "2", "volume": 300, "base_cost": 3, "inflation_rate": 0.4, "delay": 10},
            {"id": "3", "volume": 250, "base_cost": 1, "inflation_rate": 0.2, "delay": 10},
        ],
    }


def test_paper_instance_is_valid(paper):
    inst = validate_instance(raw_paper())
    assert inst == paper
    assert inst.n == 3
    assert inst.ids == ("1", "2", "3")


def test_minimal_instance():
    inst = validate_instance(
        {"budget": 1, "projects": [{"id": "a", "volume": 1, "base_cost": 1,
                                   "inflation_rate": 0, "delay": 0}]}
    )
    assert inst.budget == 1.0
    assert inst.projects[0] == Project("a", 1, 1, 0, 0)


def test_zero_cost_names_project():
    raw = raw_paper()
    raw["projects"][1]["base_cost"] = 0
    with pytest.raises(NonPositiveCost) as exc:
        validate_instance(raw)
    assert exc.value.project_id == "2"
    assert exc.value.field == "base_cost"
    assert "'2'" in str(exc.value)


@pytest.mark.parametrize(
    "field, value, error",
    [
        ("volume", 0, NonPositiveVolume),
        ("volume", -3, NonPositiveVolume),
        ("volume", math.inf, NonPositiveVolume),
        ("base_cost", -1, NonPositiveCost),
        ("base_cost", math.nan, NonPositiveCost),
        ("inflation_rate", -0.1, NegativeRate),
        ("delay", -1, NegativeDelay),
    ],
)
def test_project_field_errors(field, value, error):
    raw = raw_paper()
    raw["projects"][2][field] = value
    with pytest.raises(error) as exc:
        validate_instance(raw)
    assert exc.value.project_id == "3"
    assert isinstance(exc.value, ValidationError)


def test_zero_rate_and_delay_allowed():
    Project("x", 1, 1, 0, 0)


def test_duplicate_id():
    raw = raw_paper()
    raw["projects"][2]["id"] = "1"
    with pytest.raises(DuplicateId) as exc:
        validate_instance(raw)
    assert exc.value.project_id == "1"


def test_empty_project_list():
    with pytest.raises(EmptyProjectList):
        validate_instance({"budget": 1, "projects": []})


@pytest.mark.parametrize("budget", [0, -5, math.inf])
def test_bad_budget(budget):
    raw = raw_paper()
    raw["budget"] = budget
    with pytest.raises(NonPositiveBudget):
        validate_instance(raw)


@pytest.mark.parametrize(
    "mutate",
    [
        lambda r: r.pop("budget"),
        lambda r: r["projects"][0].pop("delay"),
        lambda r: r["projects"][0].update(volume="100"),
        lambda r: r["projects"][0].update(volume=True),
        lambda r: r["projects"][0].update(id=7),
        lambda r: r["projects"][0].update(colour="red"),
        lambda r: r.update(projects={"id": "1"}),
    ],
)
def test_schema_errors(mutate):
    raw = raw_paper()
    mutate(raw)
    with pytest.raises(SchemaError):
        validate_instance(raw)


def test_types_are_immutable(paper):
    with pytest.raises(AttributeError):
        paper.budget = 1  # type: ignore[misc]
    with pytest.raises(AttributeError):
        paper.projects[0].volume = 1  # type: ignore[misc]


def test_with_delays(paper):
    assert [p.delay for p in paper.with_delays(3).projects] == [3, 3, 3]
    assert [p.delay for p in paper.with_delays([1, 2, 3]).projects] == [1, 2, 3]
    with pytest.raises(ValueError):
        paper.with_delays([1, 2])
    with pytest.raises(NegativeDelay):
        paper.with_delays(-1)


def test_instance_from_project_objects(paper):
    assert validate_instance({"budget": 295, "projects": list(paper.projects)}) == paper
    assert validate_instance(paper) is paper
    assert ProblemInstance(list(paper.projects), 295) == paper
