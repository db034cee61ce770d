from __future__ import annotations

import math
from importlib import resources

import numpy as np
import pytest

from equirisk import ProblemInstance, Project, parse_instance


def paper_projects() -> tuple[Project, ...]:
    return (
        Project("1", 100, 2, 0.1, 10),
        Project("2", 300, 3, 0.4, 10),
        Project("3", 250, 1, 0.2, 10),
    )


@pytest.fixture
def paper() -> ProblemInstance:
    return ProblemInstance(paper_projects(), 295)


@pytest.fixture
def paper_document() -> bytes:
    return resources.files("equirisk").joinpath("data/paper_2_3.json").read_bytes()


def log_uniform(rng: np.random.Generator, lo: float = 0.1, hi: float = 10.0) -> float:
    return float(math.exp(rng.uniform(math.log(lo), math.log(hi))))


def random_instance(rng: np.random.Generator, n_max: int = 10, n_min: int = 1) -> ProblemInstance:
    """Underfunded instance with every parameter log-uniform in [0.1, 10]."""
    n = int(rng.integers(n_min, n_max + 1))
    projects = tuple(
        Project(f"p{i}", log_uniform(rng), log_uniform(rng), log_uniform(rng), log_uniform(rng))
        for i in range(n)
    )
    planned = sum(p.base_cost * p.volume for p in projects)
    budget = 0.0
    while budget <= 0.0:
        budget = float(rng.uniform(0.0, planned))
    return ProblemInstance(projects, budget)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20171019)


@pytest.fixture
def paper_from_file(paper_document) -> ProblemInstance:
    return parse_instance(paper_document)
