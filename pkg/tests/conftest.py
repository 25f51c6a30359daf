"""Shared fixtures: session-scoped caches for solves and shooting runs.

The benchmark cases are solved once per test session and reused across the
unit, problem, and acceptance tests; likewise each shooting integration runs
once.  A cone shooting run also pre-fills the solver's starting-profile
cache so the collocation solve does not repeat the integration.
"""

import numpy as np
import pytest

from halfline import (
    ConeParams,
    FluidParams,
    HermiteBasis,
    LaguerreBasis,
    ProblemSpec,
    SeedKind,
    SeedProfile,
    SincBasis,
    SincMap,
    SincWeight,
    TABLE3,
    TABLE4,
    TABLE5,
    ThomasFermiProblem,
    shoot,
    solve_problem,
)
from halfline import problems as _problems_module

FLUID_B = (0.6, 0.1, 0.5)

# the printed seed parameter of the lam = 1/4 translate row contradicts the
# row's own slope column; the consistent value is used (see decisions ledger)
T5_BETA = {row: (1.8200 if row == 0.25 else TABLE5.value(row, "beta"))
           for row in TABLE5.abscissas()}

CONE_LAMBDAS = TABLE3.abscissas()


def _case_spec(key):
    problem, method = key[0], key[1]
    if problem == "fluid":
        prob = FluidParams(*FLUID_B)
        if method == "mglf":
            return ProblemSpec(prob, LaguerreBasis(20, 1.0, 0.99))
        if method == "hf":
            return ProblemSpec(prob, HermiteBasis(16, 1.2),
                               SeedProfile(SeedKind.RATIONAL_QUADRATIC,
                                           0.678301))
        return ProblemSpec(prob, SincBasis(17, 1.0),
                           SeedProfile(SeedKind.RATIONAL_QUADRATIC, 0.47))
    if problem == "tf":
        prob = ThomasFermiProblem()
        if method == "mglf":
            return ProblemSpec(prob, LaguerreBasis(7, 1.0, 0.675))
        if method == "hf":
            return ProblemSpec(prob, HermiteBasis(15, 0.9),
                               SeedProfile(SeedKind.RATIONAL_QUADRATIC,
                                           1.588071))
        return ProblemSpec(prob, SincBasis(11, 1.0),
                           SeedProfile(SeedKind.RATIONAL_LINEAR, 0.77))
    lam = key[2]
    prob = ConeParams(lam)
    if method == "mglf":
        return ProblemSpec(prob, LaguerreBasis(13, TABLE3.value(lam, "alpha"),
                                               TABLE3.value(lam, "L")))
    if method == "hf":
        return ProblemSpec(prob, HermiteBasis(20, TABLE4.value(lam, "k")),
                           SeedProfile(SeedKind.CONE_RATIONAL,
                                       TABLE4.value(lam, "beta")))
    return ProblemSpec(prob, SincBasis(30, TABLE5.value(lam, "h"),
                                       SincMap.LOG, SincWeight.RATIONAL_X3),
                       SeedProfile(SeedKind.CONE_RATIONAL, T5_BETA[lam]))


_SHOOT_CACHE = {}
_SOLVE_CACHE = {}


def _problem_key(problem):
    if isinstance(problem, FluidParams):
        return ("fluid", problem.b1, problem.b2, problem.b3)
    if isinstance(problem, ConeParams):
        return ("cone", problem.lam)
    return ("tf",)


def _shoot_cached(problem):
    key = _problem_key(problem)
    if key not in _SHOOT_CACHE:
        _SHOOT_CACHE[key] = shoot(problem)
        if isinstance(problem, ConeParams):
            slope, (xs, states) = _SHOOT_CACHE[key]
            _problems_module._CONE_START_CACHE.setdefault(
                float(problem.lam), (xs, states[:, 0].copy()))
    return _SHOOT_CACHE[key]


def _solve_cached(key):
    if key not in _SOLVE_CACHE:
        spec = _case_spec(key)
        if key[0] == "cone" and key[1] == "mglf":
            _shoot_cached(spec.problem)  # share the integration
        e, report = solve_problem(spec)
        _SOLVE_CACHE[key] = (spec, e, report)
    return _SOLVE_CACHE[key]


@pytest.fixture(scope="session")
def solve_case():
    """solve_case(problem, method[, lam]) -> (spec, expansion, report)."""
    return lambda *key: _solve_cached(tuple(key))


@pytest.fixture(scope="session")
def oracle():
    """oracle(problem) -> (slope, (xs, states)), cached per problem."""
    return _shoot_cached


# one line per acceptance criterion, echoed after the test summary
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
