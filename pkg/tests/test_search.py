"""Enumeration, extension search, and the exact 0/1 solver."""

from math import comb

import pytest

from nodalcodes.codes import LinearCode, SearchBudgetExceeded, is_equivalent
from nodalcodes.families import repeated_simplex
from nodalcodes.search import (
    build_extension_system,
    enumerate_extensions,
    enumerate_restricted,
    quintic_parameter_scan,
    solution_from_coset_word,
    solve,
    verify,
)
from nodalcodes import acceptance


def test_enumerate_restricted_small_dimensions():
    assert len(enumerate_restricted(0, 26, {16, 20})) == 1
    assert len(enumerate_restricted(1, 27, {16, 20})) == 2
    assert len(enumerate_restricted(2, 28, {16, 20})) == 3


def test_enumerate_restricted_budget_is_enforced():
    with pytest.raises(SearchBudgetExceeded):
        enumerate_restricted(4, 34, {16, 20}, budget=10)


def test_quintic_scan_matches_published_tables():
    main, extra = quintic_parameter_scan()
    assert main == list(acceptance.TWO_WEIGHT_ROWS_MAIN)
    assert extra == list(acceptance.TWO_WEIGHT_ROWS_EXTRA)


def test_extension_enumeration_of_small_simplex_base():
    base = repeated_simplex(8, 1)  # weight-8 repetition code on 8 coords
    found = enumerate_extensions(base, {6, 10}, 16)
    expected = [
        acceptance.parse_code(rows)
        for rows, _ in acceptance.SIMPLEX_EXTENSIONS[1]
    ]
    assert len(found) == len(expected)
    matched = set()
    for code in found:
        for i, exp in enumerate(expected):
            if i in matched:
                continue
            if (
                code.weight_enumerator().counts
                == exp.weight_enumerator().counts
                and is_equivalent(code, exp) is not None
            ):
                matched.add(i)
                break
    assert len(matched) == len(expected)


def test_solver_complete_on_unconstrained_instance():
    # With no base codewords the system reduces to sum x = gamma - delta.
    sys = build_extension_system(LinearCode.zero(16), gamma=7, delta=1, lam=40)
    result = solve(sys, budget=10_000_000)
    assert result.status == "complete"
    assert len(result.solutions) == comb(16, 6)
    assert all(verify(sys, sol) for sol in result.solutions)


def test_solver_budget_and_resume_are_sound():
    sys = build_extension_system(LinearCode.zero(12), gamma=5, delta=1, lam=40)
    complete = solve(sys, budget=10_000_000)
    assert complete.status == "complete"
    partial = solve(sys, budget=50)
    assert partial.status == "budgeted"
    assert partial.frontier
    found = set(partial.solutions)
    frontier = partial.frontier
    for _ in range(10_000):
        step = solve(sys, budget=500, frontier=frontier)
        found.update(step.solutions)
        if step.status == "complete":
            break
        frontier = step.frontier
    else:
        pytest.fail("resume never completed")
    assert found == set(complete.solutions)


def test_verify_rejects_wrong_weight():
    sys = build_extension_system(LinearCode.zero(8), gamma=7, delta=1, lam=40)
    assert sys.target == 6
    good = solution_from_coset_word(sys, 0b00111111)
    assert verify(sys, good)
    bad = solution_from_coset_word(sys, 0b00000111)
    assert not verify(sys, bad)
