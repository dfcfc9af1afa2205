"""Finite Radon transform and projective multisets."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from nodalcodes import pgradon
from nodalcodes.codes import LinearCode, is_equivalent
from nodalcodes.exactalg import F2, F5, F25, pg_points
from nodalcodes.families import simplex
from nodalcodes.gf2 import BinaryMatrix, BinaryVector
from nodalcodes.pgradon import (
    NonIntegerReconstruction,
    binary_weights_of_multiset,
    code_to_multiset,
    double_radon_invert,
    multiset_from_weights,
    multiset_to_code,
    radon,
    radon_integral_identity,
    radon_invert_binary,
)


def test_simplex_multiset_is_all_points_once():
    ms = code_to_multiset(simplex(3))
    assert ms == {pt: 1 for pt in range(1, 8)}


def test_multiset_code_round_trip():
    # The recovered multiset is expressed in the rref basis, so the round
    # trip is exact up to a basis change: multiplicities and the generated
    # code agree.
    ms = {1: 2, 3: 1, 6: 3}
    code = multiset_to_code(ms, 3)
    back = code_to_multiset(code)
    assert sorted(back.values()) == sorted(ms.values())
    assert is_equivalent(multiset_to_code(back, 3), code) is not None


def test_zero_code_gives_empty_multiset():
    assert code_to_multiset(LinearCode(BinaryMatrix([BinaryVector(3, 0)], 3))) == {}


def test_zero_columns_are_dropped():
    c = simplex(2).pad(5, offset=1)
    ms = code_to_multiset(c)
    assert sum(ms.values()) == 3


@st.composite
def multisets(draw, k=3):
    pts = draw(
        st.lists(st.integers(1, (1 << k) - 1), unique=True, min_size=1, max_size=5)
    )
    return {p: draw(st.integers(1, 4)) for p in pts}


@given(multisets())
@settings(max_examples=40, deadline=None)
def test_binary_radon_inversion(ms):
    k, n = 3, sum(ms.values())
    image = {a: n - w for a, w in binary_weights_of_multiset(ms, k).items()}
    assert radon_invert_binary(image, k, n) == ms


@given(multisets(k=4))
@settings(max_examples=30, deadline=None)
def test_weights_round_trip(ms):
    k = 4
    n = sum(ms.values())
    w = binary_weights_of_multiset(ms, k)
    assert multiset_from_weights(w, k, n) == ms


def test_non_integer_reconstruction_detected():
    with pytest.raises(NonIntegerReconstruction):
        radon_invert_binary({a: 1 for a in range(1, 8)}, 3, 3)


@pytest.mark.parametrize("field", [F2, F5], ids=["F2", "F5"])
@pytest.mark.parametrize("k", [2, 3, 4])
def test_exact_radon_inversion(field, k):
    rng = random.Random(97 * k + field.order)
    pts = pg_points(k, field)
    for _ in range(10):
        support = rng.sample(pts, rng.randint(1, min(6, len(pts))))
        ms = {p: rng.randint(1, 5) for p in support}
        image = radon(ms, k, field)
        assert double_radon_invert(image, k, field) == ms
        assert radon_integral_identity(ms, k, field)


def test_exact_radon_inversion_f25():
    rng = random.Random(5)
    pts = pg_points(2, F25)
    assert len(pts) == 26
    ms = {p: rng.randint(1, 3) for p in rng.sample(pts, 4)}
    assert double_radon_invert(radon(ms, 2, F25), 2, F25) == ms
