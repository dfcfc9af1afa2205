"""Linear and bicoloured codes: enumerators, duality, equivalence."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from nodalcodes.codes import (
    BicolouredCode,
    LinearCode,
    b_inequality,
    bonisoli_check,
    dedupe_codes,
    dump_bicoloured,
    invariant_key,
    is_equivalent,
    is_equivalent_bicoloured,
    macwilliams_dual,
    parse_bicoloured,
)
from nodalcodes.families import repeated_simplex, simplex
from nodalcodes.gf2 import BinaryMatrix, BinaryVector


@st.composite
def linear_codes(draw, max_rows=5, max_cols=10):
    ncols = draw(st.integers(1, max_cols))
    nrows = draw(st.integers(1, max_rows))
    rows = [
        BinaryVector(ncols, draw(st.integers(0, (1 << ncols) - 1)))
        for _ in range(nrows)
    ]
    return LinearCode(BinaryMatrix(rows, ncols))


def test_simplex_is_one_weight():
    c = simplex(4)
    assert (c.length, c.dimension) == (15, 4)
    assert c.weight_enumerator().counts == {0: 1, 8: 15}
    assert bonisoli_check(c) == (1, 4)


def test_bonisoli_identifies_repeated_simplex():
    c = repeated_simplex(3, 3)
    assert bonisoli_check(c) == (3, 3)
    assert bonisoli_check(simplex(2).pad(4)) == (1, 2)


def test_dual_of_simplex_is_hamming():
    d = simplex(3).dual()
    assert (d.length, d.dimension) == (7, 4)
    assert min(w for w in d.weight_enumerator().counts if w) == 3


@given(linear_codes())
@settings(max_examples=40, deadline=None)
def test_double_dual_round_trip(c):
    assert c.dual().dual().same_span(c)


@given(linear_codes())
@settings(max_examples=40, deadline=None)
def test_macwilliams_matches_dual_enumerator(c):
    we = c.weight_enumerator()
    predicted = macwilliams_dual(we, c.length, c.dimension)
    assert predicted.counts == c.dual().weight_enumerator().counts


@given(linear_codes(max_cols=8), st.data())
@settings(max_examples=40, deadline=None)
def test_projection_shortening_duality(c, data):
    keep = data.draw(
        st.lists(
            st.integers(0, c.length - 1), unique=True, min_size=1, max_size=c.length
        )
    )
    assert c.project(keep).dual().same_span(c.dual().shorten(keep))


@given(linear_codes(max_cols=9), st.randoms(use_true_random=False))
@settings(max_examples=30, deadline=None)
def test_equivalence_finds_planted_permutation(c, rng):
    perm = list(range(c.length))
    rng.shuffle(perm)
    other = c.permute(perm)
    phi = is_equivalent(c, other)
    assert phi is not None
    assert c.permute(phi).same_span(other)


def test_equivalence_rejects_different_enumerators():
    a = LinearCode.from_ints([0b111], 3)
    b = LinearCode.from_ints([0b011], 3)
    assert is_equivalent(a, b) is None


def test_invariant_key_is_equivalence_invariant():
    c = simplex(3).pad(9, offset=1)
    perm = [3, 5, 7, 0, 8, 2, 6, 1, 4]
    assert invariant_key(c) == invariant_key(c.permute(perm))


def test_dedupe_codes_collapses_permuted_copies():
    rng = random.Random(11)
    base = LinearCode.from_ints([0b110110, 0b011011], 6)
    copies = [base]
    for _ in range(4):
        perm = list(range(6))
        rng.shuffle(perm)
        copies.append(base.permute(perm))
    assert len(dedupe_codes(copies)) == 1


def test_bicoloured_structure_and_round_trip():
    text = "H=0\n110110\n011011\n101101"
    bc = parse_bicoloured(text)
    assert bc.nu == 5
    assert bc.dim_extended - bc.dim_strict in (0, 1)
    again = parse_bicoloured(dump_bicoloured(bc))
    assert again == bc


def test_bicoloured_rejects_h_codeword():
    with pytest.raises(ValueError):
        BicolouredCode(LinearCode.from_ints([0b0001, 0b0110], 4), 0)


def test_coset_node_weights_shift_by_one():
    bc = parse_bicoloured("H=0\n110110\n011011\n101101")
    node = bc.coset_node_weights()
    total = bc.coset_weight_enumerator().counts
    assert {t + 1: n for t, n in node.items()} == total


def test_bicoloured_equivalence_pins_h():
    bc = parse_bicoloured("H=0\n110110\n011011\n101101")
    phi = is_equivalent_bicoloured(bc, bc)
    assert phi is not None and phi[bc.h_index] == bc.h_index


def test_b_inequality_floors():
    assert {d: b_inequality(d, 0)[0] // 2 for d in (3, 4, 5, 6)} == {
        3: 3,
        4: 11,
        5: 26,
        6: 53,
    }
    b2, kmin, kprime = b_inequality(4, 16)
    assert (kmin, kprime) == (5, 6)
    assert b_inequality(5, 31)[1] == 5
    assert b_inequality(3, 5)[2] is None
