"""Packed GF(2) linear algebra."""

import pytest
from hypothesis import given, settings, strategies as st

from nodalcodes import gf2
from nodalcodes.gf2 import BinaryMatrix, BinaryVector


def random_matrix(draw, max_rows=6, max_cols=12):
    ncols = draw(st.integers(1, max_cols))
    nrows = draw(st.integers(1, max_rows))
    rows = [
        BinaryVector(ncols, draw(st.integers(0, (1 << ncols) - 1)))
        for _ in range(nrows)
    ]
    return BinaryMatrix(rows, ncols)


@st.composite
def binary_matrices(draw, max_rows=6, max_cols=12):
    return random_matrix(draw, max_rows, max_cols)


def test_vector_parse_str_round_trip():
    v = BinaryVector.parse("101100")
    assert str(v) == "101100"
    assert v.weight() == 3
    assert v.support() == [0, 2, 3]
    assert v.get(0) == 1 and v.get(1) == 0


def test_vector_parse_leftmost_char_is_bit_zero():
    v = BinaryVector.parse("100")
    assert v.bits == 1


def test_vector_operations():
    a = BinaryVector.parse("1100")
    b = BinaryVector.parse("0110")
    assert str(a ^ b) == "1010"
    assert str(a & b) == "0100"
    assert a.restrict([1, 2, 3]).support() == [0]
    assert str(a.concat(b)) == "11000110"


def test_vector_permute_moves_coordinates():
    v = BinaryVector.parse("100")
    assert str(v.permute([2, 0, 1])) == "001"


def test_from_support_bounds():
    with pytest.raises(IndexError):
        BinaryVector.from_support(3, [3])


def test_bits_above_length_are_masked():
    assert BinaryVector(3, 0b11111).bits == 0b111


@given(binary_matrices())
@settings(max_examples=50, deadline=None)
def test_rank_nullity(m):
    r = gf2.rank(m)
    ker = gf2.kernel(m)
    assert r + ker.nrows == m.ncols
    for kv in ker.rows:
        for row in m.rows:
            assert (row.bits & kv.bits).bit_count() % 2 == 0


@given(binary_matrices())
@settings(max_examples=50, deadline=None)
def test_rref_preserves_span(m):
    r = gf2.rref(m)
    assert gf2.rank(r) == r.nrows == gf2.rank(m)
    for row in m.rows:
        assert gf2.span_contains(r, row)


@given(binary_matrices(max_rows=4, max_cols=8))
@settings(max_examples=30, deadline=None)
def test_enumerate_span_bits_size(m):
    r = gf2.rref(m)
    words = set(gf2.enumerate_span_bits([row.bits for row in r.rows]))
    assert len(words) == 1 << r.nrows
    assert 0 in words


@given(binary_matrices(max_rows=5, max_cols=10), st.integers(0, (1 << 10) - 1))
@settings(max_examples=50, deadline=None)
def test_solve_in_span_consistent(m, bits):
    v = BinaryVector(m.ncols, bits & ((1 << m.ncols) - 1))
    combo = gf2.solve_in_span(m, v)
    if combo is None:
        assert not gf2.span_contains(gf2.rref(m), v)
    else:
        acc = 0
        for i in combo.support():
            acc ^= m.rows[i].bits
        assert acc == v.bits
