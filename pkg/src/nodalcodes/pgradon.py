"""Finite projective geometry, point-multiset <-> code correspondence,
and the Radon transform with its double-transform inversion.

Binary multisets are indexed by the nonzero vectors of F2^k written as
integers 1..2^k-1 (bit i = coordinate i); generic-q multisets are indexed
by normalized tuples from exactalg.pg_points.  Hyperplanes are indexed by
their dual points, iterated in the same canonical order.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

from .codes import LinearCode
from .exactalg import FiniteField, pg_points
from .gf2 import BinaryMatrix, BinaryVector


class NotSpanning(Exception):
    pass


class NonIntegerReconstruction(Exception):
    """The Radon image is not that of an integer multiset."""


# ---------------------------------------------------------------------------
# Binary multisets as dict {point int: multiplicity}
# ---------------------------------------------------------------------------


def code_to_multiset(code: LinearCode) -> dict[int, int]:
    """The multiset of PG(k-1,2) points whose columns generate the code.

    Zero columns are dropped; raises NotSpanning if the generator columns
    fail to span F2^k.
    """
    k = code.dimension
    basis = [BinaryVector(code.length, b) for b in code.basis_bits]
    ms: dict[int, int] = {}
    seen_span = 0
    cols = []
    for j in range(code.length):
        pt = 0
        for i, row in enumerate(basis):
            if row.get(j):
                pt |= 1 << i
        if pt:
            ms[pt] = ms.get(pt, 0) + 1
            cols.append(pt)
    # columns must span F2^k (they do: the basis is k independent rows)
    rk = LinearCode.from_ints(cols, k).dimension if cols else 0
    if rk != k:
        raise NotSpanning(f"columns span dimension {rk} < {k}")
    return ms


def multiset_to_code(ms: dict[int, int], k: int) -> LinearCode:
    """Generator matrix with canonical (ascending point, repeated) columns."""
    cols: list[int] = []
    for pt in sorted(ms):
        if not 0 < pt < (1 << k):
            raise ValueError(f"point {pt} out of range for k={k}")
        cols.extend([pt] * ms[pt])
    rows = []
    for i in range(k):
        bits = 0
        for j, pt in enumerate(cols):
            if (pt >> i) & 1:
                bits |= 1 << j
        rows.append(bits)
    return LinearCode.from_ints(rows, len(cols))


def binary_weights_of_multiset(ms: dict[int, int], k: int) -> dict[int, int]:
    """Map hyperplane index a (1..2^k-1) -> codeword weight n - C(H_a)."""
    n = sum(ms.values())
    out = {}
    for a in range(1, 1 << k):
        on_h = sum(m for pt, m in ms.items() if ((pt & a).bit_count() & 1) == 0)
        out[a] = n - on_h
    return out


def multiset_from_weights(weight_of: dict[int, int] | Callable[[int], int], k: int, n: int) -> dict[int, int]:
    """Reconstruct the multiset from hyperplane weights via Radon inversion.

    weight_of maps each hyperplane index a in 1..2^k-1 to the weight of the
    corresponding codeword; C(H_a) = n - w(a).
    """
    if callable(weight_of):
        w = {a: weight_of(a) for a in range(1, 1 << k)}
    else:
        w = dict(weight_of)
    radon_image = {a: n - w[a] for a in range(1, 1 << k)}
    return radon_invert_binary(radon_image, k, n)


def radon_invert_binary(radon_image: dict[int, int], k: int, total: int) -> dict[int, int]:
    """Invert R(C) over PG(k-1,2): C(x) = 2^-(k-2) [R(R(C))(x) - (2^(k-2)-1) * total]."""
    if k < 2:
        raise ValueError("need k >= 2")
    q = 2
    ms: dict[int, int] = {}
    for x in range(1, 1 << k):
        rr = sum(v for a, v in radon_image.items() if ((x & a).bit_count() & 1) == 0)
        val = Fraction(rr - ((q ** (k - 2) - 1) // (q - 1)) * total, q ** (k - 2))
        if val.denominator != 1 or val < 0:
            raise NonIntegerReconstruction(f"C({x}) = {val}")
        if val:
            ms[x] = int(val)
    if sum(ms.values()) != total:
        raise NonIntegerReconstruction("total multiplicity mismatch")
    return ms


# ---------------------------------------------------------------------------
# Generic-q multisets over exactalg finite fields
# ---------------------------------------------------------------------------


def radon(ms: dict[tuple, int], k: int, field: FiniteField) -> dict[tuple, int]:
    """R(C)(H_a) = sum over points x on the hyperplane a.x = 0 of C(x)."""
    duals = pg_points(k, field)
    out = {}
    for a in duals:
        out[a] = sum(m for x, m in ms.items() if _dot_is_zero(a, x, field))
    return out


def _dot_is_zero(a: tuple, x: tuple, field: FiniteField) -> bool:
    acc = field.zero
    for ai, xi in zip(a, x):
        acc = field.add(acc, field.mul(ai, xi))
    return acc == field.zero


def double_radon_invert(radon_image: dict[tuple, int], k: int, field: FiniteField) -> dict[tuple, int]:
    """C(x) = q^-(k-2) [ R(R(C))(x) - ((q^(k-2)-1)/(q-1)) * integral(C) ].

    The integral of C equals the integral of R(C) divided by the number of
    hyperplanes through a point, (q^(k-1)-1)/(q-1).
    """
    q = field.order
    pts = pg_points(k, field)
    total_r = sum(radon_image.values())
    per_point = (q ** (k - 1) - 1) // (q - 1)
    integral, rem = divmod(total_r, per_point)
    if rem:
        raise NonIntegerReconstruction("integral of C is not integral")
    out = {}
    for x in pts:
        rr = sum(v for a, v in radon_image.items() if _dot_is_zero(a, x, field))
        num = rr - ((q ** (k - 2) - 1) // (q - 1)) * integral
        val = Fraction(num, q ** (k - 2))
        if val.denominator != 1 or val < 0:
            raise NonIntegerReconstruction(f"C({x}) = {val}")
        if val:
            out[x] = int(val)
    return out


def radon_integral_identity(ms: dict[tuple, int], k: int, field: FiniteField) -> bool:
    """integral over dual space of R(C) = ((q^(k-1)-1)/(q-1)) integral of C."""
    q = field.order
    r = radon(ms, k, field)
    return sum(r.values()) == ((q ** (k - 1) - 1) // (q - 1)) * sum(ms.values())
