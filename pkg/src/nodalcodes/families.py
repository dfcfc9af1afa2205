"""Constructors for the named binary codes attached to nodal surfaces.

Covers the simplex-type codes, the quadratic Reed-Muller (Kummer) family
and its shortening catalog, the K8 family, two-partition codes, the
two-weight codes of quintic surfaces, the 12/13-dimensional codes of 64-
and 65-nodal sextics, and the maximal codes whose shortenings classify
nodal K3 surfaces for each even degree class.

Boolean functions on the affine space F2^4 are represented as 16-bit masks
(bit p = value at the point with coordinate vector given by the bits of p).
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from typing import Sequence

from .codes import BicolouredCode, LinearCode, parse_bicoloured
from .gf2 import BinaryMatrix, BinaryVector
from .pgradon import multiset_to_code


class DegreeOdd(Exception):
    """Raised for constructions requiring an even degree."""


# ---------------------------------------------------------------------------
# Expectation-checked named codes
# ---------------------------------------------------------------------------


def computed_invariant(code: LinearCode | BicolouredCode, key: str):
    """The named invariant of a code (nu, n, k, kprime, enumerator, ...)."""
    if isinstance(code, BicolouredCode):
        if key == "nu":
            return code.nu
        if key == "n":
            return code.double_prime().effective_length()
        if key == "k":
            return code.dim_strict
        if key == "kprime":
            return code.dim_extended
        if key == "enumerator":
            return dict(code.strict.weight_enumerator().counts)
        if key == "coset_node_weights":
            if code.dim_extended == code.dim_strict:
                return set()
            return set(code.coset_node_weights())
    else:
        if key == "n":
            return code.effective_length()
        if key in ("k", "kprime"):
            return code.dimension
        if key == "enumerator":
            return dict(code.weight_enumerator().counts)
    raise KeyError(f"unknown invariant {key!r} for {type(code).__name__}")


def check_expected(code, expected: dict) -> list[str]:
    """Mismatch descriptions between a code's invariants and expectations."""
    problems = []
    for key, want in expected.items():
        got = computed_invariant(code, key)
        if got != want:
            problems.append(f"{key}: expected {want!r}, got {got!r}")
    return problems


@dataclass(frozen=True)
class NamedCode:
    """A code with its printed invariants, verified at construction time.

    Attributes:
        name: Label of the code.
        code: The LinearCode or BicolouredCode.
        expected: Invariants the construction must reproduce exactly.
        nu_values: Admissible numbers of nodes (isolated nodes padded).
        witness: Node subset realizing the code as a shortening of its
            family's maximal code (empty when not applicable).
        plane: The affine plane used by the construction, if any.
    """

    name: str
    code: LinearCode | BicolouredCode
    expected: dict
    nu_values: tuple[int, ...] = ()
    witness: tuple[int, ...] = ()
    plane: tuple[int, ...] = ()

    def __post_init__(self):
        problems = check_expected(self.code, self.expected)
        if problems:
            raise ValueError(f"{self.name}: " + "; ".join(problems))


# ---------------------------------------------------------------------------
# Simplex-type codes
# ---------------------------------------------------------------------------


def simplex(k: int) -> LinearCode:
    """The simplex code: one column per point of PG(k-1,2)."""
    return multiset_to_code({p: 1 for p in range(1, 1 << k)}, k)


def repeated_simplex(s: int, k: int) -> LinearCode:
    """The s-fold repeated simplex code."""
    return multiset_to_code({p: s for p in range(1, 1 << k)}, k)


def reed_muller1(m: int) -> LinearCode:
    """First order Reed-Muller code: affine functions on F2^m."""
    n = 1 << m
    rows = [BinaryVector(n, (1 << n) - 1)]
    for i in range(m):
        bits = 0
        for p in range(n):
            if (p >> i) & 1:
                bits |= 1 << p
        rows.append(BinaryVector(n, bits))
    return LinearCode(BinaryMatrix(rows, n))


# ---------------------------------------------------------------------------
# Boolean functions on F2^4 as 16-bit masks
# ---------------------------------------------------------------------------

AFFINE_POINTS = 16
ONE_MASK = (1 << AFFINE_POINTS) - 1


def _coordinate_mask(i: int) -> int:
    bits = 0
    for p in range(AFFINE_POINTS):
        if (p >> i) & 1:
            bits |= 1 << p
    return bits


X_MASKS = tuple(_coordinate_mask(i) for i in range(4))

# The standard nondegenerate quadric x1*y1 + x2*y2, pairing bits (0,2), (1,3).
BETA_MASK = 0
for _p in range(AFFINE_POINTS):
    if (((_p >> 0) & (_p >> 2)) ^ ((_p >> 1) & (_p >> 3))) & 1:
        BETA_MASK |= 1 << _p
del _p


def plane_mask(points: Sequence[int]) -> int:
    """Indicator mask of a 2-dimensional affine subspace of F2^4."""
    pts = sorted(points)
    if len(pts) != 4 or len(set(pts)) != 4:
        raise ValueError("an affine plane has 4 distinct points")
    if pts[0] ^ pts[1] ^ pts[2] ^ pts[3]:
        raise ValueError(f"{points} is not an affine plane")
    return sum(1 << p for p in pts)


def _bicoloured_from_masks(
    strict_masks: Sequence[int], u_mask: int | None
) -> tuple[BicolouredCode, tuple[int, ...]]:
    """Build a bicoloured code in its minimal embedding from function masks.

    Coordinate 0 is H; the node coordinates are the points of the union
    support, in ascending point order.  The mask `u_mask`, if given, is the
    generator carrying H.
    """
    union = 0
    for m in strict_masks:
        union |= m
    if u_mask is not None:
        union |= u_mask
    pts = tuple(p for p in range(AFFINE_POINTS) if (union >> p) & 1)
    n = len(pts)
    rows = []
    for m in strict_masks:
        rows.append(BinaryVector.from_bits([0] + [(m >> p) & 1 for p in pts]))
    if u_mask is not None:
        rows.append(BinaryVector.from_bits([1] + [(u_mask >> p) & 1 for p in pts]))
    return BicolouredCode(LinearCode(BinaryMatrix(rows, n + 1)), 0), pts


# ---------------------------------------------------------------------------
# The extended Kummer code and its shortening catalog
# ---------------------------------------------------------------------------


def extended_kummer() -> BicolouredCode:
    """The 6-dimensional code spanned by affine functions and (beta, H)."""
    bc, _ = _bicoloured_from_masks([ONE_MASK, *X_MASKS], BETA_MASK)
    return bc


def kummer_shortening_catalog() -> tuple[list[NamedCode], list[tuple[str, int]]]:
    """The 12 labelled shortenings of the extended Kummer code.

    Returns:
        (codes, strata) where strata lists every admissible (label, nu)
        pair; isolated nodes account for nu above the effective length.
    """
    one = ONE_MASK
    x1, x2, y1, y2 = X_MASKS
    b = BETA_MASK
    table = [
        ("(0)", [one, x1, x2, y1, y2], b, 6, 5, 16, (16,)),
        ("(00)", [x1, x2, y1, y2], b, 5, 4, 15, (15,)),
        ("(i)", [x2, y1, y2], b, 4, 3, 14, (14,)),
        ("(1)", [y1, y2], b, 3, 2, 12, (12, 13)),
        ("(2)", [x2, y2], b, 3, 2, 13, (13,)),
        ("(II)", [x2, y2], None, 2, 2, 12, (12,)),
        ("(III-1)", [x2 ^ y2], b, 2, 1, 12, (12,)),
        ("(III-2)", [y2], b, 2, 1, 10, (10, 11, 12)),
        ("(a)", [y2], None, 1, 1, 8, (8, 9, 10, 11)),
        ("(b)", [], b, 1, 0, 6, (6, 7, 8, 9, 10, 11)),
        ("(c)", [], b ^ one, 1, 0, 10, (10, 11)),
        ("(d)", [], None, 0, 0, 0, tuple(range(11))),
    ]
    codes = []
    strata = []
    for name, gens, u, kprime, k, n, nus in table:
        bc, pts = _bicoloured_from_masks(gens, u)
        codes.append(
            NamedCode(
                name,
                bc,
                {"kprime": kprime, "k": k, "n": n, "nu": n},
                nu_values=nus,
                witness=pts,
            )
        )
        strata.extend((name, nu) for nu in nus)
    return codes, strata


def strata_counts(strata: Sequence[tuple[str, int]]) -> dict[int, int]:
    """Number of strata for each number of nodes."""
    counts: dict[int, int] = {}
    for _, nu in strata:
        counts[nu] = counts.get(nu, 0) + 1
    return counts


# ---------------------------------------------------------------------------
# The K8 code and its shortening catalog
# ---------------------------------------------------------------------------

STANDARD_PLANE = (0, 4, 8, 12)  # the linear plane x1 = x2 = 0


def k8_code(plane: Sequence[int] = STANDARD_PLANE) -> BicolouredCode:
    """The 6-dimensional code spanned by affine functions and (f_plane, H)."""
    f = plane_mask(plane)
    bc, _ = _bicoloured_from_masks([ONE_MASK, *X_MASKS], f)
    return bc


def k8_shortening_catalog() -> tuple[list[NamedCode], list[tuple[str, int]]]:
    """The 15 labelled shortenings of the K8 code."""
    one = ONE_MASK
    x1, x2, x3, x4 = X_MASKS
    # e1..e4 are the points 1, 2, 4, 8.
    planes = {
        "linear-34": (0, 4, 8, 12),  # x1 = x2 = 0, contains the origin
        "linear-12": (0, 1, 2, 3),  # x3 = x4 = 0
        "affine-234": (2, 4, 8, 14),  # e2, e3, e4, e2+e3+e4, origin-free
        "linear-13": (0, 1, 4, 5),  # x2 = x4 = 0
        "affine-4": (8, 9, 10, 11),  # e4 + (x3 = x4 = 0), inside x4 = 1
        "linear-14": (0, 1, 8, 9),  # x2 = x3 = 0
        "mixed": (0, 1, 10, 11),  # 0, e1, e2+e4, e1+e2+e4
    }
    table = [
        ("(0)", [one, x1, x2, x3, x4], "f", "linear-34", 6, 5, 16, (16,)),
        ("(12-1)", [x1, x2, x3, x4], "1+f", "linear-34", 5, 4, 15, (15,)),
        ("(12-2)", [x2, x3, x4], "1+f", "linear-12", 4, 3, 14, (14,)),
        ("(12-3)", [x3, x4], "1+f", "linear-12", 3, 2, 12, (12, 13)),
        ("(4-2)", [x2, x3, x4], "f", "affine-234", 4, 3, 14, (14,)),
        ("(4-3-i)", [x3, x4], "f+1+x2", "linear-13", 3, 2, 12, (12, 13)),
        ("(4-3-ii)", [x3, x4], "f+1+x2", "linear-34", 3, 2, 13, (13,)),
        ("(II-2)", [x3, x4], None, "linear-34", 2, 2, 12, (12,)),
        ("(II-1)", [x4], None, "linear-34", 1, 1, 8, (8, 9, 10, 11)),
        ("(III-1)", [x4], "1+f", "linear-12", 2, 1, 12, (12,)),
        ("(III-2)", [x4], "f", "affine-4", 2, 1, 8, (8, 9, 10, 11, 12)),
        ("(III-3)", [x4], "f", "linear-14", 2, 1, 10, (10, 11, 12)),
        ("(b)", [], "f", "linear-34", 1, 0, 4, tuple(range(4, 12))),
        ("(c)", [], "f+1+x4", "mixed", 1, 0, 8, (8, 9, 10, 11)),
        ("(d)", [], None, "linear-34", 0, 0, 0, tuple(range(11))),
    ]
    codes = []
    strata = []
    for name, gens, u_form, plane_name, kprime, k, n, nus in table:
        plane = planes[plane_name]
        f = plane_mask(plane)
        u = {None: None, "f": f, "1+f": one ^ f, "f+1+x2": f ^ one ^ x2,
             "f+1+x4": f ^ one ^ x4}[u_form]
        bc, pts = _bicoloured_from_masks(gens, u)
        # (III-1) is the one entry that is not itself a node-subset
        # shortening: any shortening keeping the support of its weight-12
        # coset word also keeps two independent strict generators, which
        # yields the larger (12-3) code.  Its witness is left empty.
        witness = pts
        if k8_code(plane).shorten_nodes(pts).extended != bc.extended:
            witness = ()
        codes.append(
            NamedCode(
                name,
                bc,
                {"kprime": kprime, "k": k, "n": n, "nu": n},
                nu_values=nus,
                witness=witness,
                plane=plane,
            )
        )
        strata.extend((name, nu) for nu in nus)
    return codes, strata


# ---------------------------------------------------------------------------
# Two-partition (Segre) codes
# ---------------------------------------------------------------------------


def two_partition_code(d: int) -> LinearCode:
    """The code on the C(d,2) coordinate pairs spanned by the d stars.

    Generator i is the indicator of the pairs containing i; the d
    generators sum to zero, so the dimension is d - 1.
    """
    pairs = [(i, j) for i in range(d) for j in range(i + 1, d)]
    rows = [
        BinaryVector.from_bits([1 if i in p else 0 for p in pairs])
        for i in range(d)
    ]
    return LinearCode(BinaryMatrix(rows, len(pairs)))


def segre_code(d: int) -> LinearCode:
    """The (d/2)-times repeated two-partition code of an even degree d."""
    if d % 2:
        raise DegreeOdd(f"degree {d} is odd")
    m = d // 2
    pairs = [(i, j) for i in range(d) for j in range(i + 1, d)]
    rows = [
        BinaryVector.from_bits([1 if i in p else 0 for p in pairs] * m)
        for i in range(d)
    ]
    return LinearCode(BinaryMatrix(rows, m * len(pairs)))


# ---------------------------------------------------------------------------
# Two-weight codes of quintic surfaces (weights 16 and 20, n <= k + 26)
# ---------------------------------------------------------------------------

QUINTIC_ROWS = {
    1: (31, 5, 31, 0),
    2: (30, 4, 15, 0),
    3: (29, 3, 6, 1),
    4: (28, 3, 7, 0),
    5: (28, 2, 1, 2),
    6: (26, 2, 2, 1),
    7: (24, 2, 3, 0),
    8: (20, 1, 0, 1),
    9: (16, 1, 1, 0),
    10: (0, 0, 0, 0),
}


def quintic_code(row: int) -> NamedCode:
    """The unique code with the given row's (n, k, a16, a20) parameters."""
    if row not in QUINTIC_ROWS:
        raise ValueError(f"row {row} out of range 1..10")
    n, k, a16, a20 = QUINTIC_ROWS[row]
    if row == 1:
        code = simplex(5)
    elif row == 2:
        code = repeated_simplex(2, 4)
    elif row == 3:
        # A line of PG(2,2) with multiplicity 3, the other points with 5.
        code = multiset_to_code({1: 3, 2: 3, 3: 3, 4: 5, 5: 5, 6: 5, 7: 5}, 3)
    elif row == 4:
        code = repeated_simplex(4, 3)
    elif row == 5:
        code = multiset_to_code({1: 8, 2: 8, 3: 12}, 2)
    elif row == 6:
        code = multiset_to_code({1: 6, 2: 10, 3: 10}, 2)
    elif row == 7:
        code = repeated_simplex(8, 2)
    elif row in (8, 9):
        code = repeated_simplex(n, 1)
    else:
        code = LinearCode.zero(0)
    enum = {0: 1}
    if a16:
        enum[16] = a16
    if a20:
        enum[20] = a20
    return NamedCode(f"row-{row}", code, {"n": n, "k": k, "enumerator": enum})


# ---------------------------------------------------------------------------
# Codes of 64- and 65-nodal sextic surfaces
# ---------------------------------------------------------------------------


def _load_data(name: str) -> str:
    return resources.files("nodalcodes.data").joinpath(name).read_text()


_SEXTIC_65 = [
    ("(1)", "sextic65_1.txt", 12, {0: 1, 24: 630, 32: 3087, 40: 378}),
    ("(2)", "sextic65_2.txt", 12, {0: 1, 24: 502, 32: 3087, 40: 506}),
    ("(3)", "sextic65_3.txt", 12, {0: 1, 24: 390, 32: 3055, 40: 650}),
]

_SEXTIC_64 = [
    ("(a)", "sextic64_a.txt", 11, {0: 1, 24: 310, 32: 1551, 40: 186}),
    ("(b)", "sextic64_b.txt", 11, {0: 1, 24: 246, 32: 1551, 40: 250}),
    ("(c)", "sextic64_c.txt", 11, {0: 1, 24: 246, 32: 1551, 40: 250}),
    ("(d)", "sextic64_d.txt", 11, {0: 1, 24: 246, 32: 1551, 40: 250}),
    ("(e)", "sextic64_e.txt", 11, {0: 1, 24: 243, 32: 1559, 40: 244, 56: 1}),
    ("(f)", "sextic64_f.txt", 12, {0: 1, 24: 630, 32: 3087, 40: 378}),
    ("(g)", "sextic64_g.txt", 12, {0: 1, 24: 502, 32: 3087, 40: 506}),
]


def sextic_candidates(nodes: int) -> list[NamedCode]:
    """The candidate codes for sextic surfaces with 64 or 65 nodes."""
    if nodes == 65:
        specs = _SEXTIC_65
    elif nodes == 64:
        specs = _SEXTIC_64
    else:
        raise ValueError("nodes must be 64 or 65")
    out = []
    for name, fname, k, enum in specs:
        code = LinearCode(BinaryMatrix.parse(_load_data(fname)))
        out.append(NamedCode(name, code, {"k": k, "enumerator": enum}))
    return out


def barth_codes() -> tuple[BicolouredCode, LinearCode]:
    """The bicoloured code of the 65-nodal sextic and its strict part."""
    bc = parse_bicoloured(_load_data("barth_extended.txt"))
    if bc.dim_extended != 13 or bc.dim_strict != 12:
        raise ValueError("stored 65-node matrix has unexpected dimensions")
    return bc, bc.strict


# ---------------------------------------------------------------------------
# Maximal codes for nodal K3 surfaces of each even degree class
# ---------------------------------------------------------------------------


def _pg_rows(functionals: Sequence[int], pts: Sequence[int], u_support: Sequence[int]):
    """Extended generator rows over PG(3,2) point coordinates (H first)."""
    n = len(pts)
    rows = []
    for a in functionals:
        bits = 0
        for j, p in enumerate(pts):
            if (a & p).bit_count() & 1:
                bits |= 1 << (j + 1)
        rows.append(BinaryVector(n + 1, bits))
    ubits = 1
    for j, p in enumerate(pts):
        if p in u_support:
            ubits |= 1 << (j + 1)
    rows.append(BinaryVector(n + 1, ubits))
    return BicolouredCode(LinearCode(BinaryMatrix(rows, n + 1)), 0)


def _hyperplane_line_code() -> NamedCode:
    """nu=15: hyperplane-complement functions plus the indicator of a line."""
    pts = list(range(1, 16))
    bc = _pg_rows([1, 2, 4, 8], pts, [1, 2, 3])
    return NamedCode(
        "hyperplane-line",
        bc,
        {"nu": 15, "kprime": 5, "k": 4, "coset_node_weights": {3, 7, 11}},
    )


def _affine_origin_code() -> NamedCode:
    """nu=15: first order Reed-Muller code with H at the origin coordinate."""
    bc = BicolouredCode(reed_muller1(4), 0)
    return NamedCode(
        "affine-origin",
        bc,
        {"nu": 15, "kprime": 5, "k": 4, "coset_node_weights": {7, 15}},
    )


def _affine_origin_shortened() -> NamedCode:
    """nu=14: one-node shortening removing the full-support coset word."""
    bc = BicolouredCode(reed_muller1(4), 0).shorten_nodes(list(range(14)))
    return NamedCode(
        "affine-origin-shortened",
        bc,
        {"nu": 14, "kprime": 4, "k": 3, "coset_node_weights": {7}},
    )


def _affine_quadric_code() -> NamedCode:
    """nu=15: linear functions plus beta + 1, with H at the origin."""
    rows = [BinaryVector(16, m) for m in X_MASKS]
    rows.append(BinaryVector(16, BETA_MASK ^ ONE_MASK))
    bc = BicolouredCode(LinearCode(BinaryMatrix(rows, 16)), 0)
    return NamedCode(
        "affine-quadric",
        bc,
        {"nu": 15, "kprime": 5, "k": 4, "coset_node_weights": {5, 9}},
    )


def _weight2_maximal() -> NamedCode:
    """nu=14: one-node projection code with coset node weights {2,6,10}."""
    bc = _pg_rows([2, 4, 8], list(range(2, 16)), [2, 3])
    return NamedCode(
        "weight2-projection",
        bc,
        {"nu": 14, "kprime": 4, "k": 3, "coset_node_weights": {2, 6, 10}},
    )


def _weight1_maximal() -> NamedCode:
    """nu=13: two-node projection code with an isolated weight-1 coset node."""
    bc = _pg_rows([4, 8], list(range(3, 16)), [3])
    return NamedCode(
        "weight1-projection",
        bc,
        {"nu": 13, "kprime": 3, "k": 2, "coset_node_weights": {1, 9}},
    )


def _weight14_code() -> NamedCode:
    """nu=14: the unique code with a weight-14 coset node set."""
    rows = [
        BinaryVector.from_support(15, range(1, 9)),
        BinaryVector.from_support(15, range(5, 13)),
        BinaryVector.from_support(15, [1, 2, 5, 6, 9, 10, 13, 14]),
        BinaryVector.from_support(15, [0] + list(range(1, 15))),
    ]
    bc = BicolouredCode(LinearCode(BinaryMatrix(rows, 15)), 0)
    return NamedCode(
        "weight14",
        bc,
        {"nu": 14, "kprime": 4, "k": 3, "coset_node_weights": {6, 14}},
    )


def _weight13_code() -> NamedCode:
    """nu=13: the unique code with a weight-13 coset node set."""
    rows = [
        BinaryVector.from_support(14, range(1, 9)),
        BinaryVector.from_support(14, range(5, 13)),
        BinaryVector.from_support(14, range(14)),
    ]
    bc = BicolouredCode(LinearCode(BinaryMatrix(rows, 14)), 0)
    return NamedCode(
        "weight13",
        bc,
        {"nu": 13, "kprime": 3, "k": 2, "coset_node_weights": {5, 13}},
    )


def k3_maximal_codes(d: int) -> list[NamedCode]:
    """The maximal codes whose shortenings exhaust degree-d nodal K3 codes.

    Coset node weights t obey 2t - d = 0 (mod 8); the exceptional
    full-support codes (t = 13, 14, 15) exist only in the indicated
    residue classes mod 16, and the odd projections (t = 1, 2) do not
    occur in the two smallest degrees.
    """
    if d % 2 or d <= 0:
        raise ValueError("degree must be a positive even number")
    r8, r16 = d % 8, d % 16
    out = []
    if r8 == 0:
        bc = k8_code()
        out.append(
            NamedCode(
                "k8",
                bc,
                {"nu": 16, "kprime": 6, "k": 5, "coset_node_weights": {4, 8, 12}},
            )
        )
    elif r8 == 4:
        out.append(
            NamedCode(
                "extended-kummer",
                extended_kummer(),
                {"nu": 16, "kprime": 6, "k": 5, "coset_node_weights": {6, 10}},
            )
        )
        if d != 4:
            out.append(_weight2_maximal())
        if r16 == 12:
            out.append(_weight14_code())
    elif r8 == 6:
        if r16 == 14:
            out.append(_affine_origin_code())
        else:
            out.append(_affine_origin_shortened())
        out.append(_hyperplane_line_code())
    else:  # r8 == 2
        out.append(_affine_quadric_code())
        if d != 2:
            out.append(_weight1_maximal())
        if r16 == 10:
            out.append(_weight13_code())
    return out
