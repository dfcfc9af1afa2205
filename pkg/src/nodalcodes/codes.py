"""Linear and bicoloured binary codes.

Weight enumerators, MacWilliams/Krawtchouk machinery, shortenings and
projections, code equivalence, the one-weight (Bonisoli) test and the
degree-wise dimension floor used throughout the classification modules.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterator, Sequence

from . import gf2
from .gf2 import BinaryMatrix, BinaryVector


class StrictEqualsExtended(Exception):
    """Coset enumerator requested but the extended code equals the strict one."""


class NonIntegerCoefficient(Exception):
    """MacWilliams transform of an inconsistent enumerator."""


class SearchBudgetExceeded(Exception):
    """An equivalence search ran out of its node budget."""

    def __init__(self, budget: int):
        super().__init__(f"equivalence search budget {budget} exhausted")
        self.budget = budget


class WeightEnumerator:
    """Association weight -> codeword count for a code of dimension totalDim."""

    __slots__ = ("counts", "total_dim")

    def __init__(self, counts: dict[int, int], total_dim: int):
        self.counts = {w: c for w, c in sorted(counts.items()) if c}
        self.total_dim = total_dim

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, WeightEnumerator)
            and self.counts == other.counts
            and self.total_dim == other.total_dim
        )

    def __hash__(self):
        return hash((tuple(sorted(self.counts.items())), self.total_dim))

    def __repr__(self):
        return f"WeightEnumerator({self.counts}, k={self.total_dim})"

    def validate(self) -> None:
        assert sum(self.counts.values()) == 1 << self.total_dim
        assert self.counts.get(0) == 1

    def nonzero_weights(self) -> set[int]:
        return {w for w in self.counts if w != 0}


def krawtchouk(m: int, x: int, n: int, q: int = 2) -> int:
    """K_m(x; n, q) = sum_j (-1)^j C(x,j) C(n-x, m-j) (q-1)^{m-j}, exact."""
    if not 0 <= m <= n:
        raise ValueError("need 0 <= m <= n")
    total = 0
    for j in range(0, m + 1):
        total += (-1) ** j * math.comb(x, j) * math.comb(n - x, m - j) * (q - 1) ** (m - j)
    return total


def macwilliams_dual(we: WeightEnumerator, n: int, k: int) -> WeightEnumerator:
    """Dual enumerator via w_dual(x, y) = 2^-k w(x+y, x-y), in exact integers.

    Coefficient form: b_m = 2^-k sum_j K_m(j; n, 2) a_j.
    """
    out: dict[int, int] = {}
    for m in range(n + 1):
        total = 0
        for j, a in we.counts.items():
            total += krawtchouk(m, j, n) * a
        coeff = Fraction(total, 1 << k)
        if coeff.denominator != 1:
            raise NonIntegerCoefficient(f"dual coefficient at weight {m} is {coeff}")
        if coeff:
            out[m] = int(coeff)
    return WeightEnumerator(out, n - k)


class LinearCode:
    """A binary linear code given by generator rows on nu coordinates.

    The stored basis is the canonical rref of the given generators; the
    original rows are kept for faithful dumps.
    """

    def __init__(self, generators: BinaryMatrix):
        self.generators = generators
        self._rref = gf2.rref(generators)
        self._words: list[int] | None = None

    @classmethod
    def from_bits(cls, bit_rows: Sequence[Sequence[int]], length: int | None = None) -> "LinearCode":
        if not bit_rows:
            return cls(BinaryMatrix([], length or 0))
        return cls(BinaryMatrix.from_bits(bit_rows))

    @classmethod
    def from_ints(cls, rows: Sequence[int], length: int) -> "LinearCode":
        return cls(BinaryMatrix([BinaryVector(length, r) for r in rows], length))

    @classmethod
    def zero(cls, length: int) -> "LinearCode":
        return cls(BinaryMatrix([], length))

    @property
    def length(self) -> int:
        return self.generators.ncols

    @property
    def dimension(self) -> int:
        return self._rref.nrows

    @property
    def basis_bits(self) -> list[int]:
        return [r.bits for r in self._rref.rows]

    def effective_length(self) -> int:
        union = 0
        for b in self.basis_bits:
            union |= b
        return union.bit_count()

    def support_union(self) -> int:
        union = 0
        for b in self.basis_bits:
            union |= b
        return union

    def words_bits(self) -> list[int]:
        if self._words is None:
            self._words = list(gf2.enumerate_span_bits(self.basis_bits))
        return self._words

    def codewords(self) -> Iterator[BinaryVector]:
        for w in self.words_bits():
            yield BinaryVector(self.length, w)

    def contains(self, v: BinaryVector) -> bool:
        return gf2.span_contains(self._rref, v)

    def weight_enumerator(self) -> WeightEnumerator:
        counts: dict[int, int] = {}
        for w in self.words_bits():
            wt = w.bit_count()
            counts[wt] = counts.get(wt, 0) + 1
        return WeightEnumerator(counts, self.dimension)

    def dual(self) -> "LinearCode":
        return LinearCode(gf2.kernel(self._rref))

    def shorten(self, keep: Sequence[int]) -> "LinearCode":
        """Codewords supported inside `keep`, restricted to `keep` (in order)."""
        keep = list(keep)
        outside = [i for i in range(self.length) if i not in set(keep)]
        out_mask = 0
        for i in outside:
            out_mask |= 1 << i
        kept_rows = []
        # Eliminate the outside coordinates: row-reduce with outside columns
        # as leading pivots; rows with empty outside part span the shortening.
        basis: dict[int, int] = {}
        tail: list[int] = []
        for b in self.basis_bits:
            cur = b
            while cur & out_mask:
                p = ((cur & out_mask) & -(cur & out_mask)).bit_length() - 1
                if p in basis:
                    cur ^= basis[p]
                else:
                    basis[p] = cur
                    break
            else:
                tail.append(cur)
        for b in tail:
            kept_rows.append(BinaryVector(self.length, b).restrict(keep))
        return LinearCode(BinaryMatrix(kept_rows, len(keep)))

    def project(self, onto: Sequence[int]) -> "LinearCode":
        """Image of the code under restriction to the coordinates `onto`."""
        onto = list(onto)
        rows = [BinaryVector(self.length, b).restrict(onto) for b in self.basis_bits]
        return LinearCode(BinaryMatrix(rows, len(onto)))

    def pad(self, new_length: int, offset: int = 0) -> "LinearCode":
        """Embed into new_length coordinates, the old ones shifted by offset."""
        rows = [BinaryVector(new_length, b << offset) for b in self.basis_bits]
        return LinearCode(BinaryMatrix(rows, new_length))

    def permute(self, perm: Sequence[int]) -> "LinearCode":
        rows = [BinaryVector(self.length, b).permute(perm) for b in self.basis_bits]
        return LinearCode(BinaryMatrix(rows, self.length))

    def same_span(self, other: "LinearCode") -> bool:
        return self._rref == other._rref

    def __eq__(self, other) -> bool:
        return isinstance(other, LinearCode) and self._rref == other._rref

    def __hash__(self):
        return hash(self._rref)

    def __repr__(self):
        return f"LinearCode(nu={self.length}, k={self.dimension})"


class BicolouredCode:
    """A pair K inside K' with one distinguished coordinate H.

    The extended code K' lives on nu + 1 coordinates; the H unit vector is
    never a codeword; the strict part K is the shortening to the node
    coordinates and satisfies dim K' - dim K in {0, 1}.
    """

    def __init__(self, extended: LinearCode, h_index: int = 0):
        if not 0 <= h_index < max(extended.length, 1):
            raise ValueError("h_index out of range")
        h_unit = BinaryVector.from_support(extended.length, [h_index])
        if extended.contains(h_unit):
            raise ValueError("the H unit vector must not be a codeword")
        self.extended = extended
        self.h_index = h_index
        self.node_coords = [i for i in range(extended.length) if i != h_index]
        self.strict = extended.shorten(self.node_coords)
        if extended.dimension - self.strict.dimension not in (0, 1):
            raise ValueError("dim K' - dim K must be 0 or 1")

    @property
    def nu(self) -> int:
        return len(self.node_coords)

    @property
    def dim_extended(self) -> int:
        return self.extended.dimension

    @property
    def dim_strict(self) -> int:
        return self.strict.dimension

    def double_prime(self) -> LinearCode:
        """K'' = projection of K' forgetting H (injective since H not in K')."""
        return self.extended.project(self.node_coords)

    def coset_words_bits(self) -> list[int]:
        """Words of K' \\ K as bit rows on the extended coordinates."""
        if self.dim_extended == self.dim_strict:
            raise StrictEqualsExtended("K' = K: no coset")
        h_bit = 1 << self.h_index
        return [w for w in self.extended.words_bits() if w & h_bit]

    def coset_weight_enumerator(self) -> WeightEnumerator:
        """Weights of K' \\ K with the H coordinate counted (values t + 1)."""
        counts: dict[int, int] = {}
        for w in self.coset_words_bits():
            wt = w.bit_count()
            counts[wt] = counts.get(wt, 0) + 1
        return WeightEnumerator(counts, self.dim_extended)

    def coset_node_weights(self) -> dict[int, int]:
        """Node-part weights t of K' \\ K (H not counted)."""
        counts: dict[int, int] = {}
        for w in self.coset_words_bits():
            wt = w.bit_count() - 1
            counts[wt] = counts.get(wt, 0) + 1
        return counts

    def shorten_nodes(self, keep_nodes: Sequence[int]) -> "BicolouredCode":
        """Shorten to a subset of node coordinates; H is always kept first."""
        keep = [self.h_index] + [self.node_coords[i] for i in keep_nodes]
        return BicolouredCode(self.extended.shorten(keep), 0)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BicolouredCode)
            and self.h_index == other.h_index
            and self.extended == other.extended
        )

    def __hash__(self):
        return hash((self.h_index, self.extended))

    def __repr__(self):
        return f"BicolouredCode(nu={self.nu}, k'={self.dim_extended}, k={self.dim_strict})"


def parse_bicoloured(text: str) -> BicolouredCode:
    """Parse the text format with a `H=<col>` header line declaring H's column."""
    h_index = 0
    lines = []
    for line in text.splitlines():
        stripped = line.strip()
        if stripped.startswith("H="):
            h_index = int(stripped[2:])
            continue
        lines.append(line)
    return BicolouredCode(LinearCode(BinaryMatrix.parse("\n".join(lines))), h_index)


def dump_bicoloured(bc: BicolouredCode) -> str:
    return f"H={bc.h_index}\n" + str(bc.extended.generators)


# ---------------------------------------------------------------------------
# Equivalence
# ---------------------------------------------------------------------------


def _coordinate_signatures(code: LinearCode, colors: Sequence[int] | None = None):
    """Per-coordinate invariant: counts of codewords through the coordinate, by weight."""
    nu = code.length
    per_coord: list[dict[int, int]] = [dict() for _ in range(nu)]
    for w in code.words_bits():
        wt = w.bit_count()
        x = w
        while x:
            i = (x & -x).bit_length() - 1
            x &= x - 1
            d = per_coord[i]
            d[wt] = d.get(wt, 0) + 1
    sigs = []
    for i in range(nu):
        color = colors[i] if colors is not None else 0
        sigs.append((color, tuple(sorted(per_coord[i].items()))))
    return sigs


def _column_points(code: LinearCode) -> list[int]:
    """Each coordinate as a point of F2^k in the code's reduced basis."""
    basis = code.basis_bits
    pts = []
    for j in range(code.length):
        p = 0
        for i, row in enumerate(basis):
            if (row >> j) & 1:
                p |= 1 << i
        pts.append(p)
    return pts


def is_equivalent(
    a: LinearCode,
    b: LinearCode,
    colors_a: Sequence[int] | None = None,
    colors_b: Sequence[int] | None = None,
    budget: int = 2_000_000,
) -> list[int] | None:
    """A coordinate permutation phi with a.permute(phi) == b, or None.

    Colors, when given, must be preserved (used to pin the H coordinate of
    bicoloured codes).  Two codes are permutation-equivalent iff some
    linear automorphism of F2^k maps the column-point multiset (with
    colors) of one onto the other's; the search runs over images of a
    point basis, verifying multiplicities over the whole partial span at
    every step, so any full assignment is already certified.
    """
    if a.length != b.length or a.dimension != b.dimension:
        return None
    if a.weight_enumerator() != b.weight_enumerator():
        return None
    nu = a.length
    ca = list(colors_a) if colors_a is not None else [0] * nu
    cb = list(colors_b) if colors_b is not None else [0] * nu
    pts_a = _column_points(a)
    pts_b = _column_points(b)

    def point_profiles(pts, colors):
        prof: dict[int, dict[int, int]] = {}
        for p, c in zip(pts, colors):
            prof.setdefault(p, {})[c] = prof.setdefault(p, {}).get(c, 0) + 1
        return {p: tuple(sorted(d.items())) for p, d in prof.items()}

    prof_a = point_profiles(pts_a, ca)
    prof_b = point_profiles(pts_b, cb)
    if sorted(prof_a.values()) != sorted(prof_b.values()):
        return None
    if prof_a.get(0) != prof_b.get(0):
        return None

    k = a.dimension
    # A point basis for a, rarest profiles first (smallest branching).
    by_profile: dict[tuple, list[int]] = {}
    for q, pr in prof_b.items():
        if q:
            by_profile.setdefault(pr, []).append(q)
    for lst in by_profile.values():
        lst.sort()
    ordered = sorted(
        (p for p in prof_a if p),
        key=lambda p: (len(by_profile.get(prof_a[p], ())), p),
    )
    abasis: list[int] = []
    span_set = {0}
    for p in ordered:
        if p not in span_set:
            abasis.append(p)
            span_set |= {p ^ x for x in span_set}
        if len(abasis) == k:
            break

    nodes = [0]
    span_pairs: list[list[tuple[int, int]]] = [[]]

    def dfs(depth: int) -> bool:
        nodes[0] += 1
        if nodes[0] > budget:
            raise SearchBudgetExceeded(budget)
        if depth == k:
            return True
        bi = abasis[depth]
        current = span_pairs[depth]
        images = {gx for _, gx in current}
        for q in by_profile.get(prof_a[bi], ()):
            if q in images:
                continue
            new = [(bi, q)]
            ok = True
            for x, gx in current:
                y, gy = x ^ bi, gx ^ q
                if prof_a.get(y) != prof_b.get(gy):
                    ok = False
                    break
                new.append((y, gy))
            if not ok:
                continue
            span_pairs.append(current + new)
            if dfs(depth + 1):
                return True
            span_pairs.pop()
        return False

    if not dfs(0):
        return None
    gmap = {0: 0}
    for x, gx in span_pairs[-1]:
        gmap[x] = gx
    slots: dict[tuple[int, int], list[int]] = {}
    for j, (q, c) in enumerate(zip(pts_b, cb)):
        slots.setdefault((q, c), []).append(j)
    phi = [0] * nu
    for i, (p, c) in enumerate(zip(pts_a, ca)):
        phi[i] = slots[(gmap[p], c)].pop(0)
    assert a.permute(phi).same_span(b)
    return phi


def is_equivalent_bicoloured(a: BicolouredCode, b: BicolouredCode, budget: int = 2_000_000):
    """Equivalence of bicoloured codes fixing the H coordinate."""
    colors_a = [1 if i == a.h_index else 0 for i in range(a.extended.length)]
    colors_b = [1 if i == b.h_index else 0 for i in range(b.extended.length)]
    return is_equivalent(a.extended, b.extended, colors_a, colors_b, budget)


def invariant_key(code: LinearCode) -> tuple:
    """A deterministic equivalence-invariant sort/bucket key."""
    we = code.weight_enumerator()
    sigs = tuple(sorted(_coordinate_signatures(code)))
    return (
        code.length,
        code.dimension,
        tuple(sorted(we.counts.items())),
        sigs,
    )


def invariant_key_bicoloured(bc: BicolouredCode) -> tuple:
    colors = [1 if i == bc.h_index else 0 for i in range(bc.extended.length)]
    we = bc.extended.weight_enumerator()
    sigs = tuple(sorted(_coordinate_signatures(bc.extended, colors)))
    return (
        bc.nu,
        bc.dim_extended,
        bc.dim_strict,
        tuple(sorted(we.counts.items())),
        sigs,
    )


def dedupe_codes(codes: list[LinearCode]) -> list[LinearCode]:
    """Representatives up to equivalence, in deterministic canonical order."""
    buckets: dict[tuple, list[LinearCode]] = {}
    for c in codes:
        buckets.setdefault(invariant_key(c), []).append(c)
    reps: list[tuple[tuple, LinearCode]] = []
    for key in sorted(buckets):
        bucket_reps: list[LinearCode] = []
        for c in buckets[key]:
            if not any(is_equivalent(c, r) is not None for r in bucket_reps):
                bucket_reps.append(c)
        for r in bucket_reps:
            reps.append((key, r))
    reps.sort(key=lambda kr: (kr[0], str(gf2.rref(kr[1].generators))))
    return [r for _, r in reps]


def dedupe_bicoloured(codes: list[BicolouredCode]) -> list[BicolouredCode]:
    buckets: dict[tuple, list[BicolouredCode]] = {}
    for c in codes:
        buckets.setdefault(invariant_key_bicoloured(c), []).append(c)
    reps: list[tuple[tuple, BicolouredCode]] = []
    for key in sorted(buckets):
        bucket_reps: list[BicolouredCode] = []
        for c in buckets[key]:
            if not any(is_equivalent_bicoloured(c, r) is not None for r in bucket_reps):
                bucket_reps.append(c)
        for r in bucket_reps:
            reps.append((key, r))
    reps.sort(key=lambda kr: (kr[0], str(gf2.rref(kr[1].extended.generators))))
    return [r for _, r in reps]


# ---------------------------------------------------------------------------
# One-weight codes and the dimension floor
# ---------------------------------------------------------------------------


def bonisoli_check(code: LinearCode) -> tuple[int, int] | None:
    """(s, k) with code = s-fold repeated simplex of dimension k, if one-weight.

    A spanning code with exactly one nonzero weight is an s-fold repetition
    of the simplex code: weight s * 2^(k-1), effective length s (2^k - 1).
    """
    k = code.dimension
    if k == 0:
        return None
    weights = code.weight_enumerator().nonzero_weights()
    if len(weights) != 1:
        return None
    (w,) = weights
    s, rem = divmod(w, 1 << (k - 1))
    if rem or code.effective_length() != s * ((1 << k) - 1):
        return None
    return (s, k)


def b_inequality(d: int, nu: int) -> tuple[int, int, int | None]:
    """(b2, kmin, k'min) for degree d: dim K >= nu - floor(b2 / 2).

    b2 = 10 + 12 C(d-1, 3) - d (d-4)^2; for even d the extended code gains
    one: dim K' >= nu - floor(b2/2) + 1.
    """
    if d < 1:
        raise ValueError("degree must be positive")
    b2 = 10 + 12 * math.comb(d - 1, 3) - d * (d - 4) ** 2
    kmin = nu - b2 // 2
    kprimemin = kmin + 1 if d % 2 == 0 else None
    return (b2, kmin, kprimemin)
