"""Search machinery: restricted-weight code enumeration up to equivalence,
one-codeword extension enumeration, the 0/1 extension feasibility system
with an exact backtracking solver, and the two-weight parameter scan.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

import numpy as np

from .codes import LinearCode, SearchBudgetExceeded, dedupe_codes
from .gf2 import BinaryMatrix, BinaryVector
from .pgradon import NonIntegerReconstruction, multiset_to_code, radon_invert_binary


# ---------------------------------------------------------------------------
# Restricted-weight enumeration
# ---------------------------------------------------------------------------


def _count_vectors(weights: list[int], total: int):
    """All (a_w) with sum total, iterated deterministically."""
    if len(weights) == 1:
        yield (total,)
        return
    for a in range(total + 1):
        for rest in _count_vectors(weights[1:], total - a):
            yield (a,) + rest


def _assignments(weights: list[int], counts: tuple[int, ...], positions: list[int]):
    """All maps position -> weight with the given multiplicities."""
    if not weights:
        yield {}
        return
    w, cnt = weights[0], counts[0]
    for chosen in combinations(positions, cnt):
        remaining = [p for p in positions if p not in set(chosen)]
        for rest in _assignments(weights[1:], counts[1:], remaining):
            out = dict(rest)
            for p in chosen:
                out[p] = w
            yield out


def enumerate_restricted(
    k: int, max_len: int, weights: set[int], budget: int = 5_000_000
) -> list[LinearCode]:
    """All codes of dimension exactly k, effective length <= max_len, and
    nonzero weights inside `weights`, up to equivalence.

    The search runs over hyperplane-weight assignments: a count vector
    (a_w) fixes the length n = sum(a_w * w) / 2^(k-1), each admissible
    placement of weights on the 2^k - 1 hyperplanes is inverted to a point
    multiset, and the surviving codes are deduplicated.
    """
    weights = sorted(set(weights) - {0})
    if k == 0:
        return [LinearCode.zero(0)]
    if k == 1:
        return [
            multiset_to_code({1: w}, 1) for w in weights if 0 < w <= max_len
        ]
    m = (1 << k) - 1
    candidates: list[LinearCode] = []
    spent = 0
    for counts in _count_vectors(weights, m):
        twice = sum(a * w for a, w in zip(counts, weights))
        n, rem = divmod(twice, 1 << (k - 1))
        if rem or n > max_len:
            continue
        cost = math.comb(m, counts[0])
        left = m - counts[0]
        for a in counts[1:]:
            cost *= math.comb(left, a)
            left -= a
        spent += cost
        if spent > budget:
            raise SearchBudgetExceeded(budget)
        for assign in _assignments(weights, counts, list(range(1, m + 1))):
            radon_image = {a: n - assign[a] for a in range(1, m + 1)}
            try:
                ms = radon_invert_binary(radon_image, k, n)
            except NonIntegerReconstruction:
                continue
            code = multiset_to_code(ms, k)
            if code.dimension == k:
                candidates.append(code)
    return dedupe_codes(candidates)


# ---------------------------------------------------------------------------
# One-codeword extensions
# ---------------------------------------------------------------------------


def enumerate_extensions(
    base: LinearCode,
    allowed_coset_weights: set[int],
    max_total_len: int,
    budget: int = 20_000_000,
) -> list[LinearCode]:
    """All (dim+1)-dimensional codes containing the base whose coset
    weights lie in the allowed set, up to equivalence.

    The new generator u runs over all vectors on the base coordinates
    extended by delta fresh coordinates; fresh coordinates are all-ones
    without loss of generality (zero columns never enlarge a code).
    """
    n0 = base.length
    allowed = set(allowed_coset_weights)
    words = base.words_bits()
    max_delta = max(max_total_len - n0, 0)
    if (1 << n0) * (max_delta + 1) > budget:
        raise SearchBudgetExceeded(budget)
    found: list[LinearCode] = []
    for delta in range(max_delta + 1):
        fresh = ((1 << delta) - 1) << n0
        n = n0 + delta
        for ubits in range(1 << n0):
            u = ubits | fresh
            if all((w ^ u).bit_count() in allowed for w in words):
                rows = [BinaryVector(n, b) for b in base.basis_bits]
                rows.append(BinaryVector(n, u))
                code = LinearCode(BinaryMatrix(rows, n))
                if code.dimension == base.dimension + 1:
                    found.append(code)
    return dedupe_codes(found)


# ---------------------------------------------------------------------------
# Extension feasibility system
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExtensionSystem:
    """The 0/1 system deciding one-codeword extensions of a base code.

    Variables are x_i in {0,1} per base coordinate (the support of the new
    codeword on old coordinates; delta fresh coordinates are all ones) and
    y_c in {0,1} per nonzero base codeword (y_c = 0 when the extended word
    c' + c has weight 16, y_c = 1 when it lies in [28, lam]).

    Constraints: sum x_i = gamma - delta, and for each codeword c of
    weight w, with s = sum of x over the support of c and A = (gamma+w)/2 - 8:
    s = A when y_c = 0, and A - (lam/2 - 8) <= s <= A - 6 when y_c = 1.
    """

    base: LinearCode
    gamma: int
    delta: int
    lam: int
    codewords: tuple[int, ...]

    @property
    def target(self) -> int:
        return self.gamma - self.delta


@dataclass(frozen=True)
class ExtensionSolution:
    x: BinaryVector
    y: tuple[int, ...]


@dataclass(frozen=True)
class SolveResult:
    status: str  # "complete" or "budgeted"
    solutions: tuple[ExtensionSolution, ...]
    nodes: int
    frontier: tuple[tuple[int, ...], ...] = ()


def build_extension_system(
    base: LinearCode, gamma: int, delta: int, lam: int
) -> ExtensionSystem:
    if delta < 0 or gamma - delta < 0:
        raise ValueError("need delta >= 0 and gamma - delta >= 0")
    if lam % 2:
        raise ValueError("the weight cap must be even")
    codewords = tuple(w for w in base.words_bits() if w)
    return ExtensionSystem(base, gamma, delta, lam, codewords)


def _codeword_bounds(sys: ExtensionSystem, w: int) -> tuple[int, int, int] | None:
    """(A, L, U): the y=0 target and the y=1 interval, or None if odd."""
    if (sys.gamma + w) % 2:
        return None
    a = (sys.gamma + w) // 2 - 8
    return a, a - (sys.lam // 2 - 8), a - 6


def verify(sys: ExtensionSystem, sol: ExtensionSolution) -> bool:
    """Pure constraint check of a candidate solution."""
    if sol.x.length != sys.base.length or len(sol.y) != len(sys.codewords):
        return False
    if sol.x.weight() != sys.target:
        return False
    for c, y in zip(sys.codewords, sol.y):
        bounds = _codeword_bounds(sys, c.bit_count())
        if bounds is None:
            return False
        a, lo, hi = bounds
        s = (c & sol.x.bits).bit_count()
        if y == 0:
            if s != a:
                return False
        elif not lo <= s <= hi:
            return False
    return True


def solution_from_coset_word(
    sys: ExtensionSystem, word_bits: int
) -> ExtensionSolution:
    """The solution induced by a candidate new-codeword support on the
    base coordinates; y is derived from the actual sums."""
    x = BinaryVector(sys.base.length, word_bits)
    ys = []
    for c in sys.codewords:
        bounds = _codeword_bounds(sys, c.bit_count())
        s = (c & x.bits).bit_count()
        ys.append(0 if bounds is not None and s == bounds[0] else 1)
    return ExtensionSolution(x, tuple(ys))


def solve(
    sys: ExtensionSystem,
    budget: int = 200_000,
    frontier: tuple[tuple[int, ...], ...] | None = None,
) -> SolveResult:
    """Exact depth-first 0/1 search with interval propagation.

    Deterministic: variables ordered by codeword-incidence degree, the
    x=1 branch explored first.  A budgeted run returns the unexplored
    frontier so that a later call can resume from it.
    """
    n = sys.base.length
    ncw = len(sys.codewords)
    if ncw:
        for c in sys.codewords:
            if _codeword_bounds(sys, c.bit_count()) is None:
                return SolveResult("complete", (), 0)
    # Variable order: codeword-incidence degree descending, index ascending.
    degree = [0] * n
    for c in sys.codewords:
        x = c
        while x:
            degree[(x & -x).bit_length() - 1] += 1
            x &= x - 1
    order = sorted(range(n), key=lambda i: (-degree[i], i))

    inc = np.zeros((ncw, n), dtype=np.int32)
    a_vec = np.zeros(ncw, dtype=np.int32)
    lo_vec = np.zeros(ncw, dtype=np.int32)
    hi_vec = np.zeros(ncw, dtype=np.int32)
    for r, c in enumerate(sys.codewords):
        for pos, i in enumerate(order):
            if (c >> i) & 1:
                inc[r, pos] = 1
        a, lo, hi = _codeword_bounds(sys, c.bit_count())
        a_vec[r], lo_vec[r], hi_vec[r] = a, lo, hi
    # suffix[pos] = per-codeword count of undecided coordinates from pos on.
    suffix = np.zeros((ncw, n + 1), dtype=np.int32)
    for pos in range(n - 1, -1, -1):
        suffix[:, pos] = suffix[:, pos + 1] + inc[:, pos]

    target = sys.target
    solutions: list[ExtensionSolution] = []
    stack: list[tuple[int, ...]] = (
        [tuple()] if frontier is None else [tuple(t) for t in frontier]
    )
    nodes = 0
    while stack:
        if nodes >= budget:
            return SolveResult(
                "budgeted",
                tuple(sorted(solutions, key=lambda s: s.x.bits)),
                nodes,
                tuple(stack),
            )
        part = stack.pop()
        nodes += 1
        depth = len(part)
        ones = sum(part)
        if ones > target or ones + (n - depth) < target:
            continue
        if ncw:
            xa = np.array(part, dtype=np.int32)
            s1 = inc[:, :depth] @ xa if depth else np.zeros(ncw, dtype=np.int32)
            und = suffix[:, depth]
            hi_s = s1 + und
            feas = ((s1 <= a_vec) & (a_vec <= hi_s)) | (
                (s1 <= hi_vec) & (lo_vec <= hi_s)
            )
            if not feas.all():
                continue
        if depth == n:
            if ones != target:
                continue
            bits = 0
            for pos, v in enumerate(part):
                if v:
                    bits |= 1 << order[pos]
            ys = []
            ok = True
            for r in range(ncw):
                if s1[r] == a_vec[r]:
                    ys.append(0)
                elif lo_vec[r] <= s1[r] <= hi_vec[r]:
                    ys.append(1)
                else:
                    ok = False
                    break
            if ok:
                solutions.append(
                    ExtensionSolution(BinaryVector(n, bits), tuple(ys))
                )
            continue
        stack.append(part + (0,))
        stack.append(part + (1,))
    return SolveResult(
        "complete", tuple(sorted(solutions, key=lambda s: s.x.bits)), nodes
    )


# ---------------------------------------------------------------------------
# Two-weight parameter scan
# ---------------------------------------------------------------------------


def quintic_parameter_scan() -> tuple[list[tuple], list[tuple]]:
    """Integral parameter rows (n, k, a16, a20, a2perp) for codes with
    weights in {16, 20}, split into n <= k + 26 and the remainder.

    For dimension k the length is bounded by 32(1 - 2^-k) <= n <= 40(1 - 2^-k)
    and a16 = -2^(k-3) n + 5 (2^k - 1), a20 = 2^(k-3) n - 4 (2^k - 1),
    a2perp = -n^2/2 + 71 n/2 - 640 (1 - 2^-k); all three must be
    nonnegative integers.
    """
    restricted: list[tuple] = []
    extra: list[tuple] = []
    for k in range(7):
        frac = 1 - Fraction(1, 1 << k)
        n_lo = math.ceil(32 * frac)
        n_hi = math.floor(40 * frac)
        for n in range(n_lo, n_hi + 1):
            a16 = -Fraction(1 << k, 8) * n + 5 * ((1 << k) - 1)
            a20 = Fraction(1 << k, 8) * n - 4 * ((1 << k) - 1)
            a2p = Fraction(-n * n + 71 * n, 2) - 640 * frac
            if any(v.denominator != 1 or v < 0 for v in (a16, a20, a2p)):
                continue
            row = (n, k, int(a16), int(a20), int(a2p))
            if n <= k + 26:
                restricted.append(row)
            else:
                extra.append(row)
    restricted.sort(key=lambda r: (-r[0], -r[1]))
    extra.sort(key=lambda r: (-r[1], -r[0]))
    return restricted, extra
