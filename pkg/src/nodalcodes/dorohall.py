"""Graph constructions and checks: Petersen/Kneser graphs, the 65-vertex
locally-Petersen graph built two ways (Frobenius conjugacy class over F_25
and elliptic quadric in PG(3,5)), distance-regularity, independence-set
enumeration, and the code spanned by radius-3 spheres.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .codes import LinearCode
from .exactalg import F25, pg_normalize, pg_points


class NotDistanceRegular(Exception):
    """Carries a witness pair of vertices."""


class BudgetExhausted(Exception):
    def __init__(self, budget: int):
        super().__init__(f"search budget of {budget} nodes exhausted")
        self.budget = budget


@dataclass(frozen=True)
class Graph:
    """Undirected loop-free graph: vertex labels plus packed adjacency rows
    (bit j of adjacency[i] set iff {i, j} is an edge)."""

    labels: tuple
    adjacency: tuple[int, ...]

    def __post_init__(self):
        n = len(self.adjacency)
        for i, row in enumerate(self.adjacency):
            if (row >> i) & 1:
                raise ValueError(f"loop at vertex {i}")
            if row >> n:
                raise ValueError(f"adjacency row {i} out of range")
        for i in range(n):
            for j in range(i + 1, n):
                if ((self.adjacency[i] >> j) & 1) != ((self.adjacency[j] >> i) & 1):
                    raise ValueError(f"asymmetric adjacency at ({i}, {j})")

    @property
    def order(self) -> int:
        return len(self.adjacency)

    @property
    def size(self) -> int:
        return sum(row.bit_count() for row in self.adjacency) // 2

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adjacency]

    def has_edge(self, i: int, j: int) -> bool:
        return bool((self.adjacency[i] >> j) & 1)

    def neighbours(self, i: int) -> list[int]:
        return _bits_of(self.adjacency[i])

    def distances_from(self, start: int) -> list[int]:
        """BFS distance to every vertex (-1 for unreachable)."""
        dist = [-1] * self.order
        dist[start] = 0
        frontier = [start]
        d = 0
        while frontier:
            d += 1
            nxt = []
            for v in frontier:
                for w in self.neighbours(v):
                    if dist[w] < 0:
                        dist[w] = d
                        nxt.append(w)
            frontier = nxt
        return dist

    def induced(self, vertices: list[int]) -> "Graph":
        pos = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            bits = 0
            for w in vertices:
                if w != v and self.has_edge(v, w):
                    bits |= 1 << pos[w]
            rows.append(bits)
        return Graph(tuple(self.labels[v] for v in vertices), tuple(rows))

    def serialize(self) -> str:
        n = self.order
        return "\n".join(
            "".join("1" if (row >> j) & 1 else "0" for j in range(n))
            for row in self.adjacency
        )


def _bits_of(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def graph_from_edges(labels, edges) -> Graph:
    n = len(labels)
    rows = [0] * n
    for i, j in edges:
        if i == j:
            raise ValueError("loop edge")
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    return Graph(tuple(labels), tuple(rows))


# ---------------------------------------------------------------------------
# Kneser / Petersen
# ---------------------------------------------------------------------------


def kneser(n: int, k: int) -> Graph:
    """Vertices are the k-subsets of an n-set, edges the disjoint pairs."""
    if n < 2 * k:
        raise ValueError("kneser graph requires n >= 2k")
    labels = [frozenset(s) for s in combinations(range(n), k)]
    edges = [
        (i, j)
        for i in range(len(labels))
        for j in range(i + 1, len(labels))
        if not labels[i] & labels[j]
    ]
    return graph_from_edges(labels, edges)


def petersen() -> Graph:
    return kneser(5, 2)


# ---------------------------------------------------------------------------
# The 65-vertex graph, first construction: Frobenius conjugacy class
# ---------------------------------------------------------------------------


def _pg1_points() -> list:
    """PG(1,25): the point at infinity followed by the 25 affine points."""
    return [None] + [e for e in F25.elements()]


def _moebius_permutation(a, b, c, d, frob: int, points, index) -> tuple[int, ...]:
    """Permutation of PG(1,25) induced by x -> (a x^s + b)/(c x^s + d),
    where s is the Frobenius power (frob in {0,1})."""
    out = []
    for p in points:
        if p is None:
            img = None if c == F25.zero else F25.mul(a, F25.inv(c))
        else:
            q = F25.frobenius(p) if frob else p
            den = F25.add(F25.mul(c, q), d)
            if den == F25.zero:
                img = None
            else:
                img = F25.mul(F25.add(F25.mul(a, q), b), F25.inv(den))
        out.append(index[img])
    return tuple(out)


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """(p after q): apply q first, then p."""
    return tuple(p[x] for x in q)


def projective_semilinear_group() -> tuple[list[tuple[int, ...]], tuple[int, ...]]:
    """The order-15600 group PSL(2,25) . <Frobenius> as permutations of the
    26 points of PG(1,25), together with the Frobenius permutation itself.

    Matrices are normalized so the first nonzero entry (scanning a, b, c, d)
    is 1; membership in PSL requires the determinant to be a nonzero square.
    """
    points = _pg1_points()
    index = {p: i for i, p in enumerate(points)}
    squares = {F25.mul(e, e) for e in F25.elements() if e != F25.zero}
    elems = F25.elements()
    zero, one = F25.zero, F25.one
    matrices = []
    # One representative per scalar class: first nonzero entry is 1.
    for b in elems:
        for c in elems:
            for d in elems:
                matrices.append((one, b, c, d))
    for c in elems:
        for d in elems:
            matrices.append((zero, one, c, d))
    group = []
    for a, b, c, d in matrices:
        det = F25.sub(F25.mul(a, d), F25.mul(b, c))
        if det not in squares:
            continue
        for frob in (0, 1):
            group.append(_moebius_permutation(a, b, c, d, frob, points, index))
    frobenius = _moebius_permutation(one, zero, zero, one, 1, points, index)
    return group, frobenius


def doro_frobenius() -> tuple[Graph, list[tuple[int, ...]]]:
    """The 65-vertex graph on the conjugacy class of the Frobenius map,
    edges the commuting distinct pairs; also returns the full group."""
    group, frob = projective_semilinear_group()
    cls = sorted({_compose(_compose(g, frob), _invert(g)) for g in group})
    edges = [
        (i, j)
        for i in range(len(cls))
        for j in range(i + 1, len(cls))
        if _compose(cls[i], cls[j]) == _compose(cls[j], cls[i])
    ]
    return graph_from_edges(cls, edges), group


def _invert(p: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


# ---------------------------------------------------------------------------
# Second construction: elliptic quadric in PG(3,5)
# ---------------------------------------------------------------------------


def _q5(x) -> int:
    """q(x) = x1 x2 + x3^2 + 2 x4^2 over F5 (coordinates are 1-tuples)."""
    a, b, c, d = (v[0] for v in x)
    return (a * b + c * c + 2 * d * d) % 5


def quadric_graph() -> Graph:
    """Vertices: points of PG(3,5) with q(x) in {1, -1}; edges: pairs whose
    joining line meets the quadric {q = 0} in exactly two points."""
    from .exactalg import F5

    pts = pg_points(4, F5)
    on_quadric = {p for p in pts if _q5(p) == 0}
    vertices = [p for p in pts if _q5(p) in (1, 4)]
    edges = []
    for i in range(len(vertices)):
        for j in range(i + 1, len(vertices)):
            x, y = vertices[i], vertices[j]
            count = 0
            for t in range(6):
                if t == 5:
                    pt = y
                else:
                    pt = tuple(
                        ((a[0] + t * b[0]) % 5,) for a, b in zip(x, y)
                    )
                if pg_normalize(pt, F5) in on_quadric:
                    count += 1
            if count == 2:
                edges.append((i, j))
    return graph_from_edges(vertices, edges)


# ---------------------------------------------------------------------------
# Distance-regularity and local structure
# ---------------------------------------------------------------------------


def intersection_array(g: Graph) -> dict:
    """Exact distance-regularity check over all ordered vertex pairs.

    Returns {"b": [b_0..b_{d-1}], "c": [c_1..c_d]}; raises
    NotDistanceRegular with a witness pair otherwise.
    """
    n = g.order
    dist = [g.distances_from(v) for v in range(n)]
    diam = max(max(row) for row in dist)
    if min(min(row) for row in dist) < 0:
        raise NotDistanceRegular("graph is disconnected")
    b = [None] * diam
    c = [None] * (diam + 1)
    for u in range(n):
        for v in range(n):
            i = dist[u][v]
            closer = sum(1 for w in g.neighbours(v) if dist[u][w] == i - 1)
            further = sum(1 for w in g.neighbours(v) if dist[u][w] == i + 1)
            if i < diam:
                if b[i] is None:
                    b[i] = further
                elif b[i] != further:
                    raise NotDistanceRegular(f"witness pair ({u}, {v})")
            if i > 0:
                if c[i] is None:
                    c[i] = closer
                elif c[i] != closer:
                    raise NotDistanceRegular(f"witness pair ({u}, {v})")
    return {"b": b, "c": c[1:]}


def is_locally_petersen(g: Graph, budget: int = 200_000) -> bool:
    pet = petersen()
    for v in range(g.order):
        local = g.induced(g.neighbours(v))
        if local.order != 10 or find_isomorphism(local, pet, budget) is None:
            return False
    return True


# ---------------------------------------------------------------------------
# Independent sets
# ---------------------------------------------------------------------------


def independent_sets_of_size(
    g: Graph, size: int, budget: int = 50_000_000
) -> list[int]:
    """All independent sets of the given size, as vertex bitmasks.

    DFS in ascending vertex order, pruning branches where the remaining
    candidates cannot reach the target size; budget counts visited nodes.
    """
    n = g.order
    adj = g.adjacency
    full = (1 << n) - 1
    out = []
    nodes = 0

    def dfs(chosen: int, count: int, candidates: int):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExhausted(budget)
        if count == size:
            out.append(chosen)
            return
        if count + candidates.bit_count() < size:
            return
        while candidates:
            low = candidates & -candidates
            v = low.bit_length() - 1
            candidates ^= low
            if count + 1 + candidates.bit_count() < size:
                return
            dfs(chosen | low, count + 1, candidates & ~adj[v] & ~((low << 1) - 1))

    dfs(0, 0, full)
    return out


def independent_count(g: Graph, size: int, budget: int = 50_000_000) -> int:
    return len(independent_sets_of_size(g, size, budget))


def independence_number(g: Graph, budget: int = 50_000_000) -> int:
    best = 0
    for size in range(g.order, 0, -1):
        if independent_sets_of_size(g, size, budget):
            return size
    return best


def max_independent_sets(g: Graph, budget: int = 50_000_000) -> list[int]:
    """All independent sets of maximum cardinality, as vertex bitmasks."""
    alpha = independence_number(g, budget)
    return independent_sets_of_size(g, alpha, budget) if alpha else []


# ---------------------------------------------------------------------------
# Codes from graphs and group actions
# ---------------------------------------------------------------------------


def spheres_code(g: Graph, radius: int = 3) -> LinearCode:
    """Span of the indicator vectors of the radius-r spheres."""
    rows = []
    for v in range(g.order):
        dist = g.distances_from(v)
        rows.append(sum(1 << w for w, d in enumerate(dist) if d == radius))
    return LinearCode.from_ints(rows, g.order)


def conjugation_vertex_action(
    g: Graph, group: list[tuple[int, ...]]
) -> list[list[int]]:
    """For a graph whose labels are group permutations, the vertex
    permutation induced by conjugation with each group element."""
    index = {lab: i for i, lab in enumerate(g.labels)}
    actions = []
    for elem in group:
        inv = _invert(elem)
        actions.append(
            [index[_compose(_compose(elem, lab), inv)] for lab in g.labels]
        )
    return actions


def group_preserves(g: Graph, vertex_actions: list[list[int]], code: LinearCode) -> bool:
    """Every vertex permutation maps edges to edges and the code to itself."""
    for act in vertex_actions:
        for i in range(g.order):
            image_row = 0
            for j in g.neighbours(i):
                image_row |= 1 << act[j]
            if image_row != g.adjacency[act[i]]:
                return False
        if not code.permute(act).same_span(code):
            return False
    return True


# ---------------------------------------------------------------------------
# Graph isomorphism
# ---------------------------------------------------------------------------


def find_isomorphism(
    g1: Graph, g2: Graph, budget: int = 2_000_000
) -> list[int] | None:
    """A vertex bijection phi with edges of g1 mapping onto edges of g2,
    or None.  Backtracking over vertices ordered to maximize constraints
    from already-mapped neighbours; a found witness is verified edge by
    edge before returning."""
    n = g1.order
    if n != g2.order or g1.size != g2.size:
        return None
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return None
    # order g1's vertices so each has many mapped neighbours
    order = []
    placed = set()
    while len(order) < n:
        best_v, best_score = None, -1
        for v in range(n):
            if v in placed:
                continue
            score = sum(1 for w in g1.neighbours(v) if w in placed)
            if score > best_score:
                best_v, best_score = v, score
        order.append(best_v)
        placed.add(best_v)
    deg1 = g1.degrees()
    deg2 = g2.degrees()
    phi = [-1] * n
    used = [False] * n
    nodes = 0

    def dfs(pos: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExhausted(budget)
        if pos == n:
            return True
        v = order[pos]
        mapped_nbrs = [(w, phi[w]) for w in g1.neighbours(v) if phi[w] >= 0]
        mapped_non = [
            phi[order[i]]
            for i in range(pos)
            if not g1.has_edge(v, order[i])
        ]
        for u in range(n):
            if used[u] or deg2[u] != deg1[v]:
                continue
            if any(not g2.has_edge(u, fu) for _, fu in mapped_nbrs):
                continue
            if any(g2.has_edge(u, fu) for fu in mapped_non):
                continue
            phi[v] = u
            used[u] = True
            if dfs(pos + 1):
                return True
            phi[v] = -1
            used[u] = False
        return False

    if not dfs(0):
        return None
    for i in range(n):
        for j in range(i + 1, n):
            if g1.has_edge(i, j) != g2.has_edge(phi[i], phi[j]):
                raise AssertionError("isomorphism witness failed verification")
    return phi
