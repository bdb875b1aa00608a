"""Classic and extended zero-divisor graphs and their metrics.

Vertices are the nonzero zero divisors in canonical element order; the
adjacency is a dense symmetric boolean matrix over that order.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from zdlab.idealalg import nonzero_zero_divisors
from zdlab.ringkernel import pow_trajectory

CLASSIC = "classic"
EXTENDED = "extended"


@dataclass(eq=False)
class ZDGraph:
    ring: object
    kind: str
    vertices: tuple
    adjacency: np.ndarray = field(repr=False)

    def __post_init__(self):
        self.position = {v: k for k, v in enumerate(self.vertices)}
        self._witness = {}

    def __len__(self):
        return len(self.vertices)

    def adjacent(self, u, v):
        return bool(self.adjacency[self.position[u], self.position[v]])

    def edges(self):
        """Edges as vertex pairs ``(u, v)`` with ``u < v``, in canonical order."""
        rows, cols = np.nonzero(np.triu(self.adjacency, 1))
        return [(self.vertices[i], self.vertices[j]) for i, j in zip(rows, cols)]

    @property
    def edge_count(self):
        return int(np.triu(self.adjacency, 1).sum())

    def neighbors(self, v):
        return [self.vertices[k] for k in np.flatnonzero(self.adjacency[self.position[v]])]

    def witness(self, u, v):
        """Least exponent pair ``(n, m)`` with ``u^n v^m = 0`` for an edge."""
        if not self.adjacent(u, v):
            return None
        if self.kind == CLASSIC:
            return (1, 1)
        key = (u, v)
        if key not in self._witness:
            self._witness[key] = extended_adjacent(self.ring, u, v)
        return self._witness[key]


def _product_zero_matrix(ring, vertices):
    verts = np.asarray(vertices, dtype=np.int64)
    mat = np.zeros((len(verts), len(verts)), dtype=bool)
    for k, v in enumerate(verts):
        mat[k] = ring.zero_product_mask(int(v))[verts]
    return mat


def classic_graph(ring):
    vertices = nonzero_zero_divisors(ring)
    adj = _product_zero_matrix(ring, vertices)
    np.fill_diagonal(adj, False)
    return ZDGraph(ring, CLASSIC, vertices, adj)


def extended_graph(ring):
    vertices = nonzero_zero_divisors(ring)
    pos = {v: k for k, v in enumerate(vertices)}
    zero_prod = _product_zero_matrix(ring, vertices)
    # nonzero powers of a zero divisor are zero divisors, hence vertices
    power_cols = [[pos[p] for p in pow_trajectory(ring, v).powers] for v in vertices]
    # kills[x, w]: w annihilates some nonzero power of x
    kills = np.zeros_like(zero_prod)
    for k, cols in enumerate(power_cols):
        kills[k] = zero_prod[cols].any(axis=0)
    adj = np.zeros_like(zero_prod)
    for k, cols in enumerate(power_cols):
        adj[:, k] = kills[:, cols].any(axis=1)
    np.fill_diagonal(adj, False)
    return ZDGraph(ring, EXTENDED, vertices, adj)


def extended_adjacent(ring, x, y):
    """Exponents ``(n, m)`` with ``x^n y^m = 0``, ``x^n != 0``, ``y^m != 0``,
    or ``None`` when ``x`` and ``y`` are not adjacent.

    The pair returned has the least ``m``, then the least ``n`` (in Z8,
    ``2, 6`` gives ``(2, 1)``). Exponents past the first repeat give no new
    power values, so scanning the trajectories is exhaustive.
    """
    px = pow_trajectory(ring, x).powers
    py = pow_trajectory(ring, y).powers
    for m, b in enumerate(py, 1):
        for n, a in enumerate(px, 1):
            if ring.mul(a, b) == ring.zero:
                return (n, m)
    return None


def _bfs(g, source):
    dist = np.full(len(g), -1, dtype=np.int64)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in np.flatnonzero(g.adjacency[u]):
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance(g, u, v):
    d = _bfs(g, g.position[u])[g.position[v]]
    return math.inf if d < 0 else int(d)


def diameter(g):
    """Largest distance over vertex pairs; 0 for at most one vertex and
    ``math.inf`` for a disconnected graph."""
    n = len(g)
    if n <= 1:
        return 0
    step = g.adjacency.astype(np.float32)
    reach = g.adjacency | np.eye(n, dtype=bool)
    d = 1
    while not reach.all():
        grown = reach | ((reach.astype(np.float32) @ step) > 0)
        if np.array_equal(grown, reach):
            return math.inf
        reach = grown
        d += 1
    return d


def has_triangle(g):
    a = g.adjacency.astype(np.float32)
    return bool(((a @ a) * a).any())


def girth(g):
    """Shortest cycle length, ``math.inf`` for a forest.

    BFS from every vertex; a non-tree edge between ``u`` and ``w`` closes a
    cycle of length at most ``dist[u] + dist[w] + 1`` and the minimum over
    all roots is exact.
    """
    if has_triangle(g):
        return 3
    best = math.inf
    nbrs = [np.flatnonzero(row) for row in g.adjacency]
    for root in range(len(g)):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] >= best:
                break
            for w in nbrs[u]:
                w = int(w)
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def is_complete(g):
    n = len(g)
    return bool(g.adjacency.sum() == n * (n - 1))


def bipartition(g):
    """BFS 2-colouring as a 0/1 array, or ``None`` if an odd cycle exists."""
    color = np.full(len(g), -1, dtype=np.int64)
    for start in range(len(g)):
        if color[start] >= 0:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in np.flatnonzero(g.adjacency[u]):
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return color


def is_complete_bipartite(g):
    if len(g) < 2:
        return False
    color = bipartition(g)
    if color is None:
        return False
    side = color == 0
    if side.all():
        return False
    cross = g.adjacency[np.ix_(side, ~side)]
    return bool(cross.all())


def has_condition_a(g):
    """Every edge lies on a triangle."""
    a = g.adjacency.astype(np.float32)
    common = (a @ a) > 0
    return bool(np.all(common[g.adjacency]))


def graphs_equal(g1, g2):
    if g1.vertices != g2.vertices:
        raise ValueError("graphs have different vertex sets")
    return bool(np.array_equal(g1.adjacency, g2.adjacency))


def extra_edges(sub, sup):
    """Edges of ``sup`` missing from ``sub`` (same vertex set)."""
    if sub.vertices != sup.vertices:
        raise ValueError("graphs have different vertex sets")
    rows, cols = np.nonzero(np.triu(sup.adjacency & ~sub.adjacency, 1))
    return [(sup.vertices[i], sup.vertices[j]) for i, j in zip(rows, cols)]
