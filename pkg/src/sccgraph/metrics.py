"""Exact invariants of small simple graphs.

Graphs are taken as a :class:`~sccgraph.graphs.ClassGraph` or a symmetric
boolean adjacency matrix.  Unbounded distances and the girth of a forest are
reported as :data:`INF`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .budget import SEARCH_NODES
from .errors import BudgetExceeded, InputError


class _Infinity:
    """Marker for an infinite distance or girth; compares above every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("inf")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()


def _adj(graph) -> np.ndarray:
    adj = getattr(graph, "adjacency", graph)
    adj = np.asarray(adj, dtype=bool)
    if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
        raise InputError("adjacency must be a square matrix")
    return adj


def _bitsets(adj):
    packed = np.packbits(adj, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def _check_vertex(n, v):
    if not (isinstance(v, (int, np.integer)) and 0 <= v < n):
        raise InputError(f"unknown vertex {v!r}")


def distance(graph, u: int, v: int):
    adj = _adj(graph)
    n = len(adj)
    _check_vertex(n, u)
    _check_vertex(n, v)
    if u == v:
        return 0
    seen = np.zeros(n, dtype=bool)
    seen[u] = True
    frontier = np.zeros(n, dtype=bool)
    frontier[u] = True
    d = 0
    while frontier.any():
        d += 1
        frontier = adj[frontier].any(axis=0) & ~seen
        if frontier[v]:
            return d
        seen |= frontier
    return INF


def distance_matrix(graph) -> np.ndarray:
    """All-pairs BFS distances; -1 marks unreachable pairs."""
    adj = _adj(graph)
    n = len(adj)
    dist = np.full((n, n), -1, dtype=np.int64)
    if n == 0:
        return dist
    np.fill_diagonal(dist, 0)
    reach = np.eye(n, dtype=bool)
    step = adj.astype(np.float32)
    d = 0
    while True:
        d += 1
        nxt = (reach.astype(np.float32) @ step > 0) | reach
        fresh = nxt & ~reach
        if not fresh.any():
            return dist
        dist[fresh] = d
        reach = nxt


def components(graph) -> list[list[int]]:
    adj = _adj(graph)
    n = len(adj)
    seen = np.zeros(n, dtype=bool)
    out = []
    for s in range(n):
        if seen[s]:
            continue
        comp = np.zeros(n, dtype=bool)
        comp[s] = True
        frontier = comp.copy()
        while frontier.any():
            frontier = adj[frontier].any(axis=0) & ~comp
            comp |= frontier
        seen |= comp
        out.append([int(v) for v in np.flatnonzero(comp)])
    return out


def is_connected(graph) -> bool:
    return len(components(graph)) <= 1


def diameter(graph):
    adj = _adj(graph)
    if len(adj) == 0:
        raise InputError("diameter of the empty graph is undefined")
    dist = distance_matrix(adj)
    if (dist < 0).any():
        return INF
    return int(dist.max())


def girth(graph):
    """Length of a shortest cycle, or INF for a forest."""
    adj = _adj(graph)
    n = len(adj)
    if n == 0:
        return INF
    a = adj.astype(np.float32)
    if ((a @ a) * a).any():
        return 3
    nbrs = [np.flatnonzero(r) for r in adj]
    best = INF
    for root in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[root] = 0
        queue = [root]
        for u in queue:
            for w in nbrs[u]:
                w = int(w)
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if best is INF or length < best:
                        best = length
    return best


def is_complete(graph) -> bool:
    adj = _adj(graph)
    n = len(adj)
    return int(adj.sum()) == n * (n - 1)


def _color_sort(P, nbrs):
    """Greedy colouring of the vertex bitset P: vertices and colour numbers, ascending."""
    order, colors = [], []
    uncolored = P
    color = 0
    while uncolored:
        color += 1
        Q = uncolored
        while Q:
            low = Q & -Q
            v = low.bit_length() - 1
            uncolored &= ~low
            Q &= ~low & ~nbrs[v]
            order.append(v)
            colors.append(color)
    return order, colors


def _greedy_clique(nbrs, n):
    best = 0
    for start in range(n):
        size = 1
        P = nbrs[start]
        while P:
            v = max(_bits(P), key=lambda x: (nbrs[x] & P).bit_count())
            size += 1
            P &= nbrs[v]
        best = max(best, size)
    return best


def _bits(P):
    while P:
        low = P & -P
        yield low.bit_length() - 1
        P &= ~low


def clique_number(graph, node_budget: int = SEARCH_NODES) -> int:
    """Exact maximum clique size by branch and bound with colouring bounds."""
    adj = _adj(graph)
    n = len(adj)
    if n == 0:
        return 0
    if is_complete(adj):
        return n
    nbrs = _bitsets(adj)
    best = _greedy_clique(nbrs, n) if n <= 400 else 1
    order, colors = _color_sort((1 << n) - 1, nbrs)
    upper = colors[-1]
    if best >= upper:
        return best
    nodes = 0
    # explicit stack of (clique size, candidate set, colour order, colours, cursor)
    stack = [(0, (1 << n) - 1, order, colors, len(order) - 1)]
    while stack:
        size, P, order, colors, i = stack.pop()
        while i >= 0:
            if size + colors[i] <= best:
                break
            nodes += 1
            if nodes > node_budget:
                raise BudgetExceeded("clique search exceeded node budget", lower=best,
                                     upper=upper)
            v = order[i]
            newP = P & nbrs[v]
            P &= ~(1 << v)
            i -= 1
            if newP == 0:
                if size + 1 > best:
                    best = size + 1
                continue
            stack.append((size, P, order, colors, i))
            size += 1
            P = newP
            order, colors = _color_sort(P, nbrs)
            i = len(order) - 1
    return best


def dominant_vertices(graph) -> list[int]:
    adj = _adj(graph)
    n = len(adj)
    return [int(v) for v in np.flatnonzero(adj.sum(axis=1) == n - 1)]


def isolated_vertices(graph) -> list[int]:
    adj = _adj(graph)
    return [int(v) for v in np.flatnonzero(adj.sum(axis=1) == 0)]


def domination_number(graph, node_budget: int = SEARCH_NODES) -> int:
    """Exact minimum dominating set size; 0 for the empty graph."""
    adj = _adj(graph)
    n = len(adj)
    if n == 0:
        return 0
    full = (1 << n) - 1
    closed = [b | (1 << v) for v, b in enumerate(_bitsets(adj))]
    # greedy upper bound
    covered, greedy = 0, 0
    while covered != full:
        v = max(range(n), key=lambda x: ((closed[x] & ~covered).bit_count(), -x))
        covered |= closed[v]
        greedy += 1
    candidates = sorted(range(n), key=lambda v: (-closed[v].bit_count(), v))
    nodes = 0
    for k in range(1, greedy):
        for combo in itertools.combinations(candidates, k):
            nodes += 1
            if nodes > node_budget:
                raise BudgetExceeded("domination search exceeded node budget", lower=k,
                                     upper=greedy)
            cover = 0
            for v in combo:
                cover |= closed[v]
            if cover == full:
                return k
    return greedy


@dataclass
class MetricsReport:
    vertex_count: int
    edge_count: int
    connected: bool
    component_count: int
    diameter: object
    girth: object
    clique_number: int
    domination_number: int
    dominant_vertices: list[int] = field(default_factory=list)
    isolated_vertices: list[int] = field(default_factory=list)
    is_complete: bool = False
    group: str = ""
    relation: str = ""
    mode: str = ""
    vertex_names: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        def enc(x):
            return "inf" if x is INF else x

        names = self.vertex_names
        out = {
            "group": self.group,
            "relation": self.relation,
            "mode": self.mode,
            "vertex_count": self.vertex_count,
            "edge_count": self.edge_count,
            "connected": self.connected,
            "component_count": self.component_count,
            "diameter": enc(self.diameter),
            "girth": enc(self.girth),
            "clique_number": self.clique_number,
            "domination_number": self.domination_number,
            "dominant_vertices": list(self.dominant_vertices),
            "isolated_vertices": list(self.isolated_vertices),
            "is_complete": self.is_complete,
        }
        if names:
            out["dominant_names"] = [names[v] for v in self.dominant_vertices]
            out["isolated_names"] = [names[v] for v in self.isolated_vertices]
        return out


def metrics_report(graph, node_budget: int = SEARCH_NODES) -> MetricsReport:
    adj = _adj(graph)
    n = len(adj)
    comps = components(adj)
    dist = distance_matrix(adj)
    if n == 0:
        diam = None
    elif (dist < 0).any():
        diam = INF
    else:
        diam = int(dist.max())
    names = []
    if hasattr(graph, "vertices") and getattr(graph, "mode", "") == "class":
        names = [v.name for v in graph.vertices]
    return MetricsReport(
        vertex_count=n,
        edge_count=int(np.triu(adj, 1).sum()),
        connected=len(comps) <= 1,
        component_count=len(comps),
        diameter=diam,
        girth=girth(adj),
        clique_number=clique_number(adj, node_budget),
        domination_number=domination_number(adj, node_budget),
        dominant_vertices=dominant_vertices(adj),
        isolated_vertices=isolated_vertices(adj),
        is_complete=is_complete(adj),
        group=getattr(graph, "group_ref", ""),
        relation=str(getattr(graph, "relation", "")),
        mode=getattr(graph, "mode", ""),
        vertex_names=names,
    )


def divisor_count(n: int) -> int:
    count = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            count += 1 if d * d == n else 2
        d += 1
    return count


def clique_lower_bound_orders(G) -> int:
    """max over element orders n of d(n) - 1: powers of one element give pairwise adjacent classes."""
    return max(divisor_count(int(o)) for o in set(G.element_orders.tolist())) - 1
