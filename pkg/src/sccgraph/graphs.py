"""Conjugacy class graphs (class, expanded) and element relation graphs.

Two nontrivial classes C, D are adjacent under a relation when some x in C and
y in D generate an abelian / nilpotent / solvable subgroup.  Conjugating a
witness pair moves x to the class representative, so the search fixes
``a = rep(C)`` and scans y over D.  If ``<a, y>`` works then so does
``<a, c y c^-1>`` for every c centralising a, hence only one y per orbit of
``C_G(a)`` on D needs testing.
"""

from __future__ import annotations

import enum
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import InputError
from .group import (
    ConjugacyClass,
    FiniteGroup,
    centralizer,
    conjugacy_classes,
    conjugate_vec,
    group_is_abelian,
    group_is_nilpotent,
    group_is_solvable,
    relation_holds,
)


class Relation(str, enum.Enum):
    ABELIAN = "abelian"
    NILPOTENT = "nilpotent"
    SOLVABLE = "solvable"

    def __str__(self):
        return self.value


MODES = ("class", "expanded", "element")


def _relation(rel) -> Relation:
    try:
        return Relation(rel)
    except ValueError:
        raise InputError(f"unknown relation {rel!r}") from None


@dataclass(frozen=True)
class Vertex:
    id: int
    class_id: int
    element: int  # class representative in class mode
    element_order: int
    class_size: int
    name: str

    @property
    def label(self) -> str:
        return f"o{self.element_order}_s{self.class_size}_c{self.class_id}"


@dataclass(eq=False)
class ClassGraph:
    mode: str
    relation: Relation
    vertices: tuple[Vertex, ...]
    adjacency: np.ndarray
    group_ref: str
    include_identity: bool = True

    def __post_init__(self):
        self.adjacency.flags.writeable = False

    def __len__(self):
        return len(self.vertices)

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return int(np.triu(self.adjacency, 1).sum())

    def edges(self) -> list[tuple[int, int]]:
        us, vs = np.nonzero(np.triu(self.adjacency, 1))
        return [(int(u), int(v)) for u, v in zip(us, vs)]

    def vertex_by_name(self, name: str) -> Vertex:
        for v in self.vertices:
            if v.name == name:
                return v
        raise InputError(f"no vertex named {name!r}")

    def __repr__(self):
        return (f"ClassGraph({self.group_ref}, {self.relation.value}/{self.mode}, "
                f"{self.vertex_count} vertices, {self.edge_count} edges)")


# orbit reduction ----------------------------------------------------------------


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x != y:
            if x < y:
                self.parent[y] = x
            else:
                self.parent[x] = y


def orbit_partition(G: FiniteGroup, gens, points) -> list[list[int]]:
    """Orbits of ``<gens>`` acting by conjugation on the invariant set ``points``.

    Each orbit is sorted; orbits are ordered by their smallest element.
    """
    points = np.asarray(sorted(int(p) for p in points), dtype=np.int64)
    pos = {int(p): i for i, p in enumerate(points)}
    uf = _UnionFind(len(points))
    for c in gens:
        images = conjugate_vec(G, points, np.full(len(points), c))
        for i, img in enumerate(images):
            uf.union(i, pos[int(img)])
    orbits: dict[int, list[int]] = {}
    for i, p in enumerate(points):
        orbits.setdefault(uf.find(i), []).append(int(p))
    return sorted(orbits.values(), key=lambda o: o[0])


def _orbit_reps(G, a, D: ConjugacyClass):
    if D.size == 1:
        return [D.representative]
    cache = G._cache.setdefault("orbit_reps", {})
    key = (a, D.id)
    if key not in cache:
        cent = centralizer(G, a)
        cache[key] = [o[0] for o in orbit_partition(G, cent.generators, D.members)]
    return cache[key]


def _group_satisfies(G, rel):
    if rel is Relation.SOLVABLE:
        return group_is_solvable(G)
    if rel is Relation.NILPOTENT:
        return group_is_nilpotent(G)
    return group_is_abelian(G)


# class graphs ---------------------------------------------------------------------


def classes_adjacent(G: FiniteGroup, C: ConjugacyClass, D: ConjugacyClass, rel,
                     shortcuts: bool = True, group_shortcut: bool = True) -> bool:
    """Whether some x in C, y in D satisfy the relation.

    ``group_shortcut=False`` forces real subgroup tests even when the whole
    group satisfies the relation.
    """
    rel = _relation(rel)
    if C.id == 0 or D.id == 0:
        raise InputError("the identity class is not a vertex")
    if C.id == D.id:
        raise InputError("classes_adjacent needs two distinct classes")
    if group_shortcut and _group_satisfies(G, rel):
        return True
    a = C.representative

    def holds(y):
        return relation_holds(G, a, y, rel.value, shortcuts, group_shortcut)

    # the representative is the first orbit representative, test it before
    # paying for the orbit computation
    if holds(D.representative):
        return True
    return any(holds(y) for y in _orbit_reps(G, a, D)[1:])


def classes_adjacent_naive(G: FiniteGroup, C: ConjugacyClass, D: ConjugacyClass, rel) -> bool:
    """Double loop over all x in C, y in D; no conjugation or orbit reduction."""
    rel = _relation(rel)
    return any(relation_holds(G, x, y, rel.value, group_shortcut=False)
               for x in C.members for y in D.members)


def _class_vertices(part):
    return tuple(Vertex(i, c.id, c.representative, c.element_order, c.size, c.name)
                 for i, c in enumerate(part.classes[1:]))


def _class_adjacency(G, rel, workers=1, naive=False, group_shortcut=True):
    part = conjugacy_classes(G)
    classes = part.classes[1:]
    k = len(classes)
    pairs = [(i, j) for i in range(k) for j in range(i + 1, k)]
    if naive:
        def test(pair):
            return classes_adjacent_naive(G, classes[pair[0]], classes[pair[1]], rel)
    else:
        # centralizers first so workers only read the cache
        for c in classes:
            centralizer(G, c.representative)

        def test(pair):
            return classes_adjacent(G, classes[pair[0]], classes[pair[1]], rel,
                                    group_shortcut=group_shortcut)
    if workers > 1 and len(pairs) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            verdicts = list(pool.map(test, pairs))
    else:
        verdicts = [test(p) for p in pairs]
    adj = np.zeros((k, k), dtype=bool)
    for (i, j), ok in zip(pairs, verdicts):
        adj[i, j] = adj[j, i] = ok
    return adj


def build_class_graph(G: FiniteGroup, rel="solvable", *, workers: int = 1,
                      naive: bool = False, group_shortcut: bool = True) -> ClassGraph:
    """Graph on the nontrivial classes in representative order.

    ``naive=True`` swaps in the all-pairs builder (oracle for the orbit
    reduction).  ``group_shortcut=False`` decides every pair by subgroup tests
    even when G itself satisfies the relation.
    """
    rel = _relation(rel)
    cache = G._cache.setdefault("class_graphs", {})
    key = (rel, naive, group_shortcut or naive)
    if key not in cache:
        part = conjugacy_classes(G)
        adj = _class_adjacency(G, rel, workers=workers, naive=naive,
                               group_shortcut=group_shortcut and not naive)
        cache[key] = ClassGraph("class", rel, _class_vertices(part), adj, G.name)
    return cache[key]


def _element_vertices(G, part, include_identity):
    start = 0 if include_identity else 1
    out = []
    for g in range(start, G.order):
        c = part.of(g)
        out.append(Vertex(g - start, c.id, g, c.element_order, c.size, c.name))
    return tuple(out)


def build_expanded_graph(G: FiniteGroup, rel="solvable", *, include_identity: bool = True,
                         workers: int = 1, group_shortcut: bool = True) -> ClassGraph:
    """All elements as vertices; equal or adjacent classes become complete blocks."""
    rel = _relation(rel)
    part = conjugacy_classes(G)
    k = len(part)
    block = np.ones((k, k), dtype=bool)
    block[1:, 1:] = build_class_graph(G, rel, workers=workers,
                                      group_shortcut=group_shortcut).adjacency
    np.fill_diagonal(block, True)
    cls = np.asarray(part.class_of)
    adj = block[np.ix_(cls, cls)]
    np.fill_diagonal(adj, False)
    if not include_identity:
        adj = adj[1:, 1:]
    return ClassGraph("expanded", rel, _element_vertices(G, part, include_identity),
                      np.ascontiguousarray(adj), G.name, include_identity)


def build_element_graph(G: FiniteGroup, rel="solvable", *, include_identity: bool = True,
                        workers: int = 1, group_shortcut: bool = True) -> ClassGraph:
    """x ~ y iff ``<x, y>`` satisfies the relation (commuting / nilpotent / solvable graph).

    Rows are computed for class representatives only, one relation test per
    orbit of ``C_G(a)`` on G, and then transported to the other class members
    by the conjugator that carries the representative there.
    """
    rel = _relation(rel)
    part = conjugacy_classes(G)
    n = G.order
    everything = np.arange(n)
    if group_shortcut and _group_satisfies(G, rel):
        adj = np.ones((n, n), dtype=bool)
    else:
        def row_for(cls):
            a = cls.representative
            row = np.zeros(n, dtype=bool)
            cent = centralizer(G, a)
            for orbit in orbit_partition(G, cent.generators, everything):
                row[orbit] = relation_holds(G, a, orbit[0], rel.value,
                                            group_shortcut=group_shortcut)
            return row

        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                rows = list(pool.map(row_for, part.classes))
        else:
            rows = [row_for(c) for c in part.classes]
        adj = np.zeros((n, n), dtype=bool)
        for cls, row in zip(part.classes, rows):
            for x in cls.members:
                t = int(part.conjugator[x])
                # adj[t a t^-1, t y t^-1] = adj[a, y]
                moved = conjugate_vec(G, everything, np.full(n, t))
                adj[x, moved] = row
    np.fill_diagonal(adj, False)
    if not include_identity:
        adj = adj[1:, 1:]
    return ClassGraph("element", rel, _element_vertices(G, part, include_identity),
                      np.ascontiguousarray(adj), G.name, include_identity)


def build_graph(G: FiniteGroup, rel="solvable", mode="class", *, include_identity=True,
                workers=1, group_shortcut=True) -> ClassGraph:
    if mode == "class":
        return build_class_graph(G, rel, workers=workers, group_shortcut=group_shortcut)
    if mode == "expanded":
        return build_expanded_graph(G, rel, include_identity=include_identity, workers=workers,
                                    group_shortcut=group_shortcut)
    if mode == "element":
        return build_element_graph(G, rel, include_identity=include_identity, workers=workers,
                                   group_shortcut=group_shortcut)
    raise InputError(f"unknown mode {mode!r}")


# comparison ---------------------------------------------------------------------


def _comparable(A: ClassGraph, B: ClassGraph):
    if A.group_ref != B.group_ref:
        raise InputError(f"graphs come from different groups: {A.group_ref} vs {B.group_ref}")
    same_mode = A.mode == B.mode or {A.mode, B.mode} == {"expanded", "element"}
    if not same_mode:
        raise InputError(f"cannot compare {A.mode} mode with {B.mode} mode")
    if A.include_identity != B.include_identity or A.vertex_count != B.vertex_count:
        raise InputError("vertex sets differ (identity convention)")


def graphs_equal(A: ClassGraph, B: ClassGraph) -> bool:
    _comparable(A, B)
    return bool((A.adjacency == B.adjacency).all())


def is_spanning_subgraph(A: ClassGraph, B: ClassGraph) -> bool:
    """edges(A) is a subset of edges(B)."""
    _comparable(A, B)
    return bool(not (A.adjacency & ~B.adjacency).any())


def edge_difference(A: ClassGraph, B: ClassGraph) -> list[tuple[int, int]]:
    """Edges of A missing from B, as sorted vertex pairs."""
    _comparable(A, B)
    us, vs = np.nonzero(np.triu(A.adjacency & ~B.adjacency, 1))
    return [(int(u), int(v)) for u, v in zip(us, vs)]
