"""Executable checks of structural facts about class graphs, run over a corpus.

Each check walks its targets (corpus groups, or fixed named instances) and
returns one result per target with status ``pass``, ``fail``, ``n/a`` (the
hypothesis does not apply) or ``skipped`` (budget).  A failing result always
carries a witness naming the group and the offending vertices or values, so
it can be re-examined with the public graph and group functions.

Graphs used here are built with ``group_shortcut=False``: a solvable group is
not assumed to give a complete graph, every pair is decided by real subgroup
tests.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import catalog
from .budget import Budget, default_budget
from .errors import BudgetExceeded, InputError
from .graphs import build_class_graph, build_expanded_graph, is_spanning_subgraph, edge_difference
from .group import (
    FiniteGroup,
    SubgroupHandle,
    centralizer,
    closure,
    conjugacy_classes,
    derived_subgroup,
    is_nilpotent,
    is_normal,
    is_solvable,
    relation_holds,
    solvable_radical,
    subgroup_as_group,
    subgroup_from_mask,
    sylow_subgroup,
    whole_group,
)
from .metrics import (
    INF,
    clique_lower_bound_orders,
    clique_number,
    components,
    distance_matrix,
    dominant_vertices,
    domination_number,
    girth,
    is_complete,
    isolated_vertices,
)

STATUSES = ("pass", "fail", "n/a", "skipped")


def _primes(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _is_prime(n: int) -> bool:
    return n > 1 and _primes(n) == [n]


# Sylow shape ---------------------------------------------------------------------


def check_sylow_shape(G: FiniteGroup, p: int) -> str:
    """Classify a Sylow p-subgroup as ``cyclic``, ``generalized_quaternion`` or ``other``."""
    if not _is_prime(p) or G.order % p:
        raise InputError(f"{p} is not a prime dividing |G| = {G.order}")
    cache = G._cache.setdefault("sylow_shape", {})
    if p in cache:
        return cache[p]
    P = sylow_subgroup(G, p)
    members = P.members
    orders = G.element_orders[members]
    n = P.order
    if (orders == n).any():
        shape = "cyclic"
    elif n >= 8 and int((orders == 2).sum()) == 1 and (orders == n // 2).any():
        # an element of order n/2 generates a cyclic subgroup of index 2
        shape = "generalized_quaternion"
    else:
        shape = "other"
    cache[p] = shape
    return shape


# results -------------------------------------------------------------------------


@dataclass
class Result:
    target: str
    status: str
    detail: dict = field(default_factory=dict)
    witness: dict | None = None

    def to_dict(self) -> dict:
        out = {"target": self.target, "status": self.status, "detail": self.detail}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class TheoremCheck:
    id: str
    slug: str
    claim: str
    corpus_filter: str
    verdict: str = "pass"
    witness: dict | None = None
    results: list[Result] = field(default_factory=list)
    details: dict = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)
    seconds: float | None = None

    def counts(self) -> dict:
        return {s: sum(r.status == s for r in self.results) for s in STATUSES}

    def to_dict(self, timings: bool = False) -> dict:
        out = {
            "id": self.id,
            "slug": self.slug,
            "claim": self.claim,
            "corpus_filter": self.corpus_filter,
            "verdict": self.verdict,
            "counts": self.counts(),
            "witness": self.witness,
            "details": self.details,
            "notes": list(self.notes),
            "results": [r.to_dict() for r in self.results],
        }
        if timings and self.seconds is not None:
            out["seconds"] = round(self.seconds, 3)
        return out


def _settle(check: TheoremCheck) -> TheoremCheck:
    failures = [r for r in check.results if r.status == "fail"]
    if failures:
        check.verdict = "fail"
        check.witness = failures[0].witness or {"target": failures[0].target}
    elif any(r.status == "skipped" for r in check.results):
        check.verdict = "skipped"
    else:
        check.verdict = "pass"
    return check


# shared per-run state --------------------------------------------------------------


class SuiteContext:
    """Group and graph cache shared by all checks of one run."""

    def __init__(self, budget: Budget | None = None, workers: int = 1):
        self.budget = budget or default_budget()
        self.workers = workers
        self._groups: dict[str, FiniteGroup] = {}
        self._facts: dict = {}

    def group(self, spec: str) -> FiniteGroup:
        if spec not in self._groups:
            self._groups[spec] = catalog.make(spec, self.budget)
        return self._groups[spec]

    def graph(self, spec: str, rel: str = "solvable"):
        return build_class_graph(self.group(spec), rel, workers=self.workers,
                                 group_shortcut=False)

    def _fact(self, key, fn):
        if key not in self._facts:
            self._facts[key] = fn()
        return self._facts[key]

    def solvable(self, spec: str) -> bool:
        return self._fact(("solvable", spec),
                          lambda: is_solvable(whole_group(self.group(spec)), shortcuts=False))

    def nilpotent(self, spec: str) -> bool:
        return self._fact(("nilpotent", spec),
                          lambda: is_nilpotent(whole_group(self.group(spec)), shortcuts=False))

    def distances(self, spec: str) -> np.ndarray:
        return self._fact(("dist", spec), lambda: distance_matrix(self.graph(spec)))


def _names(graph, idx) -> list[str]:
    return [graph.vertices[i].name for i in idx]


def _diameter(dist: np.ndarray):
    if dist.size == 0:
        return 0
    return INF if (dist < 0).any() else int(dist.max())


def _enc(x):
    return "inf" if x is INF else x


# per-group checks -------------------------------------------------------------------
# each takes (ctx, spec) and returns (status, detail, witness)


def _c1(ctx, spec):
    g = ctx.graph(spec)
    complete = is_complete(g)
    solvable = ctx.solvable(spec)
    detail = {"classes": g.vertex_count + 1, "complete": complete, "solvable": solvable}
    if complete == solvable:
        return "pass", detail, None
    witness = {"group": spec, "complete": complete, "solvable": solvable}
    if not complete:
        missing = np.argwhere(~g.adjacency & ~np.eye(len(g), dtype=bool))[0]
        witness["non_adjacent"] = _names(g, missing)
    return "fail", detail, witness


def _c2(ctx, spec):
    if not ctx.solvable(spec):
        return "n/a", {"solvable": False}, None
    G = ctx.group(spec)
    exp = build_expanded_graph(G, "nilpotent", workers=ctx.workers, group_shortcut=False)
    if not is_complete(exp):
        return "n/a", {"solvable": True, "expanded_complete": False}, None
    nil = ctx.nilpotent(spec)
    detail = {"solvable": True, "expanded_complete": True, "nilpotent": nil}
    if nil:
        return "pass", detail, None
    return "fail", detail, {"group": spec, "expanded_complete": True, "nilpotent": False}


def _c3(ctx, spec):
    G = ctx.group(spec)
    detail = {}
    for mode in ("class", "expanded"):
        if mode == "class":
            graphs = [ctx.graph(spec, r) for r in ("abelian", "nilpotent", "solvable")]
        else:
            graphs = [build_expanded_graph(G, r, workers=ctx.workers, group_shortcut=False)
                      for r in ("abelian", "nilpotent", "solvable")]
        detail[mode] = [g.edge_count for g in graphs]
        for small, big in zip(graphs, graphs[1:]):
            if not is_spanning_subgraph(small, big):
                u, v = edge_difference(small, big)[0]
                return "fail", detail, {
                    "group": spec, "mode": mode,
                    "relations": [small.relation.value, big.relation.value],
                    "edge": [small.vertices[u].name, small.vertices[v].name]}
    return "pass", detail, None


def _pq_orders(G) -> list[int]:
    out = []
    for o in sorted(set(G.element_orders.tolist())):
        ps = _primes(o)
        if len(ps) == 2 and ps[0] * ps[1] == o:
            out.append(o)
    return out


def _c4(ctx, spec):
    G = ctx.group(spec)
    if ctx.solvable(spec):
        return "n/a", {"solvable": True}, None
    pq = _pq_orders(G)
    if not pq:
        return "n/a", {"solvable": False, "pq_orders": []}, None
    gi = girth(ctx.graph(spec))
    detail = {"pq_orders": pq, "girth": _enc(gi)}
    if gi == 3:
        return "pass", detail, None
    return "fail", detail, {"group": spec, "pq_order": pq[0], "girth": _enc(gi)}


def _c5(ctx, spec):
    G = ctx.group(spec)
    rad = solvable_radical(G)
    if rad.order == 1:
        return "n/a", {"radical_order": 1}, None
    g = ctx.graph(spec)
    if g.vertex_count == 0:
        return "n/a", {"radical_order": rad.order, "vertices": 0}, None
    dist = ctx.distances(spec)
    diam = _diameter(dist)
    connected = len(components(g)) == 1
    lam = domination_number(g)
    detail = {"radical_order": rad.order, "connected": connected, "diameter": _enc(diam),
              "domination_number": lam}
    if connected and diam <= 2 and lam == 1:
        return "pass", detail, None
    return "fail", detail, {"group": spec, **detail}


def _c6(ctx, spec):
    G = ctx.group(spec)
    g = ctx.graph(spec)
    part = conjugacy_classes(G)
    graph_isolated = set(isolated_vertices(g))
    literal = []
    everything = np.arange(G.order)
    for v in g.vertices:
        cls = part.classes[v.class_id]
        allowed = np.zeros(G.order, dtype=bool)
        allowed[0] = True
        allowed[list(cls.members)] = True
        contained = True
        for x in cls.members:
            # the centraliser lies in the solvabiliser, test it in bulk first
            commuting = G.mul_vec(np.full(G.order, x), everything) == \
                G.mul_vec(everything, np.full(G.order, x))
            if (commuting & ~allowed).any():
                contained = False
                break
            if any(relation_holds(G, x, int(y), "solvable", group_shortcut=False)
                   for y in np.flatnonzero(~allowed)):
                contained = False
                break
        if contained:
            literal.append(v.id)
    detail = {"isolated": _names(g, sorted(graph_isolated))}
    if set(literal) == graph_isolated:
        return "pass", detail, None
    bad = sorted(set(literal) ^ graph_isolated)[0]
    return "fail", detail, {"group": spec, "vertex": g.vertices[bad].name,
                            "isolated_in_graph": bad in graph_isolated,
                            "solvabilizers_contained": bad in literal}


def _c8(ctx, spec):
    G = ctx.group(spec)
    part = conjugacy_classes(G)
    cents = [centralizer(G, c.representative).order for c in part.classes]
    total = sum(Fraction(1, c) for c in cents)
    sizes_ok = all(c.size * z == G.order for c, z in zip(part.classes, cents))
    k = len(part)
    detail = {"k": k, "sum": str(total)}
    witness = None
    if total != 1 or not sizes_ok:
        witness = {"group": spec, "sum": str(total), "size_times_centralizer_ok": sizes_ok}
    elif k <= CENSUS_MAX_K:
        denoms = tuple(sorted(cents))
        detail["centralizer_orders"] = list(denoms)
        if denoms not in unit_fraction_solutions(k) or max(denoms) != G.order:
            witness = {"group": spec, "centralizer_orders": list(denoms)}
    return ("fail" if witness else "pass"), detail, witness


def _c9(ctx, spec):
    G = ctx.group(spec)
    g = ctx.graph(spec)
    bound = clique_lower_bound_orders(G)
    omega = clique_number(g)
    detail = {"bound": bound, "clique_number": omega}
    if omega >= bound:
        return "pass", detail, None
    return "fail", detail, {"group": spec, **detail}


def _c15(ctx, spec):
    if not ctx.solvable(spec):
        return "n/a", {"solvable": False}, None
    g = ctx.graph(spec)
    omega = clique_number(g)
    k = g.vertex_count + 1
    detail = {"k": k, "clique_number": omega}
    if omega == k - 1:
        return "pass", detail, None
    return "fail", detail, {"group": spec, **detail}


# unit fraction census -----------------------------------------------------------------

CENSUS_MAX_K = 4


def unit_fraction_solutions(m: int) -> set[tuple[int, ...]]:
    """All non-decreasing tuples (n_1..n_m) of positive integers with sum 1/n_i = 1."""
    out: set[tuple[int, ...]] = set()

    def grow(prefix, remaining, left):
        if left == 1:
            if remaining.numerator == 1 and remaining.denominator >= prefix[-1]:
                out.add(prefix + (remaining.denominator,))
            return
        lo = max(prefix[-1] if prefix else 1, math.ceil(1 / remaining))
        hi = math.floor(left / remaining)
        for n in range(lo, hi + 1):
            rest = remaining - Fraction(1, n)
            if rest > 0:
                grow(prefix + (n,), rest, left - 1)

    if m == 1:
        return {(1,)}
    grow((), Fraction(1), m)
    return out


# triangle exceptions --------------------------------------------------------------------

TRIANGLE_EXCEPTIONS = ("C1", "C2", "C3", "S3")


def _small_type(G: FiniteGroup) -> str | None:
    """Isomorphism type for the exceptional orders 1, 2, 3 and the non-abelian group of order 6."""
    n = G.order
    if n in (1, 2, 3):
        return f"C{n}"
    if n == 6 and not is_abelian_group(G):
        return "S3"
    return None


def is_abelian_group(G: FiniteGroup) -> bool:
    gens = np.array(G.generators, dtype=np.int64)
    if len(gens) < 2:
        return True
    prod = G.mul_outer(gens, gens)
    return bool((prod == prod.T).all())


def _c10(ctx, spec):
    G = ctx.group(spec)
    omega = clique_number(ctx.graph(spec))
    triangle = omega >= 3
    kind = _small_type(G)
    expected_exception = kind in TRIANGLE_EXCEPTIONS
    detail = {"triangle": triangle}
    if kind:
        detail["type"] = kind
    if triangle != expected_exception:
        return "pass", detail, None
    return "fail", detail, {"group": spec, "triangle": triangle, "clique_number": omega}


# distance bounds between classes --------------------------------------------------------


def _c13(ctx, spec):
    G = ctx.group(spec)
    g = ctx.graph(spec)
    dist = ctx.distances(spec)
    orders = set(G.element_orders.tolist())
    tally = {key: 0 for key in DISTANCE_CLAIMS}
    shapes = {}

    def special(p):
        if p not in shapes:
            shapes[p] = check_sylow_shape(G, p) in ("cyclic", "generalized_quaternion")
        return shapes[p]

    k = g.vertex_count
    for i in range(k):
        m = g.vertices[i].element_order
        pm = _primes(m)
        for j in range(i + 1, k):
            n = g.vertices[j].element_order
            pn = _primes(n)
            d = int(dist[i, j])
            d = INF if d < 0 else d
            prime_end = _is_prime(m) or _is_prime(n)
            ppower_end = len(pm) == 1 or len(pn) == 1
            claims = []
            if len(pm) == 1 and pm == pn:
                claims.append(("cp1", 1))
            if math.gcd(m, n) > 1:
                claims.append(("coprime", 2 if prime_end else 3))
            for p in pm:
                for q in pn:
                    if p * q not in orders:
                        continue
                    claims.append(("cp_a", 4 if ppower_end else 5))
                    sp, sq = special(p), special(q)
                    if sp or sq:
                        claims.append(("cp_b", 3 if prime_end else 4))
                    if sp and sq:
                        claims.append(("cp_c", 2 if prime_end else 3))
            for name, bound in claims:
                tally[name] += 1
                if d > bound:
                    return "fail", {"pairs": tally}, {
                        "group": spec, "claim": name, "classes": _names(g, [i, j]),
                        "distance": _enc(d), "bound": bound}
    applicable = any(tally.values())
    return ("pass" if applicable else "n/a"), {"pairs": tally}, None


DISTANCE_CLAIMS = ("cp1", "coprime", "cp_a", "cp_b", "cp_c")


# checks over fixed targets -----------------------------------------------------------------


def _per_group(fn, order_limit=None):
    def run(ctx, corpus, check):
        for spec in corpus:
            if order_limit is not None:
                n = _order(ctx, spec)
                if n is not None and n > order_limit:
                    check.results.append(Result(spec, "n/a", {"order": n,
                                                              "reason": "above order limit"}))
                    continue
            check.results.append(_guarded(spec, lambda: fn(ctx, spec)))
    return run


def _order(ctx, spec):
    n = catalog.expected_order(catalog.GroupSpec.parse(spec))
    if n is None:
        try:
            n = ctx.group(spec).order
        except BudgetExceeded:
            return None
    return n


def _guarded(target, fn) -> Result:
    try:
        status, detail, witness = fn()
    except BudgetExceeded as exc:
        detail = {"reason": str(exc)}
        if exc.lower is not None:
            detail["lower"], detail["upper"] = exc.lower, exc.upper
        return Result(target, "skipped", detail)
    return Result(target, status, detail, witness)


def _is_product(spec):
    return catalog.GroupSpec.parse(spec).kind == "product"


SELF_PRODUCT_LIMIT = 60


def _c7(ctx, corpus, check):
    targets = [s for s in corpus if _is_product(s)]
    for spec in corpus:
        if _is_product(spec):
            continue
        n = _order(ctx, spec)
        if n is None or n < 2 or n > SELF_PRODUCT_LIMIT or is_abelian_group(ctx.group(spec)):
            continue
        targets.append(f"product:({spec})x({spec})")
    targets = sorted(set(targets), key=lambda s: (_order(ctx, s) or 0, s))
    both = {"diameter_3": 0, "diameter_below_3": 0}
    for spec in targets:
        def one(spec=spec):
            left, right = catalog.GroupSpec.parse(spec).arg
            left, right = str(left), str(right)
            if ctx.group(left).order == 1 or ctx.group(right).order == 1:
                return "n/a", {"reason": "trivial factor"}, None
            dist = ctx.distances(spec)
            diam = _diameter(dist)
            detail = {"diameter": _enc(diam)}
            if diam is INF or diam > 3:
                return "fail", detail, {"group": spec, "diameter": _enc(diam)}
            if left == right:
                fd = _diameter(ctx.distances(left))
                predicted = fd is INF or fd >= 3
                detail["factor_diameter"] = _enc(fd)
                both["diameter_3" if diam == 3 else "diameter_below_3"] += 1
                if predicted != (diam == 3):
                    return "fail", detail, {"group": spec, "diameter": _enc(diam),
                                            "factor_diameter": _enc(fd)}
            return "pass", detail, None
        check.results.append(_guarded(spec, one))
    check.details["self_products"] = both
    if not both["diameter_3"]:
        check.notes.append("no self-product of diameter 3 within budget; the criterion was "
                           "exercised only in the diameter-below-3 direction")


def _find_subgroup(G, x_order, y_order, size, accept):
    """First ``<x, y>`` of the given size passing ``accept``; x runs over class representatives."""
    part = conjugacy_classes(G)
    ys = np.flatnonzero(G.element_orders == y_order) if y_order else [None]
    for cls in part.classes:
        if cls.element_order != x_order:
            continue
        x = cls.representative
        for y in ys:
            gens = [x] if y is None else [x, int(y)]
            H = closure(G, gens)
            if H.order == size and accept(H):
                return H
    return None


def _unique_involution(H):
    return int((H.parent.element_orders[H.members] == 2).sum()) == 1


def _nonabelian(H):
    return not is_abelian_group(subgroup_as_group(H))


# (spec, label, x order, y order, subgroup size, accept, required {order: classes})
NAMED_TRIANGLES = (
    ("psl2:17", "cyclic subgroup of order 9", 9, None, 9, lambda H: True, {3: 1, 9: 2}),
    ("psl2:8", "cyclic subgroup of order 7", 7, None, 7, lambda H: True, {7: 3}),
    ("psl2:4", "dihedral subgroup of order 10", 5, 2, 10, _nonabelian, {2: 1, 5: 2}),
    ("alternating:6", "dihedral subgroup of order 10", 5, 2, 10, _nonabelian, {2: 1, 5: 2}),
    ("psl2:7", "non-abelian subgroup of order 21", 7, 3, 21, _nonabelian, {3: 1, 7: 2}),
    ("named:M10", "quaternion subgroup of order 8", 4, 4, 8,
     lambda H: _nonabelian(H) and _unique_involution(H), {2: 1, 4: 2}),
)

STRETCH_TRIANGLES = (
    ("named:Sz8", "cyclic subgroup of order 13", 13, None, 13, lambda H: True, {13: 3}),
    ("named:PSL34", "non-abelian subgroup of order 21", 7, 3, 21, _nonabelian, {3: 1, 7: 2}),
)


def _named_triangle(ctx, spec, label, xo, yo, size, accept, required):
    G = ctx.group(spec)
    part = conjugacy_classes(G)

    def accept_meeting(H):
        if not accept(H):
            return False
        met = {part.of(int(h)).id for h in H.members if h}
        by_order = {}
        for cid in met:
            by_order.setdefault(part.classes[cid].element_order, []).append(cid)
        return all(len(by_order.get(o, ())) >= c for o, c in required.items())

    H = _find_subgroup(G, xo, yo, size, accept_meeting)
    if H is None:
        return "fail", {}, {"group": spec, "missing": label}
    met = sorted({part.of(int(h)).id for h in H.members if h})
    chosen = []
    for o, c in sorted(required.items()):
        chosen += [cid for cid in met if part.classes[cid].element_order == o][:c]
    g = ctx.graph(spec)
    vid = {v.class_id: v.id for v in g.vertices}
    tri = [vid[c] for c in chosen]
    adjacent = all(g.adjacency[a, b] for a in tri for b in tri if a != b)
    solvable = is_solvable(H, shortcuts=False)
    detail = {"subgroup": label, "generators": [G.label(x) for x in H.generators],
              "classes_met": [part.classes[c].name for c in met],
              "triangle": [part.classes[c].name for c in chosen]}
    if adjacent and solvable:
        return "pass", detail, None
    return "fail", detail, {"group": spec, "triangle": detail["triangle"],
                            "adjacent": adjacent, "subgroup_solvable": solvable}


def _c11(ctx, corpus, check):
    facts = list(NAMED_TRIANGLES)
    facts += [f for f in STRETCH_TRIANGLES if f[0] in corpus]
    for spec, label, *rest in facts:
        check.results.append(_guarded(f"{spec}: {label}",
                                      lambda: _named_triangle(ctx, spec, label, *rest)))


def _c12(ctx, corpus, check):
    for spec, exact in (("psl2:4", True), ("psl2:8", False)):
        def one(spec=spec, exact=exact):
            G = ctx.group(spec)
            g = ctx.graph(spec)
            invol = [v.id for v in g.vertices if v.element_order == 2]
            dom = dominant_vertices(g)
            rad = solvable_radical(G).order
            detail = {"dominant": _names(g, dom), "involution_classes": _names(g, invol),
                      "radical_order": rad}
            ok = (dom == invol) if exact else set(invol) <= set(dom)
            if ok and rad == 1 and len(invol) == 1:
                return "pass", detail, None
            return "fail", detail, {"group": spec, **detail}
        check.results.append(_guarded(spec, one))
    check.notes.append("J1 (order 175560) has the same dominance property; "
                       "unchecked, beyond the group budget")


def _mask_subgroup(G, mask):
    return subgroup_from_mask(G, np.asarray(mask, dtype=bool))


def _hk_triples(ctx):
    """(label, G spec, builder returning (H, K)) for the connectivity check."""

    def perm_pair(spec, k_cycles):
        def build():
            G = ctx.group(spec)
            return derived_subgroup(whole_group(G)), closure(G, [G.element(k_cycles)])
        return build

    def m10():
        G = ctx.group("named:M10")
        H = derived_subgroup(whole_group(G))
        x = next(int(g) for g in np.flatnonzero(G.element_orders == 4) if g not in H)
        return H, closure(G, [x])

    def product_pair(spec, which):
        def build():
            G = ctx.group(spec)
            left, right = (ctx.group(str(s)) for s in catalog.GroupSpec.parse(spec).arg)
            m = right.order
            idx = np.arange(G.order)
            first = _mask_subgroup(G, idx % m == 0)   # L x 1
            second = _mask_subgroup(G, idx < m)       # 1 x R
            return (second, first) if which == "right-normal" else (first, second)
        return build

    def dihedral5():
        G = ctx.group("dihedral:5")
        return closure(G, [G.element("(1 2 3 4 5)")]), closure(G, [G.element("(2 5)(3 4)")])

    return (
        ("S5 = A5 <(1 2)>", "symmetric:5", perm_pair("symmetric:5", "(1 2)")),
        ("S4 = A4 <(1 2)>", "symmetric:4", perm_pair("symmetric:4", "(1 2)")),
        ("S6 = A6 <(1 2)>", "symmetric:6", perm_pair("symmetric:6", "(1 2)")),
        ("M10 = A6 <x>, x of order 4", "named:M10", m10),
        ("C2 x A5 = (1 x A5)(C2 x 1)", "product:(cyclic:2)x(alternating:5)",
         product_pair("product:(cyclic:2)x(alternating:5)", "right-normal")),
        ("A5 x A5 = (A5 x 1)(1 x A5)", "product:(alternating:5)x(alternating:5)",
         product_pair("product:(alternating:5)x(alternating:5)", "left-normal")),
        ("D10 = C5 <s>", "dihedral:5", dihedral5),
    )


def _standalone_connected(H: SubgroupHandle) -> bool:
    sub = subgroup_as_group(H)
    return len(components(build_class_graph(sub, "solvable", group_shortcut=False))) <= 1


def _c14(ctx, corpus, check):
    for label, spec, build in _hk_triples(ctx):
        def one(spec=spec, build=build):
            G = ctx.group(spec)
            H, K = build()
            inter = int((H.mask & K.mask).sum())
            hyp = {
                "H_normal": is_normal(G, H),
                "G_equals_HK": H.order * K.order == G.order * inter,
                "H_graph_connected": _standalone_connected(H),
                "K_graph_connected": _standalone_connected(K),
            }
            g = ctx.graph(spec)
            dist = ctx.distances(spec)
            part = conjugacy_classes(G)
            vid = {v.class_id: v.id for v in g.vertices}
            inside = {vid[part.of(int(h)).id] for h in H.members if h}
            outside = {vid[part.of(int(x)).id] for x in np.flatnonzero(~H.mask)}
            hyp["bridge"] = any(dist[a, b] >= 0 for a in inside for b in outside)
            detail = {"H_order": H.order, "K_order": K.order, "hypotheses": hyp}
            if not all(hyp.values()):
                return "n/a", detail, None
            connected = bool((dist >= 0).all())
            detail["connected"] = connected
            if connected:
                return "pass", detail, None
            return "fail", detail, {"group": spec, "triple": label, "connected": False}
        check.results.append(_guarded(label, one))


# registry ---------------------------------------------------------------------------------


@dataclass(frozen=True)
class CheckDef:
    id: str
    slug: str
    claim: str
    corpus_filter: str
    run: object


CHECKS = {c.id: c for c in (
    CheckDef("C1", "complete-iff-solvable",
             "the solvable class graph is complete exactly when the group is solvable",
             "all corpus groups", _per_group(_c1)),
    CheckDef("C2", "ncc-complete-solvable-nilpotent",
             "a solvable group whose expanded nilpotent class graph is complete is nilpotent",
             "solvable corpus groups with complete expanded nilpotent graph", _per_group(_c2)),
    CheckDef("C3", "edge-monotonicity",
             "abelian edges are nilpotent edges, nilpotent edges are solvable edges",
             "all corpus groups, class and expanded modes", _per_group(_c3)),
    CheckDef("C4", "order-pq-girth-3",
             "a non-solvable group with an element of order pq has girth 3",
             "non-solvable corpus groups with an element of order pq", _per_group(_c4)),
    CheckDef("C5", "radical-diameter-domination",
             "a nontrivial solvable radical gives diameter at most 2 and domination number 1",
             "corpus groups with nontrivial solvable radical", _per_group(_c5)),
    CheckDef("C6", "isolated-vertex-criterion",
             "a class is isolated exactly when every member's solvabilizer lies in the class "
             "plus the identity", "all corpus groups", _per_group(_c6)),
    CheckDef("C7", "product-diameter",
             "products of nontrivial groups are connected with diameter at most 3; a square "
             "has diameter 3 exactly when its factor is disconnected or has diameter >= 3",
             f"corpus products and squares of non-abelian corpus groups of order <= "
             f"{SELF_PRODUCT_LIMIT}", _c7),
    CheckDef("C8", "class-equation-census",
             "reciprocal centralizer orders sum to 1; small k(G) match unit-fraction solutions",
             f"all corpus groups, census for k <= {CENSUS_MAX_K}", _per_group(_c8)),
    CheckDef("C9", "divisor-clique-bound",
             "clique number is at least d(n) - 1 for every element order n",
             "all corpus groups", _per_group(_c9)),
    CheckDef("C10", "triangle-exceptions",
             "the solvable class graph has a triangle except for C1, C2, C3 and S3",
             "all corpus groups", _per_group(_c10)),
    CheckDef("C11", "named-triangles",
             "explicit solvable subgroups meeting three classes give triangles",
             "fixed named instances (stretch instances when in the corpus)", _c11),
    CheckDef("C12", "involution-dominance",
             "in PSL(2, 2^d) the involution class is dominant while the radical is trivial",
             "psl2:4 and psl2:8", _c12),
    CheckDef("C13", "distance-bounds",
             "distance bounds between classes of p-elements, of non-coprime orders, and of "
             "orders divisible by p and q when an element of order pq exists",
             "all vertex pairs of all corpus groups meeting a hypothesis", _per_group(_c13)),
    CheckDef("C14", "hk-connectivity",
             "G = HK with H normal, connected graphs for H and K and a bridge from H to G \\ H "
             "make the graph of G connected", "fixed (G, H, K) triples", _c14),
    CheckDef("C15", "solvable-clique-number",
             "a solvable group has clique number k(G) - 1",
             "solvable corpus groups", _per_group(_c15)),
)}


def resolve_checks(ids) -> list[str]:
    if ids is None:
        return sorted(CHECKS, key=lambda c: int(c[1:]))
    out = []
    for raw in ids:
        cid = raw.strip().upper()
        if cid not in CHECKS:
            raise InputError(f"unknown check id {raw!r}")
        if cid not in out:
            out.append(cid)
    return sorted(out, key=lambda c: int(c[1:]))


def sort_corpus(ctx: SuiteContext, corpus) -> list[str]:
    specs = sorted({str(s) for s in catalog.iter_specs(corpus)})
    return sorted(specs, key=lambda s: (_order(ctx, s) or 0, s))


@dataclass
class SuiteReport:
    suite: str
    corpus: list[str]
    checks: list[TheoremCheck]
    timings: bool = False

    @property
    def passed(self) -> bool:
        return all(c.verdict != "fail" for c in self.checks)

    def summary(self) -> dict:
        return {v: sum(c.verdict == v for c in self.checks) for v in ("pass", "fail", "skipped")}

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "corpus": list(self.corpus),
            "checks": [c.to_dict(self.timings) for c in self.checks],
            "summary": self.summary(),
        }

    def table(self) -> str:
        rows = [("check", "verdict", "pass", "fail", "n/a", "skipped", "name")]
        for c in self.checks:
            n = c.counts()
            rows.append((c.id, c.verdict, str(n["pass"]), str(n["fail"]), str(n["n/a"]),
                         str(n["skipped"]), c.slug))
        widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
        lines = ["  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in rows]
        for c in self.checks:
            if c.witness is not None:
                lines.append(f"{c.id} witness: {c.witness}")
            if "exception_types" in c.details:
                lines.append(f"{c.id} exceptions: {', '.join(c.details['exceptions'])} "
                             f"(types {', '.join(c.details['exception_types'])})")
            for note in c.notes:
                lines.append(f"{c.id} note: {note}")
            if self.timings and c.seconds is not None:
                lines.append(f"{c.id} time: {c.seconds:.2f}s")
        s = self.summary()
        lines.append(f"summary: {s['pass']} pass, {s['fail']} fail, {s['skipped']} skipped")
        return "\n".join(lines) + "\n"


def run_suite(corpus=None, check_ids=None, *, budget: Budget | None = None, workers: int = 1,
              suite: str = "default", timings: bool = False,
              context: SuiteContext | None = None) -> SuiteReport:
    """Run the selected checks over the corpus (default corpus when ``None``)."""
    ids = resolve_checks(check_ids)
    ctx = context or SuiteContext(budget, workers)
    corpus = sort_corpus(ctx, catalog.default_corpus() if corpus is None else corpus)
    checks = []
    for cid in ids:
        d = CHECKS[cid]
        check = TheoremCheck(d.id, d.slug, d.claim, d.corpus_filter)
        start = time.perf_counter()
        d.run(ctx, corpus, check)
        check.seconds = time.perf_counter() - start
        checks.append(_settle(check))
    if "C10" in ids:
        c10 = next(c for c in checks if c.id == "C10")
        c10.details["exceptions"] = [r.target for r in c10.results
                                     if r.detail.get("triangle") is False]
        c10.details["exception_types"] = sorted(
            {r.detail["type"] for r in c10.results
             if r.detail.get("triangle") is False and "type" in r.detail})
    if "C8" in ids:
        c8 = next(c for c in checks if c.id == "C8")
        table: dict[str, list[str]] = {}
        for r in c8.results:
            if "k" in r.detail:
                table.setdefault(str(r.detail["k"]), []).append(r.target)
        c8.details["k_table"] = dict(sorted(table.items(), key=lambda kv: int(kv[0])))
    return SuiteReport(suite, corpus, checks, timings)
