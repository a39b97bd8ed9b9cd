"""Finite groups on elements ``0..n-1`` with the identity at index 0.

Two backends share one interface:

* a Cayley table (``table[g, h]`` is the index of ``g*h``), used whenever the
  order is within the table budget;
* a permutation backend holding one image array per element, products found by
  composing and looking the result up among the sorted element keys.

Permutations compose right factor first: ``(g*h)(i) = g(h(i))``.  So in S3,
``(1 2)*(1 3) = (1 3 2)``.  Conjugation follows the left-conjugator convention
``conjugate(g, x) = x*g*x^-1``.

All subgroup computations work on boolean membership masks over the parent's
elements.  Results that are expensive to recompute (classes, centralizers,
pair verdicts, subgroup verdicts) are memoised on the group instance; the
memos are plain dicts whose entries are deterministic, so concurrent duplicate
insertion is harmless.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .budget import Budget, default_budget
from .errors import BudgetExceeded, InputError

# Full element-pair commutators below this subgroup order, generator pairs
# plus normal closure above it.
FULL_COMMUTATOR_LIMIT = 2000


def _index_dtype(n):
    return np.int16 if n < 2**15 else np.int32


def _is_prime_power(n):
    if n < 2:
        return False
    p = next(d for d in range(2, n + 1) if n % d == 0)
    while n % p == 0:
        n //= p
    return n == 1


def cycle_string(perm: Sequence[int]) -> str:
    """1-based cycle notation, ``"()"`` for the identity."""
    seen = [False] * len(perm)
    parts = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cycle = []
        i = start
        while not seen[i]:
            seen[i] = True
            cycle.append(str(i + 1))
            i = perm[i]
        parts.append("(" + " ".join(cycle) + ")")
    return "".join(parts) or "()"


def parse_cycles(text: str, degree: int) -> tuple[int, ...]:
    """Parse 1-based cycle notation such as ``"(1 2 3)(4 5)"`` into an image tuple.

    Commas are accepted as separators.  Cycles are composed right to left.
    """
    image = list(range(degree))
    text = text.strip()
    if text in ("", "()"):
        return tuple(image)
    cycles = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch != "(":
            raise InputError(f"position {pos}: expected '(' in {text!r}")
        end = text.find(")", pos)
        if end < 0:
            raise InputError(f"position {pos}: unclosed cycle in {text!r}")
        body = text[pos + 1 : end].replace(",", " ").split()
        try:
            points = [int(tok) for tok in body]
        except ValueError:
            raise InputError(f"position {pos}: non-integer point in {text!r}") from None
        if len(set(points)) != len(points):
            raise InputError(f"position {pos}: repeated point in cycle {text[pos:end + 1]!r}")
        for pt in points:
            if not 1 <= pt <= degree:
                raise InputError(f"position {pos}: point {pt} outside 1..{degree}")
        cycles.append([pt - 1 for pt in points])
        pos = end + 1
    for cycle in reversed(cycles):
        if len(cycle) < 2:
            continue
        step = {cycle[i]: cycle[(i + 1) % len(cycle)] for i in range(len(cycle))}
        image = [step.get(x, x) for x in image]
    return tuple(image)


class _TableBackend:
    kind = "table"

    def __init__(self, table):
        self.table = table

    def mul_vec(self, a, b):
        return self.table[a, b].astype(np.int64)

    def mul_outer(self, a, b):
        return self.table[np.ix_(a, b)].astype(np.int64)


class _PermBackend:
    kind = "permutation"

    def __init__(self, perms):
        self.perms = perms
        self.degree = perms.shape[1]
        keys = self._keys(perms)
        self._order = np.argsort(keys, kind="stable")
        self._sorted = keys[self._order]

    def _keys(self, rows):
        rows = np.ascontiguousarray(rows)
        return rows.view(np.dtype((np.void, rows.dtype.itemsize * self.degree))).ravel()

    def lookup(self, rows):
        keys = self._keys(rows.astype(self.perms.dtype))
        pos = np.searchsorted(self._sorted, keys)
        pos = np.minimum(pos, len(self._sorted) - 1)
        if not (self._sorted[pos] == keys).all():
            raise InputError("product left the group; generators are not closed")
        return self._order[pos].astype(np.int64)

    def mul_vec(self, a, b):
        a, b = np.broadcast_arrays(np.asarray(a), np.asarray(b))
        shape = a.shape
        pa = self.perms[a.ravel()]
        pb = self.perms[b.ravel()]
        return self.lookup(np.take_along_axis(pa, pb.astype(np.int64), axis=1)).reshape(shape)

    def mul_outer(self, a, b):
        a = np.asarray(a)
        b = np.asarray(b)
        return self.mul_vec(a[:, None], b[None, :])


class FiniteGroup:
    """A finite group on ``0..order-1``; immutable after construction.

    Build one with :meth:`from_table` or :meth:`from_permutations`, or through
    :func:`sccgraph.catalog.make`.
    """

    def __init__(self, backend, *, generators=(), name="", perms=None, labels=None):
        self._backend = backend
        self.name = name
        self.perms = perms
        self._labels = labels
        if backend.kind == "table":
            self.order = backend.table.shape[0]
        else:
            self.order = backend.perms.shape[0]
        self.identity = 0
        self._cache: dict = {}
        self._pair_memo: dict = {}
        self._subgroup_memo: dict = {}
        everything = np.arange(self.order)
        if backend.kind == "table":
            self.inverses = np.argmax(backend.table == 0, axis=1).astype(np.int64)
        else:
            inv_perms = np.argsort(backend.perms, axis=1)
            self.inverses = backend.lookup(inv_perms)
        self.element_orders = self._compute_orders(everything)
        gens = [int(g) for g in generators if 0 < int(g) < self.order]
        if not gens or closure_mask(self, gens).sum() != self.order:
            gens = _greedy_generators(self, everything)
        self.generators = tuple(gens)

    def _compute_orders(self, everything):
        orders = np.zeros(self.order, dtype=np.int64)
        if self._backend.kind == "permutation":
            for g in range(self.order):
                orders[g] = _perm_order(self.perms[g])
            return orders
        orders[0] = 1
        current = everything.copy()
        k = 1
        while (orders == 0).any():
            current = self._backend.mul_vec(current, everything)
            k += 1
            hit = (current == 0) & (orders == 0)
            orders[hit] = k
        return orders

    # construction -----------------------------------------------------

    @classmethod
    def from_table(cls, table, *, name="", generators=(), labels=None, perms=None):
        table = np.asarray(table)
        return cls(_TableBackend(table.astype(_index_dtype(table.shape[0]))),
                   generators=generators, name=name, labels=labels, perms=perms)

    @classmethod
    def from_permutations(cls, generators, degree, *, name="", budget: Budget | None = None):
        """Close the generating permutations (image tuples, 0-based) under composition."""
        budget = budget or default_budget()
        identity = tuple(range(degree))
        index = {identity: 0}
        elements = [identity]
        gens = []
        for g in generators:
            g = tuple(int(x) for x in g)
            if sorted(g) != list(range(degree)):
                raise InputError(f"not a permutation of {degree} points: {g}")
            gens.append(g)
        frontier = [identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = tuple(x[i] for i in g)  # x*g, g applied first
                    if y not in index:
                        if len(elements) >= budget.max_order:
                            raise BudgetExceeded(
                                f"group order exceeds budget {budget.max_order}")
                        index[y] = len(elements)
                        elements.append(y)
                        nxt.append(y)
            frontier = nxt
        dtype = np.uint8 if degree < 256 else np.uint16
        perms = np.array(elements, dtype=dtype).reshape(len(elements), degree)
        gen_idx = [index[g] for g in gens]
        n = len(elements)
        if n <= budget.table_limit:
            backend = _PermBackend(perms)
            table = np.empty((n, n), dtype=_index_dtype(n))
            wide = perms.astype(np.int64)
            for g in range(n):
                table[g] = backend.lookup(perms[g][wide])
            return cls(_TableBackend(table), generators=gen_idx, name=name, perms=perms)
        return cls(_PermBackend(perms), generators=gen_idx, name=name, perms=perms)

    # basic operations -------------------------------------------------

    @property
    def backend(self) -> str:
        return self._backend.kind

    @property
    def table(self):
        return self._backend.table if self._backend.kind == "table" else None

    @property
    def degree(self):
        return None if self.perms is None else self.perms.shape[1]

    def _check(self, g):
        if not (isinstance(g, (int, np.integer)) and 0 <= g < self.order):
            raise InputError(f"element index {g!r} out of range 0..{self.order - 1}")

    def mul(self, g: int, h: int) -> int:
        self._check(g)
        self._check(h)
        if self._backend.kind == "table":
            return int(self._backend.table[g, h])
        return int(self._backend.mul_vec(np.array([g]), np.array([h]))[0])

    def mul_vec(self, a, b):
        return self._backend.mul_vec(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))

    def mul_outer(self, a, b):
        return self._backend.mul_outer(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))

    def inverse(self, g: int) -> int:
        self._check(g)
        return int(self.inverses[g])

    def element_order(self, g: int) -> int:
        self._check(g)
        return int(self.element_orders[g])

    def power(self, g: int, e: int) -> int:
        e %= self.element_order(g)
        result = 0
        for _ in range(e):
            result = self.mul(result, g)
        return result

    def label(self, g: int) -> str:
        if self._labels is not None:
            return self._labels[g]
        if self.perms is not None:
            return cycle_string([int(x) for x in self.perms[g]])
        return str(g)

    def element(self, cycles: str) -> int:
        """Index of the element written in 1-based cycle notation."""
        if self.perms is None:
            raise InputError(f"{self.name or 'group'} has no permutation representation")
        image = np.array([parse_cycles(cycles, self.degree)], dtype=self.perms.dtype)
        if self.backend == "table":
            if "perm_lookup" not in self._cache:
                self._cache["perm_lookup"] = _PermBackend(self.perms)
            lookup = self._cache["perm_lookup"]
        else:
            lookup = self._backend
        try:
            return int(lookup.lookup(image)[0])
        except InputError:
            raise InputError(f"{cycles} is not an element of {self.name or 'the group'}") from None

    def elements(self) -> range:
        return range(self.order)

    def __len__(self):
        return self.order

    def __repr__(self):
        return f"FiniteGroup({self.name or '?'}, order={self.order}, backend={self.backend})"

    def check_axioms(self, exhaustive_limit=512, samples=10**6, seed=0):
        """Raise InputError naming the first failing triple."""
        n = self.order
        if n <= exhaustive_limit:
            idx = np.arange(n)
            for a in range(n):
                left = self.mul_vec(self.mul_outer([a], idx).ravel()[:, None], idx[None, :])
                right = self.mul_vec(np.full((n, n), a), self.mul_outer(idx, idx))
                bad = np.argwhere(left != right)
                if len(bad):
                    b, c = bad[0]
                    raise InputError(f"associativity fails at ({a}, {b}, {c})")
            return
        rng = np.random.default_rng(seed)
        trip = rng.integers(0, n, size=(samples, 3))
        a, b, c = trip.T
        left = self.mul_vec(self.mul_vec(a, b), c)
        right = self.mul_vec(a, self.mul_vec(b, c))
        bad = np.flatnonzero(left != right)
        if len(bad):
            i = bad[0]
            raise InputError(f"associativity fails at ({a[i]}, {b[i]}, {c[i]})")


def _perm_order(perm):
    seen = np.zeros(len(perm), dtype=bool)
    result = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            length += 1
        result = result * length // math.gcd(result, length)
    return result


# subgroups ----------------------------------------------------------------


class SubgroupHandle:
    """An explicit subgroup of ``parent``: sorted member indices plus generators."""

    __slots__ = ("parent", "mask", "generators", "_members", "_key")

    def __init__(self, parent: FiniteGroup, mask: np.ndarray, generators: Sequence[int]):
        self.parent = parent
        self.mask = mask
        self.mask.flags.writeable = False
        self.generators = tuple(int(g) for g in generators)
        self._members = None
        self._key = None

    @property
    def members(self) -> np.ndarray:
        if self._members is None:
            self._members = np.flatnonzero(self.mask)
        return self._members

    @property
    def order(self) -> int:
        return int(self.mask.sum()) if self._members is None else len(self._members)

    @property
    def key(self) -> bytes:
        if self._key is None:
            self._key = np.packbits(self.mask).tobytes()
        return self._key

    def __len__(self):
        return self.order

    def __contains__(self, g):
        return 0 <= g < len(self.mask) and bool(self.mask[g])

    def __eq__(self, other):
        return (isinstance(other, SubgroupHandle) and other.parent is self.parent
                and other.key == self.key)

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"SubgroupHandle(order={self.order}, generators={list(self.generators)})"


def closure_mask(G: FiniteGroup, gens: Iterable[int]) -> np.ndarray:
    """Membership mask of the subgroup generated by ``gens`` (breadth-first)."""
    mask = np.zeros(G.order, dtype=bool)
    mask[0] = True
    gens = np.array(sorted({int(g) for g in gens if g != 0}), dtype=np.int64)
    if len(gens) == 0:
        return mask
    frontier = np.zeros(1, dtype=np.int64)
    while len(frontier):
        prod = G.mul_outer(frontier, gens).ravel()
        fresh = prod[~mask[prod]]
        if len(fresh) == 0:
            break
        fresh = np.unique(fresh)
        mask[fresh] = True
        frontier = fresh
    return mask


def _greedy_generators(G, candidates, start=()):
    """Reduce ``candidates`` to a short generating list in increasing index order."""
    gens = [int(g) for g in start]
    mask = closure_mask(G, gens)
    for c in candidates:
        c = int(c)
        if not mask[c]:
            gens.append(c)
            mask = closure_mask(G, gens)
    return gens


def closure(G: FiniteGroup, gens: Sequence[int]) -> SubgroupHandle:
    for g in gens:
        G._check(g)
    mask = closure_mask(G, gens)
    return SubgroupHandle(G, mask, [g for g in gens if g != 0])


def subgroup_from_mask(G: FiniteGroup, mask: np.ndarray) -> SubgroupHandle:
    mask = np.asarray(mask, dtype=bool).copy()
    return SubgroupHandle(G, mask, _greedy_generators(G, np.flatnonzero(mask)))


def whole_group(G: FiniteGroup) -> SubgroupHandle:
    if "whole" not in G._cache:
        G._cache["whole"] = SubgroupHandle(G, np.ones(G.order, dtype=bool), G.generators)
    return G._cache["whole"]


def trivial_subgroup(G: FiniteGroup) -> SubgroupHandle:
    mask = np.zeros(G.order, dtype=bool)
    mask[0] = True
    return SubgroupHandle(G, mask, [])


def conjugate(G: FiniteGroup, g: int, x: int) -> int:
    """``x*g*x^-1``."""
    return G.mul(G.mul(x, g), G.inverse(x))


def conjugate_vec(G, g, x):
    """Elementwise ``x*g*x^-1``; arrays broadcast."""
    x = np.asarray(x, dtype=np.int64)
    return G.mul_vec(G.mul_vec(x, g), G.inverses[x])


def commutator(G: FiniteGroup, g: int, h: int) -> int:
    """``g^-1 h^-1 g h``."""
    return G.mul(G.mul(G.inverse(g), G.inverse(h)), G.mul(g, h))


def _commutators_outer(G, a, b):
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    left = G.mul_outer(G.inverses[a], G.inverses[b])
    right = G.mul_outer(a, b)
    return G.mul_vec(left, right).ravel()


def normal_closure(H: SubgroupHandle, seeds: Iterable[int]) -> SubgroupHandle:
    """Smallest subgroup containing ``seeds`` and normalised by ``H``."""
    G = H.parent
    gens = _greedy_generators(G, sorted({int(s) for s in seeds}))
    mask = closure_mask(G, gens)
    changed = True
    while changed:
        changed = False
        for h in H.generators:
            conj = conjugate_vec(G, np.array(gens, dtype=np.int64), np.full(len(gens), h))
            for c in conj:
                if not mask[c]:
                    gens.append(int(c))
                    mask = closure_mask(G, gens)
                    changed = True
    return SubgroupHandle(G, mask, gens)


# conjugacy ------------------------------------------------------------------


@dataclass(frozen=True)
class ConjugacyClass:
    id: int
    representative: int
    members: tuple[int, ...]
    size: int
    element_order: int
    name: str


@dataclass(frozen=True)
class ClassPartition:
    classes: tuple[ConjugacyClass, ...]
    class_of: np.ndarray
    # conjugator[y] * rep * conjugator[y]^-1 == y for rep of y's class
    conjugator: np.ndarray

    def __len__(self):
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def __getitem__(self, i):
        return self.classes[i]

    def of(self, g: int) -> ConjugacyClass:
        return self.classes[int(self.class_of[g])]


def _class_name(order, index):
    letters = ""
    index += 1
    while index:
        index, rem = divmod(index - 1, 26)
        letters = chr(ord("a") + rem) + letters
    return f"{order}{letters}"


def conjugacy_classes(G: FiniteGroup) -> ClassPartition:
    """Orbits of conjugation, ordered by minimal representative; identity class is 0."""
    cached = G._cache.get("classes")
    if cached is not None:
        return cached
    n = G.order
    class_of = np.full(n, -1, dtype=np.int64)
    conjugator = np.zeros(n, dtype=np.int64)
    gens = np.array(G.generators, dtype=np.int64)
    raw = []
    for x in range(n):
        if class_of[x] >= 0:
            continue
        cid = len(raw)
        class_of[x] = cid
        conjugator[x] = 0
        members = [x]
        frontier = np.array([x], dtype=np.int64)
        while len(frontier) and len(gens):
            f = np.repeat(frontier, len(gens))
            g = np.tile(gens, len(frontier))
            images = conjugate_vec(G, f, g)
            fresh_pos = np.flatnonzero(class_of[images] < 0)
            if len(fresh_pos) == 0:
                break
            _, first = np.unique(images[fresh_pos], return_index=True)
            fresh_pos = fresh_pos[first]
            fresh = images[fresh_pos]
            class_of[fresh] = cid
            conjugator[fresh] = G.mul_vec(g[fresh_pos], conjugator[f[fresh_pos]])
            members.extend(int(v) for v in fresh)
            frontier = fresh
        raw.append(sorted(members))
    per_order: dict[int, int] = {}
    classes = []
    for cid, members in enumerate(raw):
        o = int(G.element_orders[members[0]])
        idx = per_order.get(o, 0)
        per_order[o] = idx + 1
        classes.append(ConjugacyClass(cid, members[0], tuple(members), len(members), o,
                                      _class_name(o, idx)))
    class_of.flags.writeable = False
    conjugator.flags.writeable = False
    part = ClassPartition(tuple(classes), class_of, conjugator)
    G._cache["classes"] = part
    return part


def centralizer(G: FiniteGroup, g: int) -> SubgroupHandle:
    G._check(g)
    cache = G._cache.setdefault("centralizers", {})
    if g not in cache:
        everything = np.arange(G.order)
        mask = G.mul_vec(everything, g) == G.mul_vec(g, everything)
        cache[g] = SubgroupHandle(G, mask, _greedy_generators(G, np.flatnonzero(mask)))
    return cache[g]


def sylow_subgroup(G: FiniteGroup, p: int) -> SubgroupHandle:
    """One Sylow p-subgroup, grown from {1} by p-elements of the current normaliser."""
    n = G.order
    target = 1
    while n % (target * p) == 0:
        target *= p
    orders = G.element_orders
    p_elements = np.array([_is_prime_power(int(o)) and int(o) % p == 0 for o in orders])
    gens: list[int] = []
    P = trivial_subgroup(G)
    while P.order < target:
        cand = np.flatnonzero(normalizer_mask(G, P) & ~P.mask & p_elements)
        gens.append(int(cand[0]))
        P = SubgroupHandle(G, closure_mask(G, gens), gens)
    return P


def normalizer_mask(G: FiniteGroup, H: SubgroupHandle) -> np.ndarray:
    everything = np.arange(G.order)
    mask = np.ones(G.order, dtype=bool)
    for s in H.generators:
        mask &= H.mask[conjugate_vec(G, s, everything)]
    return mask


def is_normal(G: FiniteGroup, H: SubgroupHandle) -> bool:
    return bool(normalizer_mask(G, H).all())


def class_equation(G: FiniteGroup) -> Fraction:
    """Sum of ``1/|C_G(x)|`` over class representatives (always 1)."""
    part = conjugacy_classes(G)
    return sum((Fraction(1, centralizer(G, c.representative).order) for c in part), Fraction(0))


# series -------------------------------------------------------------------


def derived_subgroup(H: SubgroupHandle) -> SubgroupHandle:
    G = H.parent
    if H.order <= FULL_COMMUTATOR_LIMIT:
        comms = np.unique(_commutators_outer(G, H.members, H.members))
        gens = _greedy_generators(G, comms)
        return SubgroupHandle(G, closure_mask(G, gens), gens)
    seeds = _commutators_outer(G, H.generators, H.generators)
    return normal_closure(H, seeds)


def derived_series(H: SubgroupHandle) -> list[SubgroupHandle]:
    """``[H, H', H'', ...]`` ending with the first repeated term."""
    series = [H]
    while True:
        nxt = derived_subgroup(series[-1])
        series.append(nxt)
        if nxt.order == series[-2].order:
            return series
        if nxt.order == 1:
            return series


def lower_central_series(H: SubgroupHandle) -> list[SubgroupHandle]:
    """``[H, [H,H], [[H,H],H], ...]`` ending with the first repeated term or ``{1}``."""
    G = H.parent
    series = [H]
    while True:
        cur = series[-1]
        if cur.order <= FULL_COMMUTATOR_LIMIT and H.order <= FULL_COMMUTATOR_LIMIT:
            comms = np.unique(_commutators_outer(G, cur.members, H.members))
            gens = _greedy_generators(G, comms)
            nxt = SubgroupHandle(G, closure_mask(G, gens), gens)
        else:
            nxt = normal_closure(H, _commutators_outer(G, cur.generators, H.generators))
        series.append(nxt)
        if nxt.order == cur.order or nxt.order == 1:
            return series


def is_abelian(H: SubgroupHandle) -> bool:
    G = H.parent
    gens = np.array(H.generators, dtype=np.int64)
    if len(gens) < 2:
        return True
    return bool((G.mul_outer(gens, gens) == G.mul_outer(gens, gens).T).all())


def is_solvable(H: SubgroupHandle, shortcuts: bool = True) -> bool:
    """Derived series reaches ``{1}``.

    With ``shortcuts`` every subgroup of order < 60 or of prime-power order is
    declared solvable without computing the series.
    """
    n = H.order
    if shortcuts and (n < 60 or _is_prime_power(n)):
        return True
    memo = H.parent._subgroup_memo
    key = ("solvable", H.key)
    if shortcuts and key in memo:
        return memo[key]
    verdict = derived_series(H)[-1].order == 1
    memo[key] = verdict
    return verdict


def is_nilpotent(H: SubgroupHandle, shortcuts: bool = True) -> bool:
    n = H.order
    if shortcuts and (n == 1 or _is_prime_power(n)):
        return True
    memo = H.parent._subgroup_memo
    key = ("nilpotent", H.key)
    if shortcuts and key in memo:
        return memo[key]
    verdict = lower_central_series(H)[-1].order == 1
    memo[key] = verdict
    return verdict


def group_is_solvable(G: FiniteGroup) -> bool:
    if "solvable" not in G._cache:
        G._cache["solvable"] = is_solvable(whole_group(G))
    return G._cache["solvable"]


def group_is_nilpotent(G: FiniteGroup) -> bool:
    if "nilpotent" not in G._cache:
        G._cache["nilpotent"] = is_nilpotent(whole_group(G))
    return G._cache["nilpotent"]


def group_is_abelian(G: FiniteGroup) -> bool:
    if "abelian" not in G._cache:
        G._cache["abelian"] = is_abelian(whole_group(G))
    return G._cache["abelian"]


# pair relations -------------------------------------------------------------

RELATION_NAMES = ("abelian", "nilpotent", "solvable")


def relation_holds(G: FiniteGroup, x: int, y: int, relation: str, shortcuts: bool = True,
                   group_shortcut: bool | None = None) -> bool:
    """Whether ``<x, y>`` is abelian / nilpotent / solvable.

    Memoised per group on the unordered pair.  ``shortcuts`` enables the memo
    and the order-based subgroup shortcuts; ``group_shortcut`` (defaulting to
    ``shortcuts``) lets a group that itself satisfies the relation answer True
    without any closure.
    """
    if relation not in RELATION_NAMES:
        raise InputError(f"unknown relation {relation!r}")
    if group_shortcut is None:
        group_shortcut = shortcuts
    if x == 0 or y == 0 or x == y:
        return True
    if G.mul(x, y) == G.mul(y, x):
        return True
    if relation == "abelian":
        return False
    if group_shortcut:
        if relation == "solvable" and group_is_solvable(G):
            return True
        if relation == "nilpotent" and group_is_nilpotent(G):
            return True
    key = (relation, min(x, y), max(x, y))
    memo = G._pair_memo
    verdict = memo.get(key) if shortcuts else None
    if verdict is None:
        H = closure(G, [x, y])
        if relation == "solvable":
            verdict = is_solvable(H, shortcuts)
        else:
            verdict = is_nilpotent(H, shortcuts)
        memo.setdefault(key, verdict)
    return verdict


def solvabilizer(G: FiniteGroup, x: int) -> np.ndarray:
    """Sorted indices ``y`` with ``<x, y>`` solvable."""
    G._check(x)
    return np.array([y for y in range(G.order) if relation_holds(G, x, y, "solvable")],
                    dtype=np.int64)


def solvable_radical(G: FiniteGroup) -> SubgroupHandle:
    """Elements ``x`` with ``<x, y>`` solvable for every ``y``; decided per class."""
    if "radical" in G._cache:
        return G._cache["radical"]
    if group_is_solvable(G):
        result = whole_group(G)
    else:
        mask = np.zeros(G.order, dtype=bool)
        for cls in conjugacy_classes(G):
            a = cls.representative
            if all(relation_holds(G, a, y, "solvable") for y in range(G.order)):
                mask[list(cls.members)] = True
        result = subgroup_from_mask(G, mask)
    G._cache["radical"] = result
    return result


# products and standalone subgroups -------------------------------------------


def direct_product(G: FiniteGroup, H: FiniteGroup, budget: Budget | None = None,
                   name: str = "") -> FiniteGroup:
    """``G x H`` with ``(g, h)`` encoded as ``g*|H| + h``."""
    budget = budget or default_budget()
    n, m = G.order, H.order
    N = n * m
    if N > budget.max_order:
        raise BudgetExceeded(f"product order {N} exceeds budget {budget.max_order}")
    gens = [g * m for g in G.generators] + list(H.generators)
    labels = [f"({G.label(g)},{H.label(h)})" for g in range(n) for h in range(m)] \
        if N <= 20000 else None
    if N <= budget.table_limit:
        TG = G.mul_outer(np.arange(n), np.arange(n))
        TH = H.mul_outer(np.arange(m), np.arange(m))
        table = (TG[:, None, :, None] * m + TH[None, :, None, :]).reshape(N, N)
        return FiniteGroup.from_table(table, name=name, generators=gens, labels=labels)
    if G.perms is None or H.perms is None:
        raise BudgetExceeded(
            f"product order {N} exceeds table budget {budget.table_limit} "
            "and a factor has no permutation representation")
    d1, d2 = G.degree, H.degree
    dtype = np.uint8 if d1 + d2 < 256 else np.uint16
    perms = np.empty((N, d1 + d2), dtype=dtype)
    perms[:, :d1] = np.repeat(G.perms, m, axis=0)
    perms[:, d1:] = np.tile(H.perms.astype(dtype) + d1, (n, 1))
    return FiniteGroup(_PermBackend(perms), generators=gens, name=name, perms=perms,
                       labels=labels)


def subgroup_as_group(H: SubgroupHandle, name: str = "") -> FiniteGroup:
    """Relabel ``H`` as a standalone group (identity stays at 0, order preserved)."""
    G = H.parent
    members = H.members
    local = np.full(G.order, -1, dtype=np.int64)
    local[members] = np.arange(len(members))
    gens = [int(local[g]) for g in H.generators]
    labels = [G.label(int(g)) for g in members]
    perms = None if G.perms is None else G.perms[members]
    if len(members) <= default_budget().table_limit:
        table = local[G.mul_outer(members, members)]
        return FiniteGroup.from_table(table, name=name, generators=gens, labels=labels,
                                      perms=perms)
    return FiniteGroup(_PermBackend(np.ascontiguousarray(perms)), generators=gens, name=name,
                       perms=np.ascontiguousarray(perms), labels=labels)
