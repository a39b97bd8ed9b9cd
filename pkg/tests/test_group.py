import itertools
from fractions import Fraction

import numpy as np
import pytest
import sympy.combinatorics as sc
from hypothesis import given, settings, strategies as st

from sccgraph import catalog
from sccgraph.errors import BudgetExceeded, InputError
from sccgraph.group import (
    FiniteGroup,
    centralizer,
    class_equation,
    closure,
    commutator,
    conjugacy_classes,
    conjugate,
    cycle_string,
    derived_series,
    direct_product,
    is_nilpotent,
    is_normal,
    is_solvable,
    lower_central_series,
    normal_closure,
    parse_cycles,
    relation_holds,
    solvabilizer,
    solvable_radical,
    subgroup_as_group,
    sylow_subgroup,
    whole_group,
)

from conftest import cached_group


# brute-force oracle on explicit permutation tuples --------------------------------


def _compose(a, b):
    return tuple(a[i] for i in b)


def _brute_closure(gens, degree):
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = _compose(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def _brute_solvable(elements):
    current = set(elements)
    while len(current) > 1:
        inv = {x: tuple(np.argsort(x)) for x in current}
        comms = {_compose(_compose(inv[a], inv[b]), _compose(a, b))
                 for a in current for b in current}
        nxt = _brute_closure(list(comms), len(next(iter(current))))
        if nxt == current:
            return False
        current = nxt
    return True


def _brute_classes(elements):
    inv = {x: tuple(int(v) for v in np.argsort(x)) for x in elements}
    out = []
    seen = set()
    for x in sorted(elements):
        if x in seen:
            continue
        cls = {_compose(_compose(g, x), inv[g]) for g in elements}
        seen |= cls
        out.append(cls)
    return out


def test_s4_matches_brute_force():
    G = cached_group("symmetric:4")
    gens = [tuple(int(v) for v in G.perms[g]) for g in G.generators]
    elems = _brute_closure(gens, 4)
    assert G.order == len(elems) == 24
    sizes = sorted(len(c) for c in _brute_classes(elems))
    assert sorted(c.size for c in conjugacy_classes(G)) == sizes
    # pair solvability on every pair of S4 is true; check a sample against the oracle
    for x, y in [(1, 5), (3, 17), (7, 22)]:
        sub = _brute_closure([tuple(int(v) for v in G.perms[x]),
                              tuple(int(v) for v in G.perms[y])], 4)
        assert relation_holds(G, x, y, "solvable", shortcuts=False, group_shortcut=False) \
            == _brute_solvable(sub)


def test_a5_pair_solvability_brute_force():
    G = cached_group("alternating:5")
    rng = np.random.default_rng(7)
    perms = {g: tuple(int(v) for v in G.perms[g]) for g in range(G.order)}
    for _ in range(40):
        x, y = (int(v) for v in rng.integers(1, G.order, size=2))
        sub = _brute_closure([perms[x], perms[y]], 5)
        assert relation_holds(G, x, y, "solvable", shortcuts=False, group_shortcut=False) \
            == _brute_solvable(sub)


# composition conventions ------------------------------------------------------------


def test_composition_right_first():
    G = cached_group("symmetric:3")
    a, b = G.element("(1 2)"), G.element("(1 3)")
    assert G.label(G.mul(a, b)) == "(1 3 2)"


def test_conjugate_convention():
    G = cached_group("symmetric:4")
    g, x = G.element("(1 2)"), G.element("(2 3)")
    assert conjugate(G, g, x) == G.mul(G.mul(x, g), G.inverse(x))
    assert G.label(conjugate(G, g, x)) == "(1 3)"


def test_commutator_convention():
    G = cached_group("symmetric:3")
    g, h = G.element("(1 2)"), G.element("(1 2 3)")
    expect = G.mul(G.mul(G.inverse(g), G.inverse(h)), G.mul(g, h))
    assert commutator(G, g, h) == expect


def test_cycle_roundtrip():
    assert cycle_string(parse_cycles("(1 2 3)(4 5)", 6)) == "(1 2 3)(4 5)"
    assert parse_cycles("()", 3) == (0, 1, 2)
    assert parse_cycles("(1,2)", 3) == (1, 0, 2)


@pytest.mark.parametrize("text", ["(1 1)", "(1 9)", "(1 2", "1 2", "(a b)"])
def test_cycle_errors(text):
    with pytest.raises(InputError):
        parse_cycles(text, 4)


def test_element_not_in_group():
    G = cached_group("alternating:4")
    with pytest.raises(InputError):
        G.element("(1 2)")
    H = catalog.cyclic(4)
    with pytest.raises(InputError):
        H.element("(1 2)")


# axioms and bookkeeping --------------------------------------------------------------


@pytest.mark.parametrize("spec", ["cyclic:12", "dihedral:6", "quaternion:16", "symmetric:5",
                                  "psl2:7", "sl2:5", "product:(cyclic:3)x(symmetric:3)"])
def test_axioms(spec):
    G = cached_group(spec)
    G.check_axioms()
    assert G.element_orders[0] == 1
    assert all(G.order % int(o) == 0 for o in G.element_orders)
    n = np.arange(G.order)
    assert (G.mul_vec(n, G.inverses) == 0).all()
    assert (G.mul_vec(G.inverses, n) == 0).all()


def test_check_axioms_rejects_broken_table():
    table = np.array([[0, 1, 2], [1, 2, 0], [2, 1, 0]])
    with pytest.raises(InputError):
        catalog.table_to_group(table)


def test_table_backend_matches_permutation_backend():
    gens = [(1, 0, 2, 3, 4), (1, 2, 3, 4, 0)]
    from sccgraph.budget import Budget
    perm = FiniteGroup.from_permutations(gens, 5, budget=Budget(100_000, 1, 10**7))
    table = FiniteGroup.from_permutations(gens, 5)
    assert perm.backend == "permutation" and table.backend == "table"
    rng = np.random.default_rng(1)
    a = rng.integers(0, 120, 200)
    b = rng.integers(0, 120, 200)
    labels_p = [perm.label(int(v)) for v in perm.mul_vec(a, b)]
    pa = [perm.label(int(v)) for v in a]
    pb = [perm.label(int(v)) for v in b]
    ta = [table.element(x) for x in pa]
    tb = [table.element(x) for x in pb]
    labels_t = [table.label(int(v)) for v in table.mul_vec(np.array(ta), np.array(tb))]
    assert labels_p == labels_t
    assert sorted(c.size for c in conjugacy_classes(perm)) == \
        sorted(c.size for c in conjugacy_classes(table))


# conjugacy classes ---------------------------------------------------------------------

CLASS_SIZES = {
    "alternating:5": [1, 12, 12, 15, 20],
    "psl2:4": [1, 12, 12, 15, 20],
    "psl2:7": [1, 21, 24, 24, 42, 56],
    "quaternion:8": [1, 1, 2, 2, 2],
    "symmetric:4": [1, 3, 6, 6, 8],
    "dihedral:5": [1, 2, 2, 5],
    "named:M10": [1, 45, 80, 90, 90, 90, 144, 180],
}


@pytest.mark.parametrize("spec", sorted(CLASS_SIZES))
def test_class_sizes(spec):
    assert sorted(c.size for c in conjugacy_classes(cached_group(spec))) == CLASS_SIZES[spec]


@pytest.mark.parametrize("spec,k", [("sl2:5", 9), ("psl2:17", 11), ("alternating:6", 7),
                                    ("symmetric:6", 11), ("psl2:8", 9)])
def test_class_counts(spec, k):
    assert len(conjugacy_classes(cached_group(spec))) == k


def test_class_structure():
    G = cached_group("psl2:7")
    part = conjugacy_classes(G)
    assert list(part.classes[0].members) == [0]
    for c in part.classes:
        assert c.representative == min(c.members)
        assert len({int(G.element_orders[m]) for m in c.members}) == 1
        assert G.order % c.size == 0
        for m in c.members:
            assert conjugate(G, c.representative, int(part.conjugator[m])) == m
            assert part.class_of[m] == c.id
    assert class_equation(G) == Fraction(1)


def test_class_names_atlas_like():
    names = sorted(c.name for c in conjugacy_classes(cached_group("alternating:5")))
    assert names == ["1a", "2a", "3a", "5a", "5b"]


@pytest.mark.parametrize("spec", ["symmetric:4", "alternating:5", "dihedral:7", "psl2:8"])
def test_sympy_cross_check(spec):
    G = cached_group(spec)
    sp = sc.PermutationGroup([sc.Permutation(list(map(int, G.perms[g]))) for g in G.generators])
    assert sp.order() == G.order
    assert sp.is_solvable == is_solvable(whole_group(G), shortcuts=False)
    assert sp.is_nilpotent == is_nilpotent(whole_group(G), shortcuts=False)
    assert len(list(sp.conjugacy_classes())) == len(conjugacy_classes(G))
    assert sp.derived_subgroup().order() == derived_series(whole_group(G))[1].order


# series and predicates ---------------------------------------------------------------------


@pytest.mark.parametrize("spec,solv,nil", [
    ("cyclic:12", True, True), ("quaternion:16", True, True), ("dihedral:6", True, False),
    ("symmetric:4", True, False), ("alternating:5", False, False), ("sl2:5", False, False),
    ("product:(cyclic:3)x(symmetric:4)", True, False), ("psl2:9", False, False),
])
def test_solvable_nilpotent(spec, solv, nil):
    H = whole_group(cached_group(spec))
    assert is_solvable(H, shortcuts=False) == solv == is_solvable(H)
    assert is_nilpotent(H, shortcuts=False) == nil == is_nilpotent(H)


def test_series_orders():
    S4 = whole_group(cached_group("symmetric:4"))
    assert [H.order for H in derived_series(S4)] == [24, 12, 4, 1]
    # the series stops at the first repeated term
    assert [H.order for H in lower_central_series(S4)] == [24, 12, 12]
    D8 = whole_group(cached_group("dihedral:8"))
    assert [H.order for H in lower_central_series(D8)] == [16, 4, 2, 1]


def test_normal_closure_and_normality():
    G = cached_group("symmetric:4")
    t = G.element("(1 2)(3 4)")
    V = normal_closure(whole_group(G), [t])
    assert V.order == 4 and is_normal(G, V)
    assert not is_normal(G, closure(G, [G.element("(1 2)")]))


def test_solvable_radical():
    assert solvable_radical(cached_group("alternating:5")).order == 1
    assert solvable_radical(cached_group("sl2:5")).order == 2
    assert solvable_radical(cached_group("product:(cyclic:2)x(alternating:5)")).order == 2
    assert solvable_radical(cached_group("symmetric:4")).order == 24


def test_solvabilizer_contains_centralizer():
    G = cached_group("alternating:5")
    x = G.element("(1 2 3 4 5)")
    sol = set(solvabilizer(G, x).tolist())
    assert set(centralizer(G, x).members.tolist()) <= sol
    # the only solvable subgroups through a 5-cycle lie in its normaliser D10
    assert len(sol) == 10


def test_sylow_subgroup_orders():
    G = cached_group("symmetric:5")
    assert sylow_subgroup(G, 2).order == 8
    assert sylow_subgroup(G, 3).order == 3
    assert sylow_subgroup(G, 5).order == 5


def test_direct_product_and_standalone():
    A = cached_group("alternating:4")
    C = cached_group("cyclic:2")
    P = direct_product(C, A)
    assert P.order == 24
    assert len(conjugacy_classes(P)) == 8
    H = subgroup_as_group(closure(P, [2, 4]))
    H.check_axioms()


def test_product_over_table_budget_uses_permutations():
    G = cached_group("product:(alternating:5)x(alternating:5)")
    assert G.order == 3600 and G.backend == "table"
    from sccgraph.budget import Budget
    P = direct_product(cached_group("alternating:5"), cached_group("alternating:5"),
                       Budget(100_000, 100, 10**7))
    assert P.backend == "permutation"
    assert len(conjugacy_classes(P)) == 25


def test_budget_exceeded():
    from sccgraph.budget import Budget
    with pytest.raises(BudgetExceeded):
        catalog.make("symmetric:9", Budget(1000, 5000, 10**7))


# properties ---------------------------------------------------------------------------------

PROPERTY_GROUPS = ["symmetric:4", "alternating:5", "psl2:7", "quaternion:16", "dihedral:9"]


@settings(max_examples=60, deadline=None)
@given(spec=st.sampled_from(PROPERTY_GROUPS), data=st.data())
def test_relation_conjugation_equivariant(spec, data):
    G = cached_group(spec)
    x, y, g = (data.draw(st.integers(0, G.order - 1)) for _ in range(3))
    for rel in ("abelian", "nilpotent", "solvable"):
        a = relation_holds(G, x, y, rel, group_shortcut=False)
        b = relation_holds(G, conjugate(G, x, g), conjugate(G, y, g), rel, group_shortcut=False)
        assert a == b


@settings(max_examples=60, deadline=None)
@given(spec=st.sampled_from(PROPERTY_GROUPS), data=st.data())
def test_lagrange(spec, data):
    G = cached_group(spec)
    gens = data.draw(st.lists(st.integers(0, G.order - 1), min_size=1, max_size=3))
    H = closure(G, gens)
    assert G.order % H.order == 0
    m = H.members
    assert 0 in m
    prod = G.mul_outer(m, m)
    assert np.isin(prod, m).all()
    assert np.isin(G.inverses[m], m).all()


@settings(max_examples=60, deadline=None)
@given(spec=st.sampled_from(PROPERTY_GROUPS), data=st.data())
def test_class_size_centralizer_duality(spec, data):
    G = cached_group(spec)
    g = data.draw(st.integers(0, G.order - 1))
    assert conjugacy_classes(G).of(g).size * centralizer(G, g).order == G.order


@settings(max_examples=40, deadline=None)
@given(spec=st.sampled_from(PROPERTY_GROUPS), data=st.data())
def test_relation_chain(spec, data):
    G = cached_group(spec)
    x, y = (data.draw(st.integers(0, G.order - 1)) for _ in range(2))
    ab = relation_holds(G, x, y, "abelian")
    nil = relation_holds(G, x, y, "nilpotent")
    sol = relation_holds(G, x, y, "solvable")
    assert (not ab or nil) and (not nil or sol)


def test_relation_errors():
    G = cached_group("symmetric:3")
    with pytest.raises(InputError):
        relation_holds(G, 1, 2, "cyclic")
    with pytest.raises(InputError):
        G.mul(0, 99)


def test_exhaustive_pairs_small():
    G = cached_group("dihedral:4")
    for x, y in itertools.product(range(G.order), repeat=2):
        assert relation_holds(G, x, y, "nilpotent")
