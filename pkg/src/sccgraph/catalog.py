"""Group construction from spec strings, and the group file formats.

Spec grammar::

    cyclic:n            cyclic group of order n (element i = rotation by i)
    dihedral:n          symmetries of the n-gon, order 2n, n >= 3
    quaternion:m        generalized quaternion group of order m = 2^k >= 8
    symmetric:n         S_n on n points
    alternating:n       A_n on n points
    psl2:q              PSL(2,q) on the q+1 points of the projective line
    sl2:q               SL(2,q) on the q^2-1 nonzero vectors of GF(q)^2
    product:(A)x(B)     direct product, A and B specs
    perm-file:PATH      permutation generators, see :func:`parse_perm_file`
    table-file:PATH     Cayley table, see :func:`parse_table_file`
    named:NAME          bundled generators: M10, and the stretch groups PSL34, Sz8

psl2 and sl2 accept prime powers q <= 32.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

import numpy as np

from .budget import Budget, default_budget
from .errors import BudgetExceeded, InputError
from .fields import FieldTable, build_field, prime_power
from .group import FiniteGroup, cycle_string, direct_product, parse_cycles

KINDS = ("cyclic", "dihedral", "quaternion", "symmetric", "alternating", "psl2", "sl2",
         "product", "perm-file", "table-file", "named")
NAMED = ("M10", "PSL34", "Sz8")
MAX_FIELD = 32


@dataclass(frozen=True)
class GroupSpec:
    kind: str
    arg: object  # int, str (path/name) or (GroupSpec, GroupSpec)

    def __str__(self):
        if self.kind == "product":
            left, right = self.arg
            return f"product:({left})x({right})"
        return f"{self.kind}:{self.arg}"

    @classmethod
    def parse(cls, text: str) -> "GroupSpec":
        spec, end = _parse(text, 0)
        if end != len(text):
            raise InputError(f"spec {text!r}: position {end}: unexpected trailing text")
        return spec


def _parse(text, pos):
    m = re.compile(r"[a-z0-9-]+").match(text, pos)
    if not m or m.group(0) not in KINDS:
        raise InputError(f"spec {text!r}: position {pos}: unknown group kind")
    kind = m.group(0)
    pos = m.end()
    if pos >= len(text) or text[pos] != ":":
        raise InputError(f"spec {text!r}: position {pos}: expected ':'")
    pos += 1
    if kind == "product":
        left, pos = _parse_paren(text, pos)
        if pos >= len(text) or text[pos] != "x":
            raise InputError(f"spec {text!r}: position {pos}: expected 'x'")
        right, pos = _parse_paren(text, pos + 1)
        return GroupSpec(kind, (left, right)), pos
    if kind in ("perm-file", "table-file"):
        # a path runs to the end of the enclosing spec
        depth = 0
        end = pos
        while end < len(text):
            if text[end] == "(":
                depth += 1
            elif text[end] == ")":
                if depth == 0:
                    break
                depth -= 1
            end += 1
        if end == pos:
            raise InputError(f"spec {text!r}: position {pos}: empty path")
        return GroupSpec(kind, text[pos:end]), end
    if kind == "named":
        m = re.compile(r"[A-Za-z0-9_]+").match(text, pos)
        if not m or m.group(0) not in NAMED:
            raise InputError(f"spec {text!r}: position {pos}: unknown named group "
                             f"(known: {', '.join(NAMED)})")
        return GroupSpec(kind, m.group(0)), m.end()
    m = re.compile(r"\d+").match(text, pos)
    if not m:
        raise InputError(f"spec {text!r}: position {pos}: expected a positive integer")
    value = int(m.group(0))
    _validate(kind, value, text, pos)
    return GroupSpec(kind, value), m.end()


def _parse_paren(text, pos):
    if pos >= len(text) or text[pos] != "(":
        raise InputError(f"spec {text!r}: position {pos}: expected '('")
    inner, end = _parse(text, pos + 1)
    if end >= len(text) or text[end] != ")":
        raise InputError(f"spec {text!r}: position {end}: expected ')'")
    return inner, end + 1


def _validate(kind, value, text, pos):
    where = f"spec {text!r}: position {pos}"
    if value < 1:
        raise InputError(f"{where}: argument must be positive")
    if kind == "dihedral" and value < 3:
        raise InputError(f"{where}: dihedral:n needs n >= 3 (order 2n)")
    if kind == "quaternion" and (value < 8 or value & (value - 1)):
        raise InputError(f"{where}: quaternion:m needs m a power of 2, m >= 8")
    if kind in ("psl2", "sl2") and (prime_power(value) is None or value > MAX_FIELD):
        raise InputError(f"{where}: q={value} is not a prime power <= {MAX_FIELD}")


# constructions ---------------------------------------------------------------


def cyclic(n: int) -> FiniteGroup:
    idx = np.arange(n)
    table = (idx[:, None] + idx[None, :]) % n
    return FiniteGroup.from_table(table, name=f"cyclic:{n}", generators=[1] if n > 1 else [])


def quaternion(m: int) -> FiniteGroup:
    """Generalized quaternion <a, b | a^(m/2), b^2 = a^(m/4), b a b^-1 = a^-1>.

    Element ``i + (m/2)*j`` is ``a^i b^j``.
    """
    N = m // 2
    table = np.empty((m, m), dtype=np.int64)
    for x in range(m):
        i, j = x % N, x // N
        for y in range(m):
            k, l = y % N, y // N
            if j == 0:
                e, f = i + k, l
            else:
                e, f = i - k, 1 + l
            if f == 2:
                e, f = e + N // 2, 0
            table[x, y] = e % N + N * f
    labels = [("a^%d" % (x % N) if x % N else "") + ("b" if x >= N else "") or "1"
              for x in range(m)]
    return FiniteGroup.from_table(table, name=f"quaternion:{m}", generators=[1, N],
                                  labels=labels)


def _cycle(points, degree):
    image = list(range(degree))
    for a, b in zip(points, points[1:] + points[:1]):
        image[a] = b
    return tuple(image)


def dihedral(n: int, budget=None) -> FiniteGroup:
    rotation = _cycle(list(range(n)), n)
    reflection = tuple((n - i) % n for i in range(n))
    return FiniteGroup.from_permutations([rotation, reflection], n, name=f"dihedral:{n}",
                                         budget=budget)


def symmetric(n: int, budget=None) -> FiniteGroup:
    gens = []
    if n >= 2:
        gens = [_cycle([0, 1], n), _cycle(list(range(n)), n)]
    return FiniteGroup.from_permutations(gens, n, name=f"symmetric:{n}", budget=budget)


def alternating(n: int, budget=None) -> FiniteGroup:
    gens = [_cycle([0, 1, k], n) for k in range(2, n)]
    return FiniteGroup.from_permutations(gens, n, name=f"alternating:{n}", budget=budget)


def _transvections(F: FieldTable):
    # elementary matrices [[1,a],[0,1]], [[1,0],[a,1]] for a in an F_p-basis of F
    basis = [F.p**j for j in range(F.k)]  # 1, x, x^2, ... in the digit encoding
    mats = []
    for a in basis:
        mats.append(((1, a), (0, 1)))
        mats.append(((1, 0), (a, 1)))
    return mats


def _apply(F, mat, vec):
    (a, b), (c, d) = mat
    x, y = vec
    A, M = F.add, F.mul
    return (int(A[M[a, x], M[b, y]]), int(A[M[c, x], M[d, y]]))


def projective_points(F: FieldTable):
    """Normalised representatives (x, 1) for x in F, then (1, 0)."""
    return [(x, 1) for x in range(F.q)] + [(1, 0)]


def _normalise(F, vec):
    x, y = vec
    if y:
        yi = F.inv(y)
        return (int(F.mul[x, yi]), 1)
    return (1, 0)


def psl2(q: int, budget=None) -> FiniteGroup:
    F = build_field(q)
    points = projective_points(F)
    index = {pt: i for i, pt in enumerate(points)}
    gens = []
    for mat in _transvections(F):
        gens.append(tuple(index[_normalise(F, _apply(F, mat, pt))] for pt in points))
    return FiniteGroup.from_permutations(gens, len(points), name=f"psl2:{q}", budget=budget)


def sl2(q: int, budget=None) -> FiniteGroup:
    F = build_field(q)
    vectors = [(x, y) for y in range(q) for x in range(q) if (x, y) != (0, 0)]
    index = {v: i for i, v in enumerate(vectors)}
    gens = []
    for mat in _transvections(F):
        gens.append(tuple(index[_apply(F, mat, v)] for v in vectors))
    return FiniteGroup.from_permutations(gens, len(vectors), name=f"sl2:{q}", budget=budget)


# files -----------------------------------------------------------------------


def parse_perm_text(text: str, *, name="", budget: Budget | None = None) -> FiniteGroup:
    """``perm <degree>`` header, then one generator per nonempty line in 1-based cycles.

    ``#`` starts a comment.
    """
    degree = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if degree is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "perm" or not parts[1].isdigit() \
                    or int(parts[1]) < 1:
                raise InputError(f"line {lineno}: expected header 'perm <degree>'")
            degree = int(parts[1])
            continue
        try:
            gens.append(parse_cycles(line, degree))
        except InputError as exc:
            raise InputError(f"line {lineno}: {exc}") from None
    if degree is None:
        raise InputError("line 1: missing 'perm <degree>' header")
    if not gens:
        raise InputError("empty generator list")
    return FiniteGroup.from_permutations(gens, degree, name=name, budget=budget)


def parse_perm_file(path, *, budget: Budget | None = None) -> FiniteGroup:
    text = _read(path)
    return parse_perm_text(text, name=f"perm-file:{path}", budget=budget)


def parse_table_text(text: str, *, name="", budget: Budget | None = None) -> FiniteGroup:
    """First line ``n``, then ``n`` rows of ``n`` indices; identity at 0."""
    budget = budget or default_budget()
    lines = [ln.split("#", 1)[0].split() for ln in text.splitlines()]
    lines = [(i + 1, ln) for i, ln in enumerate(lines) if ln]
    if not lines or len(lines[0][1]) != 1 or not lines[0][1][0].isdigit():
        raise InputError("line 1: expected the group order n")
    n = int(lines[0][1][0])
    if n < 1:
        raise InputError("line 1: order must be positive")
    if n > budget.table_limit:
        raise BudgetExceeded(f"table order {n} exceeds table budget {budget.table_limit}")
    rows = lines[1:]
    if len(rows) != n:
        raise InputError(f"expected {n} table rows, found {len(rows)}")
    table = np.empty((n, n), dtype=np.int64)
    for r, (lineno, tokens) in enumerate(rows):
        if len(tokens) != n:
            raise InputError(f"line {lineno}: expected {n} entries, found {len(tokens)}")
        for c, tok in enumerate(tokens):
            if not tok.isdigit() or int(tok) >= n:
                raise InputError(f"line {lineno}: cell ({r}, {c}): {tok!r} not in 0..{n - 1}")
            table[r, c] = int(tok)
    return table_to_group(table, name=name)


def table_to_group(table, name="") -> FiniteGroup:
    table = np.asarray(table, dtype=np.int64)
    n = table.shape[0]
    idx = np.arange(n)
    if not (table[0] == idx).all():
        c = int(np.flatnonzero(table[0] != idx)[0])
        raise InputError(f"identity violation at cell (0, {c})")
    if not (table[:, 0] == idx).all():
        r = int(np.flatnonzero(table[:, 0] != idx)[0])
        raise InputError(f"identity violation at cell ({r}, 0)")
    for r in range(n):
        if len(np.unique(table[r])) != n:
            raise InputError(f"row {r} is not a permutation (not a Latin square)")
    for c in range(n):
        if len(np.unique(table[:, c])) != n:
            raise InputError(f"column {c} is not a permutation (not a Latin square)")
    group = FiniteGroup.from_table(table, name=name)
    group.check_axioms()
    return group


def parse_table_file(path, *, budget: Budget | None = None) -> FiniteGroup:
    return parse_table_text(_read(path), name=f"table-file:{path}", budget=budget)


def _read(path):
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def format_table(group: FiniteGroup) -> str:
    n = group.order
    table = group.mul_outer(np.arange(n), np.arange(n))
    lines = [str(n)] + [" ".join(str(int(v)) for v in row) for row in table]
    return "\n".join(lines) + "\n"


def format_perm(group: FiniteGroup) -> str:
    if group.perms is None:
        raise InputError("group has no permutation representation")
    lines = [f"perm {group.degree}"]
    lines += [cycle_string(group.perms[g].tolist()) for g in group.generators]
    return "\n".join(lines) + "\n"


def named(name: str, budget=None) -> FiniteGroup:
    text = resources.files("sccgraph").joinpath("data").joinpath(f"{name.lower()}.perm").read_text()
    return parse_perm_text(text, name=f"named:{name}", budget=budget)


# entry point -------------------------------------------------------------------


def make(spec, budget: Budget | None = None) -> FiniteGroup:
    """Build the group described by ``spec`` (a string or :class:`GroupSpec`)."""
    budget = budget or default_budget()
    if isinstance(spec, str):
        spec = GroupSpec.parse(spec)
    kind, arg = spec.kind, spec.arg
    _precheck_order(spec, budget)
    if kind == "cyclic":
        group = cyclic(arg)
    elif kind == "quaternion":
        group = quaternion(arg)
    elif kind == "dihedral":
        group = dihedral(arg, budget)
    elif kind == "symmetric":
        group = symmetric(arg, budget)
    elif kind == "alternating":
        group = alternating(arg, budget)
    elif kind == "psl2":
        group = psl2(arg, budget)
    elif kind == "sl2":
        group = sl2(arg, budget)
    elif kind == "product":
        left, right = arg
        group = direct_product(make(left, budget), make(right, budget), budget)
    elif kind == "perm-file":
        group = parse_perm_file(arg, budget=budget)
    elif kind == "table-file":
        group = parse_table_file(arg, budget=budget)
    else:
        group = named(arg, budget)
    group.name = str(spec)
    return group


def expected_order(spec: GroupSpec) -> int | None:
    """Order implied by the spec alone, when it is known without construction."""
    kind, arg = spec.kind, spec.arg
    if kind == "cyclic" or kind == "quaternion":
        return arg
    if kind == "dihedral":
        return 2 * arg
    if kind == "symmetric":
        return _factorial(arg)
    if kind == "alternating":
        return max(1, _factorial(arg) // 2)
    if kind == "sl2":
        return arg * (arg * arg - 1)
    if kind == "psl2":
        return arg * (arg * arg - 1) // (2 if arg % 2 else 1)
    if kind == "product":
        a, b = (expected_order(s) for s in arg)
        return None if a is None or b is None else a * b
    if kind == "named":
        return {"M10": 720, "PSL34": 20160, "Sz8": 29120}[arg]
    return None


def _factorial(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def _precheck_order(spec, budget):
    n = expected_order(spec)
    if n is not None and n > budget.max_order:
        raise BudgetExceeded(f"{spec}: order {n} exceeds budget {budget.max_order}")


# corpus ----------------------------------------------------------------------


def default_corpus() -> list[str]:
    specs = [f"cyclic:{n}" for n in range(1, 25)]
    specs += [f"dihedral:{n}" for n in range(3, 13)]
    specs += [f"quaternion:{m}" for m in (8, 16, 32)]
    specs += [f"symmetric:{n}" for n in range(3, 7)]
    specs += [f"alternating:{n}" for n in range(4, 7)]
    specs += [f"psl2:{q}" for q in (4, 5, 7, 8, 9, 11, 13, 17)]
    specs += ["sl2:5", "named:M10"]
    specs += ["product:(cyclic:2)x(alternating:5)",
              "product:(alternating:5)x(alternating:5)",
              "product:(cyclic:3)x(symmetric:4)"]
    return specs


def stretch_corpus() -> list[str]:
    return default_corpus() + ["named:PSL34", "named:Sz8"]


def read_corpus(path) -> list[str]:
    specs = []
    for lineno, raw in enumerate(_read(path).splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            try:
                GroupSpec.parse(line)
            except InputError as exc:
                raise InputError(f"{path}: line {lineno}: {exc}") from None
            specs.append(line)
    return specs


def iter_specs(specs):
    return (GroupSpec.parse(s) if isinstance(s, str) else s for s in specs)


__all__ = ["GroupSpec", "make", "parse_perm_file", "parse_table_file", "parse_perm_text",
           "parse_table_text", "format_table", "format_perm", "default_corpus",
           "stretch_corpus", "read_corpus", "table_to_group", "projective_points"]
