"""Finite fields GF(p^k) as addition/multiplication tables.

Element ``i`` stands for the polynomial whose base-``p`` digits are the
coefficients of ``i`` (least significant digit = constant term), so 0 is the
zero of the field and 1 is the one.  The modulus is the first monic
irreducible polynomial of degree ``k`` found in lexicographic search; any
choice gives an isomorphic field.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import InputError


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, k)`` with ``q == p**k`` and ``p`` prime, else ``None``."""
    if q < 2:
        return None
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k = 0
    while q % p == 0:
        q //= p
        k += 1
    return (p, k) if q == 1 else None


def _poly_mulmod(a, b, modulus, p):
    # coefficient lists, low degree first; modulus is monic of degree k
    k = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    for deg in range(len(prod) - 1, k - 1, -1):
        c = prod[deg]
        if c:
            for j in range(k + 1):
                prod[deg - k + j] = (prod[deg - k + j] - c * modulus[j]) % p
    return (prod + [0] * k)[:k]


def _is_irreducible(poly, p):
    # brute force: no monic factor of degree 1..k//2
    k = len(poly) - 1
    for d in range(1, k // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            divisor = list(tail) + [1]
            rem = list(poly)
            for deg in range(k, d - 1, -1):
                c = rem[deg]
                if c:
                    for j in range(d + 1):
                        rem[deg - d + j] = (rem[deg - d + j] - c * divisor[j]) % p
            if not any(rem[:d]):
                return False
    return True


def irreducible_polynomial(p: int, k: int) -> list[int]:
    """First monic irreducible polynomial of degree ``k`` over GF(p), low degree first."""
    if k == 1:
        return [0, 1]
    for tail in itertools.product(range(p), repeat=k):
        poly = list(reversed(tail)) + [1]
        if poly[0] and _is_irreducible(poly, p):
            return poly
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


@dataclass(frozen=True, eq=False)
class FieldTable:
    p: int
    k: int
    add: np.ndarray
    mul: np.ndarray
    modulus: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p**self.k

    def neg(self, a: int) -> int:
        return int(np.flatnonzero(self.add[a] == 0)[0])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return int(np.flatnonzero(self.mul[a] == 1)[0])

    def sub(self, a: int, b: int) -> int:
        return int(self.add[a, self.neg(b)])

    def power(self, a: int, e: int) -> int:
        result = 1
        for _ in range(e):
            result = int(self.mul[result, a])
        return result

    def primitive_element(self) -> int:
        """Smallest element generating the multiplicative group."""
        for a in range(2 if self.q > 2 else 1, self.q):
            x, order = a, 1
            while x != 1:
                x = int(self.mul[x, a])
                order += 1
            if order == self.q - 1:
                return a
        raise AssertionError("multiplicative group is not cyclic")  # pragma: no cover

    def squares(self) -> set[int]:
        return {int(self.mul[a, a]) for a in range(1, self.q)}

    def check_axioms(self) -> None:
        """Exhaustive field-axiom check; raises AssertionError on failure."""
        q = self.q
        A, M = self.add, self.mul
        idx = np.arange(q)
        assert (A[0] == idx).all() and (M[1] == idx).all()
        assert (A == A.T).all() and (M == M.T).all()
        # associativity and distributivity over all triples
        assert (A[A[:, :, None], idx[None, None, :]] == A[idx[:, None, None], A[None, :, :]]).all()
        assert (M[M[:, :, None], idx[None, None, :]] == M[idx[:, None, None], M[None, :, :]]).all()
        lhs = M[idx[:, None, None], A[None, :, :]]
        rhs = A[M[:, :, None], M[:, None, :]]
        assert (lhs == rhs).all()
        for a in range(q):
            assert (A[a] == 0).sum() == 1
            if a:
                assert (M[a] == 1).sum() == 1


def build_field(q: int, check: bool = True) -> FieldTable:
    pk = prime_power(q)
    if pk is None:
        raise InputError(f"{q} is not a prime power")
    p, k = pk
    modulus = irreducible_polynomial(p, k)
    digits = [[(i // p**j) % p for j in range(k)] for i in range(q)]

    def encode(coeffs):
        return sum(c * p**j for j, c in enumerate(coeffs))

    add = np.zeros((q, q), dtype=np.int64)
    mul = np.zeros((q, q), dtype=np.int64)
    for a in range(q):
        for b in range(q):
            add[a, b] = encode([(x + y) % p for x, y in zip(digits[a], digits[b])])
            mul[a, b] = encode(_poly_mulmod(digits[a], digits[b], modulus, p))
    field = FieldTable(p, k, add, mul, tuple(modulus))
    if check and q <= 64:
        field.check_axioms()
    return field
