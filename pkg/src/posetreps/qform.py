"""Integral quadratic forms attached to a poset, evaluated exactly.

Two forms are built from a poset on t elements, both in variables
x_0,..,x_t: the unitary form

    u(x) = x0^2 + 2*(sum_i xi^2 + sum_{i<j, i precedes j} xi*xj
                     - x0*(x1+..+xt))

and the classical form q(x), which is the same expression without the
factor 2.  Both are stored as symmetric Gram matrices over the rationals
(entries are integers or half-integers) and every evaluation at an integer
vector is an exact integer.

Definiteness is decided exactly: the characteristic polynomial of the Gram
matrix is computed in integer arithmetic and the signed coefficient sums of
principal minors e_k are inspected (all e_k > 0 iff positive definite, all
e_k >= 0 iff positive semidefinite).  The lattice notion used for integral
forms agrees with definiteness of the real Gram matrix: a rational
symmetric matrix that is negative somewhere is negative on an open cone,
which contains integer points, and its kernel is a rational subspace.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence

from .errors import DimensionMismatch
from .poset import Poset, disjoint_union


class Definiteness(Enum):
    POSITIVE_DEFINITE = "positive_definite"
    POSITIVE_SEMIDEFINITE = "positive_semidefinite"
    INDEFINITE = "indefinite"


@dataclass(frozen=True)
class QuadraticForm:
    """Symmetric Gram matrix over the rationals; q(z) = z^T gram z."""

    n_vars: int
    gram: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        g = self.gram
        if len(g) != self.n_vars or any(len(row) != self.n_vars for row in g):
            raise ValueError("gram matrix shape does not match n_vars")
        for i in range(self.n_vars):
            for j in range(i):
                if g[i][j] != g[j][i]:
                    raise ValueError("gram matrix not symmetric")

    def __call__(self, z: Sequence[int]) -> int:
        return evaluate(self, z)

    def to_json(self) -> dict:
        den = 1
        for row in self.gram:
            for x in row:
                if x.denominator == 2:
                    den = 2
                elif x.denominator != 1:
                    raise ValueError("gram entries must be integer or half-integer")
        nums = [[int(x * den) for x in row] for row in self.gram]
        return {"n_vars": self.n_vars, "gram_numerators": nums, "gram_denominator": den}

    @classmethod
    def from_json(cls, data: dict) -> "QuadraticForm":
        den = int(data["gram_denominator"])
        gram = tuple(
            tuple(Fraction(int(x), den) for x in row) for row in data["gram_numerators"]
        )
        return cls(int(data["n_vars"]), gram)


def u_form(P: Poset) -> QuadraticForm:
    """Unitary form of the poset: diagonal (1,2,..,2), entry (0,i) = -1,
    entry (i,j) = 1 exactly when p_i precedes p_j."""
    n = P.t + 1
    g = [[Fraction(0)] * n for _ in range(n)]
    g[0][0] = Fraction(1)
    for i in range(1, n):
        g[i][i] = Fraction(2)
        g[0][i] = g[i][0] = Fraction(-1)
    for i, j in P.relations:
        g[i][j] = g[j][i] = Fraction(1)
    return QuadraticForm(n, tuple(tuple(row) for row in g))


def q_form(P: Poset) -> QuadraticForm:
    """Classical form of the poset: diagonal all 1, entry (0,i) = -1/2,
    entry (i,j) = 1/2 exactly when p_i precedes p_j."""
    n = P.t + 1
    g = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = Fraction(1)
    for i in range(1, n):
        g[0][i] = g[i][0] = Fraction(-1, 2)
    for i, j in P.relations:
        g[i][j] = g[j][i] = Fraction(1, 2)
    return QuadraticForm(n, tuple(tuple(row) for row in g))


def evaluate(f: QuadraticForm, z: Sequence[int]) -> int:
    """Exact value z^T gram z; always an integer for integer z."""
    if len(z) != f.n_vars:
        raise DimensionMismatch(f"expected {f.n_vars} entries, got {len(z)}")
    total = Fraction(0)
    for i, gi in enumerate(f.gram):
        zi = z[i]
        if zi:
            total += zi * sum(gij * zj for gij, zj in zip(gi, z) if zj)
    if total.denominator != 1:
        raise ValueError("form evaluated to a non-integer on an integer vector")
    return int(total)


def _charpoly_int(A: list[list[int]]) -> list[int]:
    # Faddeev-LeVerrier; coefficients of det(lambda*I - A), exact in Z.
    n = len(A)
    N = [row[:] for row in A]
    coeffs = [1]
    for k in range(1, n + 1):
        tr = sum(N[i][i] for i in range(n))
        q, r = divmod(-tr, k)
        assert r == 0
        coeffs.append(q)
        if k < n:
            B = [row[:] for row in N]
            for i in range(n):
                B[i][i] += q
            N = [
                [sum(A[i][x] * B[x][j] for x in range(n)) for j in range(n)]
                for i in range(n)
            ]
    return coeffs


def definiteness(f: QuadraticForm) -> Definiteness:
    """Exact classification of the Gram matrix.

    Works on 2*gram, which is an integer matrix; scaling by 2 multiplies
    the k-th signed minor sum e_k by 2^k and preserves all signs.
    """
    n = f.n_vars
    if n == 0:
        return Definiteness.POSITIVE_DEFINITE
    A = [[int(2 * x) for x in row] for row in f.gram]
    coeffs = _charpoly_int(A)
    # det(lI - A) = l^n + c1 l^(n-1) + .. + cn with e_k = (-1)^k c_k
    e = [(-1) ** k * coeffs[k] for k in range(1, n + 1)]
    if all(x > 0 for x in e):
        return Definiteness.POSITIVE_DEFINITE
    if all(x >= 0 for x in e):
        return Definiteness.POSITIVE_SEMIDEFINITE
    return Definiteness.INDEFINITE


def weak_counterexample(
    f: QuadraticForm, bound: int
) -> Optional[tuple[int, ...]]:
    """First nonzero vector with entries in 0..bound where the form is <= 0,
    in lexicographic order; None if the box contains none.

    A bounded falsifier only: absence does not certify weak positivity.
    """
    if bound < 1:
        raise ValueError("bound must be positive")
    for z in itertools.product(range(bound + 1), repeat=f.n_vars):
        if any(z) and evaluate(f, z) <= 0:
            return z
    return None


def doubling_identity_check(P: Poset, z: Sequence[int]) -> bool:
    """Check u_P(z) against the classical form of the doubled poset at the
    duplicated vector (z0, z1..zt, z1..zt).  Always true; exists as a
    self-test of the two constructions."""
    if len(z) != P.t + 1:
        raise DimensionMismatch(f"expected {P.t + 1} entries, got {len(z)}")
    lhs = evaluate(u_form(P), z)
    doubled = disjoint_union(P, P)
    zz = tuple(z) + tuple(z[1:])
    rhs = evaluate(q_form(doubled), zz)
    return lhs == rhs


def param_balance(P: Poset, m: int, n: Sequence[int]) -> int:
    """Parameter-count balance at size m x (n_1,..,n_t): transform
    parameters minus matrix parameters, which equals the unitary form at
    (m, n)."""
    if len(n) != P.t:
        raise DimensionMismatch(f"expected {P.t} widths, got {len(n)}")
    total = (
        m * m
        + 2 * sum(x * x for x in n)
        + 2 * sum(n[i - 1] * n[j - 1] for i, j in P.relations)
        - 2 * m * sum(n)
    )
    assert total == evaluate(u_form(P), (m, *n))
    return total
