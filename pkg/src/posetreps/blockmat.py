"""Block matrices [A_1|..|A_t] over a poset and their admissible transforms.

A block matrix of size m x (n_1,..,n_t) assigns to each poset element a
vertical strip with a shared row count; strips of width zero and matrices
with zero rows are legitimate values and nothing here may special-case
them away.  The admissible transforms are A -> R A S with R unitary and S
nonsingular, where the (i,j) block of S must vanish unless i = j or p_i
precedes p_j.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import cxla
from .errors import (
    InvalidSummand,
    NotAdmissible,
    NotUnitary,
    PosetMismatch,
    Singular,
)
from .poset import Poset


@dataclass
class BlockMatrix:
    """Complex block matrix over a poset; treat instances as immutable."""

    poset: Poset
    rows: int
    strips: tuple[np.ndarray, ...] = field(repr=False)

    def __post_init__(self) -> None:
        if len(self.strips) != self.poset.t:
            raise ValueError(
                f"expected {self.poset.t} strips, got {len(self.strips)}"
            )
        coerced = []
        for i, strip in enumerate(self.strips):
            M = cxla.as_cmatrix(strip)
            if M.shape[0] != self.rows:
                raise ValueError(
                    f"strip {i + 1} has {M.shape[0]} rows, expected {self.rows}"
                )
            coerced.append(M)
        self.strips = tuple(coerced)

    @property
    def widths(self) -> tuple[int, ...]:
        return tuple(int(s.shape[1]) for s in self.strips)

    def strip(self, k: int) -> np.ndarray:
        """1-based strip accessor."""
        return self.strips[k - 1]

    def assembled(self) -> np.ndarray:
        """The full m x sum(n_i) matrix."""
        if not self.strips:
            return np.zeros((self.rows, 0), dtype=np.complex128)
        return np.concatenate(self.strips, axis=1)

    def to_json(self) -> dict:
        return {
            "poset": self.poset.to_json(),
            "rows": self.rows,
            "widths": list(self.widths),
            "strips": [cxla.matrix_to_json(s) for s in self.strips],
        }

    @classmethod
    def from_json(cls, data: dict) -> "BlockMatrix":
        P = Poset.from_json(data["poset"])
        strips = tuple(cxla.matrix_from_json(s) for s in data["strips"])
        return cls(P, int(data["rows"]), strips)


def from_assembled(P: Poset, rows: int, widths: Sequence[int], full) -> BlockMatrix:
    """Split a full matrix back into strips of the given widths."""
    full = cxla.as_cmatrix(full, rows, sum(widths))
    if full.shape != (rows, sum(widths)):
        raise ValueError(f"full matrix has shape {full.shape}, expected {(rows, sum(widths))}")
    strips = []
    at = 0
    for w in widths:
        strips.append(full[:, at : at + w])
        at += w
    return BlockMatrix(P, rows, tuple(strips))


@dataclass(frozen=True)
class Summand:
    """Label of an indecomposable block matrix: E(k), F, G(k, sigma),
    H(k) or L(k)."""

    kind: str
    k: int = 0
    sigma: float = 0.0

    @classmethod
    def E(cls, k: int) -> "Summand":
        return cls("E", k)

    @classmethod
    def F(cls) -> "Summand":
        return cls("F")

    @classmethod
    def G(cls, k: int, sigma: float) -> "Summand":
        return cls("G", k, float(sigma))

    @classmethod
    def H(cls, k: int) -> "Summand":
        return cls("H", k)

    @classmethod
    def L(cls, k: int) -> "Summand":
        return cls("L", k)

    def validate_for(self, P: Poset) -> None:
        if self.kind not in ("E", "F", "G", "H", "L"):
            raise InvalidSummand(f"unknown summand kind {self.kind!r}")
        if self.kind == "F":
            return
        if not 1 <= self.k <= P.t:
            raise InvalidSummand(f"{self} out of range for t={P.t}")
        if self.kind in ("G", "H"):
            if self.k + 1 > P.t:
                raise InvalidSummand(f"{self} needs a successor strip")
            if P.precedes(self.k, self.k + 1):
                raise InvalidSummand(
                    f"{self} requires p_{self.k} and p_{self.k + 1} incomparable"
                )
        if self.kind == "G" and not self.sigma > 0:
            raise InvalidSummand("G summands need sigma > 0")

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.kind != "F":
            out["k"] = self.k
        if self.kind == "G":
            out["sigma"] = self.sigma
        return out

    @classmethod
    def from_json(cls, data: dict) -> "Summand":
        kind = data["kind"]
        if kind == "F":
            return cls.F()
        if kind == "G":
            return cls.G(int(data["k"]), float(data["sigma"]))
        return cls(kind, int(data["k"]))

    def __str__(self) -> str:
        if self.kind == "F":
            return "F"
        if self.kind == "G":
            return f"G({self.k},{self.sigma:g})"
        return f"{self.kind}({self.k})"


def summand_matrix(s: Summand, P: Poset) -> BlockMatrix:
    """The indecomposable block matrix named by the summand."""
    s.validate_for(P)
    t = P.t
    if s.kind == "F":
        rows = 1
        widths = [0] * t
        data: dict[int, np.ndarray] = {}
    elif s.kind == "E":
        rows = 1
        widths = [0] * t
        widths[s.k - 1] = 1
        data = {s.k - 1: np.array([[1.0]], dtype=np.complex128)}
    elif s.kind == "H":
        rows = 1
        widths = [0] * t
        widths[s.k - 1] = widths[s.k] = 1
        one = np.array([[1.0]], dtype=np.complex128)
        data = {s.k - 1: one, s.k: one}
    elif s.kind == "G":
        rows = 2
        widths = [0] * t
        widths[s.k - 1] = widths[s.k] = 1
        data = {
            s.k - 1: np.array([[1.0], [0.0]], dtype=np.complex128),
            s.k: np.array([[s.sigma], [1.0]], dtype=np.complex128),
        }
    else:  # L
        rows = 0
        widths = [0] * t
        widths[s.k - 1] = 1
        data = {}
    strips = tuple(
        data.get(i, np.zeros((rows, widths[i]), dtype=np.complex128))
        for i in range(t)
    )
    return BlockMatrix(P, rows, strips)


def block_direct_sum(A: BlockMatrix, B: BlockMatrix) -> BlockMatrix:
    """Strip-wise diagonal concatenation."""
    if A.poset != B.poset:
        raise PosetMismatch("block direct sum needs a common poset")
    rows = A.rows + B.rows
    strips = []
    for sa, sb in zip(A.strips, B.strips):
        out = np.zeros((rows, sa.shape[1] + sb.shape[1]), dtype=np.complex128)
        out[: A.rows, : sa.shape[1]] = sa
        out[A.rows :, sa.shape[1] :] = sb
        strips.append(out)
    return BlockMatrix(A.poset, rows, tuple(strips))


def block_direct_sum_all(P: Poset, parts: Sequence[BlockMatrix]) -> BlockMatrix:
    """Fold of the direct sum, starting from the empty matrix."""
    acc = BlockMatrix(P, 0, tuple(np.zeros((0, 0)) for _ in range(P.t)))
    for part in parts:
        acc = block_direct_sum(acc, part)
    return acc


def _check_admissible_pattern(P: Poset, widths: Sequence[int], S: np.ndarray) -> None:
    offsets = np.concatenate(([0], np.cumsum(widths))).astype(int)
    for i in P.elements:
        for j in P.elements:
            if i != j and not P.precedes(i, j):
                block = S[offsets[i - 1] : offsets[i], offsets[j - 1] : offsets[j]]
                if block.size and np.any(block != 0):
                    raise NotAdmissible(
                        f"S block ({i},{j}) must vanish: p_{i} does not precede p_{j}"
                    )


def admissible_transform(
    A: BlockMatrix, R: np.ndarray, S: np.ndarray, tol: float = cxla.DEFAULT_RANK_TOL
) -> BlockMatrix:
    """Apply A -> R A S and re-split into strips.

    R must be unitary (to tol), S nonsingular with the order's zero
    pattern; the pattern is validated structurally, entries in forbidden
    blocks must be exactly zero.
    """
    R = cxla.as_cmatrix(R, A.rows, A.rows)
    total = sum(A.widths)
    S = cxla.as_cmatrix(S, total, total)
    if R.shape != (A.rows, A.rows):
        raise NotUnitary(f"R has shape {R.shape}, expected {(A.rows, A.rows)}")
    if not cxla.is_unitary(R, tol):
        raise NotUnitary("R is not unitary within tolerance")
    if S.shape != (total, total):
        raise ValueError(f"S has shape {S.shape}, expected {(total, total)}")
    if total:
        s = cxla.singular_values(S)
        if s[0] == 0.0 or s[-1] <= 1e-12 * s[0]:
            raise Singular("S is singular within tolerance")
    _check_admissible_pattern(A.poset, A.widths, S)
    return from_assembled(A.poset, A.rows, A.widths, R @ A.assembled() @ S)


def random_admissible(
    P: Poset, m: int, widths: Sequence[int], seed: cxla.SeedLike
) -> tuple[np.ndarray, np.ndarray]:
    """Random transform pair (R, S) for fuzzing: Haar unitary R and a
    nonsingular S supported exactly on the allowed blocks, with condition
    number kept below 1e3.  Deterministic per seed."""
    widths = tuple(int(w) for w in widths)
    if len(widths) != P.t:
        raise ValueError(f"expected {P.t} widths, got {len(widths)}")
    rng = np.random.default_rng(seed) if not isinstance(seed, np.random.Generator) else seed
    R = cxla.random_unitary(m, rng)
    total = sum(widths)
    S = np.zeros((total, total), dtype=np.complex128)
    offsets = np.concatenate(([0], np.cumsum(widths))).astype(int)
    for i in P.elements:
        w = widths[i - 1]
        if w == 0:
            continue
        # well-conditioned nonsingular diagonal block
        d = rng.uniform(0.5, 2.0, size=w)
        block = cxla.random_unitary(w, rng) @ np.diag(d) @ cxla.random_unitary(w, rng)
        S[offsets[i - 1] : offsets[i], offsets[i - 1] : offsets[i]] = block
    mask = np.zeros((total, total), dtype=bool)
    for i, j in P.relations:
        mask[offsets[i - 1] : offsets[i], offsets[j - 1] : offsets[j]] = True
    S[mask] = cxla.random_cmatrix(1, int(mask.sum()), rng).reshape(-1)
    # damp the couplings until the conditioning target is met
    while total and np.linalg.cond(S) > 1e3:
        S[mask] *= 0.5
    return R, S


def random_block_matrix(
    P: Poset, m: int, widths: Sequence[int], seed: cxla.SeedLike
) -> BlockMatrix:
    """Block matrix with standard complex Gaussian strips; test plumbing."""
    widths = tuple(int(w) for w in widths)
    if len(widths) != P.t:
        raise ValueError(f"expected {P.t} widths, got {len(widths)}")
    rng = np.random.default_rng(seed) if not isinstance(seed, np.random.Generator) else seed
    strips = tuple(cxla.random_cmatrix(m, w, rng) for w in widths)
    return BlockMatrix(P, m, strips)
