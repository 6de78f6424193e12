"""Dense complex linear algebra helpers.

Matrices are plain numpy arrays of dtype complex128; zero-dimensional
shapes (0 x n, n x 0) are first-class values and every routine here must
accept them.  The SVD convention is M = U @ diag(sigma) @ V with *both* U
and V unitary (V, not its conjugate transpose, sits on the right), so V is
what numpy calls ``vh``.  Singular values are the positive square roots of
the nonzero eigenvalues of M M*.
"""

from __future__ import annotations

from typing import NamedTuple, Union

import numpy as np

from .errors import ConvergenceFailure, NonSquare

SeedLike = Union[int, np.random.Generator]

DEFAULT_RANK_TOL = 1e-9


class SvdResult(NamedTuple):
    u: np.ndarray
    sigma: np.ndarray
    v: np.ndarray


def as_cmatrix(entries, rows: int | None = None, cols: int | None = None) -> np.ndarray:
    """Coerce to a complex128 2-d array, optionally fixing a degenerate shape."""
    M = np.asarray(entries, dtype=np.complex128)
    if M.ndim != 2:
        if M.size == 0 and rows is not None and cols is not None:
            M = M.reshape(rows, cols)
        else:
            raise ValueError(f"expected a 2-d array, got shape {M.shape}")
    return M


def svd(M: np.ndarray) -> SvdResult:
    """Full SVD, M = u @ Sigma @ v with u, v unitary and sigma non-increasing."""
    M = as_cmatrix(M)
    try:
        u, s, vh = np.linalg.svd(M, full_matrices=True)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(str(exc)) from exc
    return SvdResult(u, s, vh)


def singular_values(M: np.ndarray) -> np.ndarray:
    M = as_cmatrix(M)
    if min(M.shape) == 0:
        return np.zeros(0)
    try:
        return np.linalg.svd(M, compute_uv=False)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(str(exc)) from exc


def rank_tol(M: np.ndarray, tol: float = DEFAULT_RANK_TOL) -> int:
    """Count of singular values above tol * sigma_max (absolute floor 1e-12
    when sigma_max is zero)."""
    s = singular_values(M)
    if s.size == 0:
        return 0
    smax = float(s[0])
    thr = tol * smax if smax > 0.0 else 1e-12
    return int(np.count_nonzero(s > thr))


def is_unitary(M: np.ndarray, tol: float = DEFAULT_RANK_TOL) -> bool:
    """Frobenius test ||M M* - I|| <= tol; raises NonSquare on rectangles."""
    M = as_cmatrix(M)
    n, m = M.shape
    if n != m:
        raise NonSquare(f"unitarity requires a square matrix, got {n}x{m}")
    if n == 0:
        return True
    return bool(np.linalg.norm(M @ M.conj().T - np.eye(n)) <= tol)


def random_unitary(n: int, seed: SeedLike) -> np.ndarray:
    """Haar-distributed n x n unitary, deterministic per seed.

    Complex Ginibre matrix followed by QR with the R-diagonal phase fix,
    which makes the distribution Haar and the output unique."""
    if n < 0:
        raise ValueError("n must be non-negative")
    rng = np.random.default_rng(seed) if not isinstance(seed, np.random.Generator) else seed
    if n == 0:
        return np.zeros((0, 0), dtype=np.complex128)
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    q = q * (d / np.abs(d))
    return q


def random_cmatrix(rows: int, cols: int, rng: np.random.Generator) -> np.ndarray:
    """Standard complex Gaussian entries."""
    if rows == 0 or cols == 0:
        return np.zeros((rows, cols), dtype=np.complex128)
    return (
        rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))
    ) / np.sqrt(2)


def matrix_to_json(M: np.ndarray) -> dict:
    M = as_cmatrix(M)
    return {
        "rows": int(M.shape[0]),
        "cols": int(M.shape[1]),
        "entries": [[float(z.real), float(z.imag)] for z in M.reshape(-1)],
    }


def matrix_from_json(data: dict) -> np.ndarray:
    rows, cols = int(data["rows"]), int(data["cols"])
    entries = data["entries"]
    if len(entries) != rows * cols:
        raise ValueError(
            f"expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(entries)}"
        )
    flat = np.array(
        [complex(re, im) for re, im in entries], dtype=np.complex128
    )
    return flat.reshape(rows, cols)
