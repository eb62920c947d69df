"""Dense complex linear algebra primitives shared by all other modules.

Everything operates on plain 2-D ``numpy`` arrays of ``complex128``.  All
functions are pure and deterministic for a fixed input, so results are
reproducible bit-for-bit across runs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "CompactSvd",
    "as_matrix",
    "real_inner",
    "compact_svd",
    "truncated_svd",
    "schatten_norm",
    "spectral_norm",
    "frobenius_norm",
]


def as_matrix(M) -> np.ndarray:
    """Coerce to a finite 2-D complex matrix, raising on NaN/Inf entries."""
    M = np.asarray(M, dtype=np.complex128)
    if M.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got ndim={M.ndim}")
    if not np.all(np.isfinite(M)):
        raise ValueError("matrix has non-finite entries")
    return M


def real_inner(U, V) -> float:
    """Real inner product Re(tr(U* V)) of two same-shape complex matrices."""
    U = np.asarray(U)
    V = np.asarray(V)
    if U.shape != V.shape:
        raise ValueError(f"shape mismatch: {U.shape} vs {V.shape}")
    return float(np.real(np.sum(np.conj(U) * V)))


@dataclass(frozen=True)
class CompactSvd:
    """Compact SVD triple: ``U @ diag(sigma) @ V.conj().T`` reconstructs the input.

    Columns of U and V are orthonormal, sigma is strictly positive and
    nonincreasing.  Column phases are normalized so the largest-magnitude
    entry of each U column is real positive (deterministic snapshots).
    """

    U: np.ndarray
    sigma: np.ndarray
    V: np.ndarray

    @property
    def rank(self) -> int:
        return int(self.sigma.size)

    def matrix(self) -> np.ndarray:
        """Reconstruct U Sigma V*."""
        if self.rank == 0:
            return np.zeros((self.U.shape[0], self.V.shape[0]), dtype=np.complex128)
        return (self.U * self.sigma) @ self.V.conj().T


def _normalize_column_phases(U: np.ndarray, V: np.ndarray):
    """Rotate each (u_k, v_k) pair so the largest-|entry| of u_k is real positive.

    Multiplying both columns by the same unit scalar leaves u_k v_k*
    unchanged, so the reconstruction is unaffected.
    """
    k = U.shape[1]
    if k == 0:
        return U, V
    lead = U[np.argmax(np.abs(U), axis=0), np.arange(k)]
    mag = np.abs(lead)
    phase = np.where(mag > 0, lead / np.where(mag == 0, 1.0, mag), 1.0)
    return U * phase.conj(), V * phase.conj()


def compact_svd(M, tol: float = 1e-12) -> CompactSvd:
    """Compact SVD keeping singular values above the relative cutoff ``tol``.

    Keeps every sigma_k > tol * sigma_1; the zero matrix yields an empty
    triple (rank 0).  Backed by LAPACK, which raises ``LinAlgError`` if the
    iteration fails to converge on pathological input.
    """
    M = as_matrix(M)
    if not tol > 0:
        raise ValueError("tol must be positive")
    U, s, Vh = np.linalg.svd(M, full_matrices=False)
    k = int(np.count_nonzero(s > tol * s[0])) if s.size and s[0] > 0 else 0
    U, V = _normalize_column_phases(U[:, :k], Vh[:k].conj().T)
    return CompactSvd(U=U, sigma=s[:k].copy(), V=V)


def truncated_svd(M, r: int) -> CompactSvd:
    """Top-``r`` SVD triple; U Sigma V* is a Frobenius-optimal rank-r approximation.

    Trailing exact zeros are dropped, so the returned rank can be below r
    for rank-deficient input.
    """
    M = as_matrix(M)
    if not 1 <= r <= min(M.shape):
        raise ValueError(f"r={r} out of range for shape {M.shape}")
    U, s, Vh = np.linalg.svd(M, full_matrices=False)
    k = min(r, int(np.count_nonzero(s > 0)))
    U, V = _normalize_column_phases(U[:, :k], Vh[:k].conj().T)
    return CompactSvd(U=U, sigma=s[:k].copy(), V=V)


def schatten_norm(M, p) -> float:
    """Schatten-p norm (sum sigma^p)^(1/p); p=2 is Frobenius, p=inf is spectral."""
    M = as_matrix(M)
    if p != math.inf and p < 1:
        raise ValueError(f"invalid Schatten order p={p}")
    s = np.linalg.svd(M, compute_uv=False)
    if s.size == 0:
        return 0.0
    if p == math.inf:
        return float(s[0])
    return float(np.sum(s**p) ** (1.0 / p))


def spectral_norm(M) -> float:
    return schatten_norm(M, math.inf)


def frobenius_norm(M) -> float:
    return float(np.linalg.norm(np.asarray(M)))
