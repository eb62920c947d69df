"""Weighted complex projective 2-designs: construction, certification, file IO.

A weighted design is a finite set of unit vectors w_i with weights p_i whose
second moment matrix sum_i p_i (w_i w_i*)^{x2} equals the normalized
projector onto the symmetric subspace of C^d x C^d.  The union of the d+1
mutually unbiased bases of a prime dimension is the classical construction.

Only strength t = 2 can be certified here (the projector grows exponentially
in t); higher-strength designs can be loaded from file and are accepted
uncertified with a warning.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from pathlib import Path

import numpy as np

__all__ = [
    "WeightedDesign",
    "DesignCertificate",
    "UncertifiedDesignError",
    "build_mub_design",
    "certify_design",
    "symmetric_projector2",
    "isotropy_defect",
    "save_design",
    "load_design",
]

# Certification builds a d^2 x d^2 operator; refuse beyond this size.
MAX_CERTIFIABLE_DIM_SQ = 4096


class UncertifiedDesignError(ValueError):
    """Raised when sampling is attempted from a design that failed (or skipped)
    moment certification."""


@dataclass
class WeightedDesign:
    """Unit vectors (rows of ``vectors``) with sampling weights and a strength tag.

    ``certified`` means the design is allowed for sampling: either the t=2
    moment condition was verified, or a higher-strength design was accepted
    on trust from file (with a warning).
    """

    dim: int
    vectors: np.ndarray
    weights: np.ndarray
    strength: int = 2
    certified: bool = False

    def __post_init__(self):
        self.vectors = np.asarray(self.vectors, dtype=np.complex128)
        self.weights = np.asarray(self.weights, dtype=np.float64)
        if self.vectors.ndim != 2 or self.vectors.shape[1] != self.dim:
            raise ValueError("vectors must be an (N, dim) array")
        if self.weights.shape != (self.vectors.shape[0],):
            raise ValueError("weights length must match number of vectors")

    @property
    def natoms(self) -> int:
        return self.vectors.shape[0]


@dataclass(frozen=True)
class DesignCertificate:
    dim: int
    strength: int
    max_deviation: float
    unit_norm_error: float
    weight_sum_error: float
    passed: bool
    tolerance: float

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "strength": self.strength,
            "max_deviation": self.max_deviation,
            "unit_norm_error": self.unit_norm_error,
            "weight_sum_error": self.weight_sum_error,
            "passed": self.passed,
            "tolerance": self.tolerance,
        }


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in range(2, int(n**0.5) + 1):
        if n % q == 0:
            return False
    return True


def build_mub_design(d: int) -> WeightedDesign:
    """Union of the d+1 mutually unbiased bases of prime dimension d.

    For odd primes, basis k has vectors with components
    omega^(k*l^2 + j*l)/sqrt(d), omega = exp(2*pi*i/d), alongside the
    computational basis.  That quadratic-exponent form degenerates at d = 2
    (it repeats the Hadamard basis), so d = 2 uses the three Pauli
    eigenbases instead.  The d(d+1) vectors with uniform weights form a
    2-design; the output is certified before being returned.
    """
    if not _is_prime(d):
        raise ValueError(f"d={d} is not prime")
    atoms = [np.eye(d, dtype=np.complex128)[i] for i in range(d)]
    if d == 2:
        s = 1.0 / np.sqrt(2.0)
        atoms += [
            np.array([s, s]),
            np.array([s, -s]),
            np.array([s, 1j * s]),
            np.array([s, -1j * s]),
        ]
    else:
        omega = np.exp(2j * np.pi / d)
        ell = np.arange(d)
        for k in range(d):
            for j in range(d):
                atoms.append(omega ** ((k * ell**2 + j * ell) % d) / np.sqrt(d))
    n_atoms = d * (d + 1)
    design = WeightedDesign(
        dim=d,
        vectors=np.array(atoms),
        weights=np.full(n_atoms, 1.0 / n_atoms),
        strength=2,
    )
    cert = certify_design(design)
    if not cert.passed:
        raise AssertionError(f"MUB construction failed certification: {cert}")
    design.certified = True
    return design


def symmetric_projector2(d: int) -> np.ndarray:
    """Projector (I + SWAP)/2 onto the symmetric subspace of C^d x C^d."""
    swap = np.zeros((d * d, d * d))
    for i in range(d):
        for j in range(d):
            swap[i * d + j, j * d + i] = 1.0
    return (np.eye(d * d) + swap) / 2.0


def certify_design(design: WeightedDesign, tol: float = 1e-10) -> DesignCertificate:
    """Check the t=2 moment condition entrywise against binom(d+1,2)^-1 P_sym.

    Also validates unit norms and the weight normalization; ``passed``
    requires all three.  Only strength 2 is supported, and the dimension is
    capped so the d^2 x d^2 comparison stays in memory.
    """
    if design.strength != 2:
        raise ValueError(f"certification supports strength 2 only, got {design.strength}")
    d = design.dim
    if d * d > MAX_CERTIFIABLE_DIM_SQ:
        raise ValueError(f"dimension {d} too large to certify (d^2 > {MAX_CERTIFIABLE_DIM_SQ})")
    norm_err = float(np.max(np.abs(np.linalg.norm(design.vectors, axis=1) - 1.0)))
    wsum_err = float(abs(design.weights.sum() - 1.0))
    moment = np.zeros((d * d, d * d), dtype=np.complex128)
    for w, p in zip(design.vectors, design.weights):
        dyad = np.outer(w, w.conj())
        moment += p * np.kron(dyad, dyad)
    target = symmetric_projector2(d) * (2.0 / (d * (d + 1)))
    deviation = float(np.max(np.abs(moment - target)))
    passed = deviation <= tol and norm_err <= 1e-12 and wsum_err <= 1e-12 and np.all(design.weights >= 0)
    return DesignCertificate(
        dim=d,
        strength=2,
        max_deviation=deviation,
        unit_norm_error=norm_err,
        weight_sum_error=wsum_err,
        passed=bool(passed),
        tolerance=tol,
    )


def isotropy_defect(design: WeightedDesign) -> float:
    """Spectral norm of I - d * sum_i p_i w_i w_i* (exact atom expectation).

    Zero for any certified 2-design since strength 2 implies strength 1.
    """
    d = design.dim
    second = np.einsum("i,ij,ik->jk", design.weights, design.vectors, design.vectors.conj())
    return float(np.linalg.norm(np.eye(d) - d * second, 2))


def save_design(design: WeightedDesign, path) -> None:
    payload = {
        "dim": design.dim,
        "strength": design.strength,
        "weights": design.weights.tolist(),
        "vectors": [
            [{"re": float(z.real), "im": float(z.imag)} for z in row]
            for row in design.vectors
        ],
    }
    Path(path).write_text(json.dumps(payload, indent=1))


def load_design(path) -> WeightedDesign:
    """Load a design from JSON; certification is recomputed, never trusted.

    Strength-2 designs are re-certified on the spot.  Higher strengths
    cannot be certified here and are accepted with a warning.
    """
    payload = json.loads(Path(path).read_text())
    vectors = np.array(
        [[complex(entry["re"], entry["im"]) for entry in row] for row in payload["vectors"]]
    )
    design = WeightedDesign(
        dim=int(payload["dim"]),
        vectors=vectors,
        weights=np.array(payload["weights"], dtype=float),
        strength=int(payload["strength"]),
    )
    if design.strength == 2:
        design.certified = certify_design(design).passed
    else:
        warnings.warn(
            f"strength-{design.strength} design accepted without certification "
            "(only t=2 moment conditions are checkable)",
            stacklevel=2,
        )
        design.certified = True
    return design
