"""Sketch ensembles: paired random vectors (a_i, b_i) defining rank-one probes.

Three models: real Gaussian ([a; b] ~ N(0, I)), complex Gaussian (entries
CN(0,1), i.e. real and imaginary parts independent N(0, 1/2)), and the
partially derandomized model that draws sqrt(d) times an atom of a certified
weighted 2-design.

All sampling is keyed by (seed, tag) through a hash-derived generator, so
ensembles are reproducible and independent streams never share state even
when trials run concurrently.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

import numpy as np

from .designs import UncertifiedDesignError, WeightedDesign

__all__ = [
    "SketchModel",
    "SketchEnsemble",
    "MODEL_KINDS",
    "derive_seed",
    "rng_for",
    "sample_real_gaussian",
    "sample_complex_gaussian",
    "sample_design",
    "sample_ensemble",
]

MODEL_KINDS = ("real-gaussian", "complex-gaussian", "design")


@dataclass(frozen=True)
class SketchModel:
    """Which distribution the sketch vectors come from.

    ``design`` requires a weighted design for each side; certification is
    enforced at sampling time.
    """

    kind: str
    design_a: WeightedDesign | None = None
    design_b: WeightedDesign | None = None

    def __post_init__(self):
        if self.kind not in MODEL_KINDS:
            raise ValueError(f"unknown model kind {self.kind!r}")
        if self.kind == "design" and (self.design_a is None or self.design_b is None):
            raise ValueError("design model needs a design for both sides")


@dataclass(frozen=True)
class SketchEnsemble:
    """n paired sketch vectors: rows of ``a`` are a_i in C^d1, rows of ``b`` are b_i."""

    d1: int
    d2: int
    n: int
    a: np.ndarray
    b: np.ndarray
    model: SketchModel
    seed: int

    def __post_init__(self):
        if self.a.shape != (self.n, self.d1) or self.b.shape != (self.n, self.d2):
            raise ValueError("ensemble arrays inconsistent with declared sizes")


def derive_seed(*parts) -> int:
    """Collision-resistant 63-bit seed from a tuple of hashable parts.

    Uses SHA-256 of the canonical string form, so derived streams are stable
    across processes and platforms (unlike the builtin ``hash``).
    """
    text = "|".join(repr(p) for p in parts)
    digest = hashlib.sha256(text.encode()).digest()
    return int.from_bytes(digest[:8], "big") >> 1


def rng_for(seed: int, *tags) -> np.random.Generator:
    """Independent generator keyed by (seed, tags); same key, same stream."""
    return np.random.default_rng(derive_seed(seed, *tags))


def _check_sizes(d1: int, d2: int, n: int) -> None:
    if min(d1, d2, n) < 1:
        raise ValueError(f"sizes must be positive, got d1={d1}, d2={d2}, n={n}")


def sample_real_gaussian(d1: int, d2: int, n: int, seed: int) -> SketchEnsemble:
    """Each coordinate of a_i and b_i is an independent standard real normal.

    Stored complex with zero imaginary parts so every model shares one code
    path downstream.
    """
    _check_sizes(d1, d2, n)
    a = rng_for(seed, "a").standard_normal((n, d1)).astype(np.complex128)
    b = rng_for(seed, "b").standard_normal((n, d2)).astype(np.complex128)
    return SketchEnsemble(d1, d2, n, a, b, SketchModel("real-gaussian"), seed)


def _cn(rng: np.random.Generator, shape) -> np.ndarray:
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) * np.sqrt(0.5)


def sample_complex_gaussian(d1: int, d2: int, n: int, seed: int) -> SketchEnsemble:
    """Entries CN(0,1): real and imaginary parts independent N(0, 1/2)."""
    _check_sizes(d1, d2, n)
    a = _cn(rng_for(seed, "a"), (n, d1))
    b = _cn(rng_for(seed, "b"), (n, d2))
    return SketchEnsemble(d1, d2, n, a, b, SketchModel("complex-gaussian"), seed)


def sample_design(
    design_a: WeightedDesign, design_b: WeightedDesign, n: int, seed: int
) -> SketchEnsemble:
    """a_i = sqrt(d1) * (atom of design_a drawn with its weight), b_i likewise."""
    for side, design in (("a", design_a), ("b", design_b)):
        if not design.certified:
            raise UncertifiedDesignError(f"design for side {side!r} is not certified")
    d1, d2 = design_a.dim, design_b.dim
    _check_sizes(d1, d2, n)
    idx_a = rng_for(seed, "a").choice(design_a.natoms, size=n, p=design_a.weights)
    idx_b = rng_for(seed, "b").choice(design_b.natoms, size=n, p=design_b.weights)
    a = np.sqrt(d1) * design_a.vectors[idx_a]
    b = np.sqrt(d2) * design_b.vectors[idx_b]
    model = SketchModel("design", design_a=design_a, design_b=design_b)
    return SketchEnsemble(d1, d2, n, a, b, model, seed)


def sample_ensemble(model: SketchModel, d1: int, d2: int, n: int, seed: int) -> SketchEnsemble:
    """Dispatch on the model kind; design dims must match the requested shape."""
    if model.kind == "real-gaussian":
        return sample_real_gaussian(d1, d2, n, seed)
    if model.kind == "complex-gaussian":
        return sample_complex_gaussian(d1, d2, n, seed)
    if (model.design_a.dim, model.design_b.dim) != (d1, d2):
        raise ValueError("design dimensions do not match requested (d1, d2)")
    return sample_design(model.design_a, model.design_b, n, seed)
