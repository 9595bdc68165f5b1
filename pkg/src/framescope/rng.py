"""Seeded random fixtures.

The generator is PCG64 (numpy's ``Generator`` bit stream).  Each instance
gets its own stream spawned from ``SeedSequence(seed)``, and Gaussians come
from Box-Muller on the stream's uniform doubles, so a fixture depends only on
``(seed, instance index)``.
"""
from __future__ import annotations

import os

import numpy as np

from .frames import FrameSystem, canonical_dual, canonical_tight

SEED_ENV = "FRAMESCOPE_SEED"


def seed_from_env(default: int = 0) -> int:
    raw = os.environ.get(SEED_ENV)
    return int(raw) if raw not in (None, "") else default


def stream(seed: int, index: int | None = None) -> np.random.Generator:
    """PCG64 stream for ``seed``; ``index`` selects an independent child stream."""
    # spawn_key=(index,) is the index-th child of SeedSequence(seed).spawn(), built directly
    key = () if index is None else (index,)
    ss = np.random.SeedSequence(seed, spawn_key=key)
    return np.random.Generator(np.random.PCG64(ss))


def gaussian(rng: np.random.Generator, size) -> np.ndarray:
    """Standard normal samples by Box-Muller."""
    count = int(np.prod(size))
    half = (count + 1) // 2
    u1 = 1.0 - rng.random(half)  # (0, 1]
    u2 = rng.random(half)
    r = np.sqrt(-2.0 * np.log(u1))
    z = np.concatenate([r * np.cos(2 * np.pi * u2), r * np.sin(2 * np.pi * u2)])[:count]
    return z.reshape(size)


def complex_gaussian(rng, size) -> np.ndarray:
    """Circular complex Gaussian with unit variance."""
    return (gaussian(rng, size) + 1j * gaussian(rng, size)) / np.sqrt(2.0)


def gaussian_system(rng, d, n, label="gaussian") -> FrameSystem:
    return FrameSystem(complex_gaussian(rng, (n, d)), label)


def parseval_system(rng, d, n) -> FrameSystem:
    if n < d:
        raise ValueError(f"a Parseval frame needs n >= d, got d={d}, n={n}")
    return FrameSystem(canonical_tight(gaussian_system(rng, d, n)).vectors, "parseval")


def riesz_basis(rng, d, spread: float = 0.5) -> FrameSystem:
    """Image of the standard basis under ``I + spread * K / ||K||`` (condition number <= 3)."""
    k = complex_gaussian(rng, (d, d))
    t = np.eye(d) + spread * k / np.linalg.norm(k, 2)
    return FrameSystem.from_columns(t, "riesz")


def dual_pair(rng, d, n) -> tuple[FrameSystem, FrameSystem]:
    phi = gaussian_system(rng, d, n, "frame")
    psi = canonical_dual(phi)
    return phi, FrameSystem(psi.vectors, "canonical dual")


def bounded_symbol(rng, n, radius: float = 1.0) -> np.ndarray:
    """Uniform samples from the disk of the given radius."""
    r = radius * np.sqrt(rng.random(n))
    theta = 2 * np.pi * rng.random(n)
    return r * np.exp(1j * theta)


def real_symbol(rng, n, low=-1.0, high=1.0) -> np.ndarray:
    return (low + (high - low) * rng.random(n)).astype(complex)


def alternating_fixture(d: int):
    """Orthonormal basis, the alternating 1/2, 2 system and the alternating 2, 1/2 symbol."""
    if d < 2 or d % 2:
        raise ValueError(f"the alternating fixture needs even d >= 2, got {d}")
    alt = np.array([0.5 if k % 2 == 0 else 2.0 for k in range(d)])
    phi = FrameSystem(np.eye(d, dtype=complex), "orthonormal basis")
    psi = FrameSystem(np.diag(alt).astype(complex), "alternating 1/2, 2")
    m = (1.0 / alt).astype(complex)
    return phi, psi, m
