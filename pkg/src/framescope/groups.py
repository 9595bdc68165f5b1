"""Translation systems on the cyclic group Z_N.

The cross Gram matrix of two translation systems ``{T_g chi}`` and
``{T_g eta}`` is circulant, so the DFT diagonalizes it and its eigenvalues
are the bracket values ``chi_hat(xi) * conj(eta_hat(xi))``.  The Haar measure
on the dual group is normalized to total mass one, so the correlation
``c(g) = <chi, T_g eta>`` is recovered by the inverse DFT (which carries the
``1/N``), and no further constant relates bracket values to Gram eigenvalues.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import ShapeError
from .frames import FrameBounds, FrameSystem, cross_gram
from .multipliers import _as_symbol, multiplier_matrix, spectral_radius_eigen

#: bracket value = BRACKET_GRAM_FACTOR * eigenvalue of the circulant cross Gram
BRACKET_GRAM_FACTOR = 1.0


@dataclass(frozen=True, eq=False)
class CyclicWindow:
    """A vector in ``l2(Z_N)``."""

    samples: np.ndarray

    def __post_init__(self):
        s = linalg.as_vector(self.samples, "window").copy()
        s.setflags(write=False)
        object.__setattr__(self, "samples", s)

    @property
    def N(self) -> int:
        return len(self.samples)

    def __eq__(self, other):
        if not isinstance(other, CyclicWindow):
            return NotImplemented
        return bool(np.array_equal(self.samples, other.samples))

    __hash__ = None

    @classmethod
    def delta(cls, N, at=0):
        s = np.zeros(N, dtype=complex)
        s[at % N] = 1.0
        return cls(s)


@dataclass(frozen=True)
class BracketFunction:
    values: np.ndarray

    @property
    def N(self) -> int:
        return len(self.values)

    def sup(self) -> float:
        return float(np.max(np.abs(self.values)))


def _window(x) -> CyclicWindow:
    return x if isinstance(x, CyclicWindow) else CyclicWindow(x)


def _same_length(chi, eta):
    if chi.N != eta.N:
        raise ShapeError(f"windows have different lengths: {chi.N} vs {eta.N}")


def translation_system(chi, label="") -> FrameSystem:
    """The ``N`` cyclic shifts ``(T_g chi)(x) = chi(x - g mod N)``."""
    chi = _window(chi)
    n = chi.N
    idx = (np.arange(n)[None, :] - np.arange(n)[:, None]) % n  # row g, column x
    return FrameSystem(chi.samples[idx], label or f"translates (N={n})")


def shift_matrix(N: int) -> np.ndarray:
    """Unitary ``T_1`` acting on ``C^N``."""
    return np.roll(np.eye(N, dtype=complex), 1, axis=0)


def dft(chi) -> CyclicWindow:
    """``chi_hat(xi) = sum_x chi(x) exp(-2 pi i x xi / N)``."""
    return CyclicWindow(np.fft.fft(_window(chi).samples))


def idft(chi_hat) -> CyclicWindow:
    """Inverse of :func:`dft` (carries the ``1/N``)."""
    return CyclicWindow(np.fft.ifft(_window(chi_hat).samples))


def dft_matrix(N: int) -> np.ndarray:
    k = np.arange(N)
    return np.exp(-2j * np.pi * np.outer(k, k) / N)


def bracket(chi, eta) -> BracketFunction:
    chi, eta = _window(chi), _window(eta)
    _same_length(chi, eta)
    values = BRACKET_GRAM_FACTOR * dft(chi).samples * np.conj(dft(eta).samples)
    return BracketFunction(values)


def correlation(chi, eta) -> np.ndarray:
    """``c(g) = <chi, T_g eta>`` by direct inner products."""
    chi, eta = _window(chi), _window(eta)
    _same_length(chi, eta)
    shifts = translation_system(eta).vectors
    return shifts.conj() @ chi.samples


def correlation_from_bracket(b: BracketFunction) -> np.ndarray:
    """Integrate the bracket against characters: ``(1/N) sum_xi [chi,eta](xi) e^{2 pi i g xi / N}``."""
    return np.fft.ifft(np.asarray(b.values) / BRACKET_GRAM_FACTOR)


def gram_norm_via_bracket(chi, eta) -> float:
    return bracket(chi, eta).sup()


def translation_bounds(chi) -> FrameBounds:
    """Optimal frame bounds of the translates: extremes of ``|chi_hat|^2``."""
    power = np.abs(dft(chi).samples) ** 2
    return FrameBounds(float(power.min()), float(power.max()))


def multiplier_radius_bound_group(m, chi, eta) -> float:
    m = _as_symbol(m)
    chi, eta = _window(chi), _window(eta)
    if len(m) != chi.N:
        raise ShapeError(f"symbol length {len(m)} differs from N = {chi.N}")
    return m.sup_modulus * gram_norm_via_bracket(chi, eta)


@dataclass(frozen=True)
class GroupAnalysis:
    bracket: BracketFunction
    gram_norm_bracket: float
    gram_norm_dense: float
    radius_bound: float
    radius_eigen: float
    bounds_chi: FrameBounds
    bounds_eta: FrameBounds

    @property
    def norm_gap(self) -> float:
        return abs(self.gram_norm_bracket - self.gram_norm_dense) / max(self.gram_norm_dense, 1e-300)


def analyze_group(m, chi, eta) -> GroupAnalysis:
    """Compare the bracket route with dense computations on the translation systems."""
    m = _as_symbol(m)
    chi, eta = _window(chi), _window(eta)
    _same_length(chi, eta)
    phi, psi = translation_system(chi), translation_system(eta)
    b = bracket(chi, eta)
    return GroupAnalysis(
        bracket=b,
        gram_norm_bracket=b.sup(),
        gram_norm_dense=linalg.operator_norm(cross_gram(phi, psi)),
        radius_bound=multiplier_radius_bound_group(m, chi, eta),
        radius_eigen=spectral_radius_eigen(multiplier_matrix(m, phi, psi)),
        bounds_chi=translation_bounds(chi),
        bounds_eta=translation_bounds(eta),
    )
