"""Bessel multipliers, their spectral radii, and the radius bounds.

The multiplier of symbol ``m`` and systems ``phi``, ``psi`` is the ``d x d``
matrix ``D_phi diag(m) C_psi``; its reduced form is the ``n x n`` matrix
``diag(m) G`` with ``G`` the cross Gram matrix.  Both have the same nonzero
spectrum, hence the same spectral radius.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np
from scipy.optimize import linear_sum_assignment

from . import linalg
from .errors import DomainError, ScaleError, ShapeError
from .frames import FrameSystem, cross_gram

DEFAULT_EXPONENTS = tuple(2 ** k for k in range(9))  # 1, 2, 4, ..., 256
#: moduli below NONZERO_TOL * scale are treated as kernel eigenvalues
NONZERO_TOL = 1e-9
BAND_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class Symbol:
    """A finite complex sequence ``m`` aligned with a system's index set."""

    values: np.ndarray

    def __post_init__(self):
        vals = linalg.as_vector(self.values, "symbol")
        vals = vals.copy()
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)

    @property
    def is_real(self) -> bool:
        return not np.any(self.values.imag)

    @property
    def sup_modulus(self) -> float:
        return float(np.max(np.abs(self.values)))

    def __len__(self):
        return len(self.values)

    def __eq__(self, other):
        if not isinstance(other, Symbol):
            return NotImplemented
        return bool(np.array_equal(self.values, other.values))

    __hash__ = None

    def shifted(self, mu: complex) -> Symbol:
        return Symbol(self.values - mu)

    @classmethod
    def constant(cls, value, n):
        return cls(np.full(n, value, dtype=complex))


def _as_symbol(m) -> Symbol:
    return m if isinstance(m, Symbol) else Symbol(m)


def _check_shapes(m: Symbol, phi: FrameSystem, psi: FrameSystem):
    if phi.dim != psi.dim:
        raise ShapeError(f"ambient dimensions differ: {phi.dim} vs {psi.dim}")
    if not (len(m) == phi.count == psi.count):
        raise ShapeError(
            f"symbol length {len(m)} and system counts {phi.count}, {psi.count} must agree"
        )


def multiplier_matrix(m, phi: FrameSystem, psi: FrameSystem) -> np.ndarray:
    """``d x d`` matrix of ``f -> sum_n m_n <f, psi_n> phi_n``."""
    m = _as_symbol(m)
    _check_shapes(m, phi, psi)
    return (phi.synthesis * m.values) @ psi.analysis


def reduced_matrix(m, phi: FrameSystem, psi: FrameSystem) -> np.ndarray:
    """``n x n`` matrix ``diag(m) G``."""
    m = _as_symbol(m)
    _check_shapes(m, phi, psi)
    return m.values[:, None] * cross_gram(phi, psi)


def spectral_radius_eigen(t) -> float:
    return float(np.max(np.abs(linalg.eig_general(t).eigenvalues)))


def _normalize(mat):
    """Return (mat / ||mat||, log ||mat||); zero maps to (0, -inf)."""
    nrm = linalg.operator_norm(mat)
    if nrm == 0.0:
        return np.zeros_like(mat), -math.inf
    return mat / nrm, math.log(nrm)


def spectral_radius_gelfand(t, exponents=DEFAULT_EXPONENTS) -> list[tuple[int, float]]:
    """``[(N, ||T^N||^(1/N)) ...]`` for each requested exponent.

    Powers are formed from normalized repeated squares ``T^(2^k)`` (combined
    by binary decomposition for other exponents); logs of the discarded norms
    are accumulated, so no intermediate overflows.
    """
    t = linalg.as_matrix(t, "T")
    if t.shape[0] != t.shape[1]:
        raise ShapeError(f"T must be square, got {t.shape}")
    exponents = [int(e) for e in exponents]
    if not exponents or min(exponents) < 1:
        raise DomainError("exponents must be a nonempty list of positive integers")
    top = max(exponents).bit_length()
    squares = []
    mat, logn = _normalize(t)
    for k in range(top):
        if k:
            prev, prev_log = squares[-1]
            mat, step = _normalize(prev @ prev)
            logn = 2.0 * prev_log + step
        if not np.all(np.isfinite(mat)):
            raise ScaleError("non-finite power of T; normalize the input")
        squares.append((mat, logn))

    out = []
    for n_exp in exponents:
        acc = None
        acc_log = 0.0
        for k in range(top):
            if not (n_exp >> k) & 1:
                continue
            mat, logn = squares[k]
            if acc is None:
                acc, acc_log = mat, logn
            else:
                acc, step = _normalize(acc @ mat)
                acc_log += logn + step
        value = math.exp(acc_log / n_exp) if acc_log > -math.inf else 0.0
        if not math.isfinite(value):
            raise ScaleError(f"||T^{n_exp}||^(1/{n_exp}) overflows; normalize the input")
        out.append((n_exp, value))
    return out


def bound_prop1(m, phi: FrameSystem, psi: FrameSystem) -> float:
    """``sup|m| sqrt(B_phi B_psi)`` with optimal upper frame bounds."""
    m = _as_symbol(m)
    _check_shapes(m, phi, psi)
    return m.sup_modulus * math.sqrt(phi.bounds.upper * psi.bounds.upper)


def gram_norm(phi: FrameSystem, psi: FrameSystem) -> float:
    return linalg.operator_norm(cross_gram(phi, psi))


def bound_thm1(m, phi: FrameSystem, psi: FrameSystem) -> float:
    """``sup|m| ||G||``."""
    m = _as_symbol(m)
    _check_shapes(m, phi, psi)
    return m.sup_modulus * gram_norm(phi, psi)


def schur_bound(phi: FrameSystem, psi: FrameSystem) -> float:
    """Schur test bound ``sqrt(Gamma1 Gamma2)`` on ``||G||`` from absolute row/column sums."""
    g = np.abs(cross_gram(phi, psi))
    gamma1 = g.sum(axis=1).max()  # sup over k of sum over n
    gamma2 = g.sum(axis=0).max()  # sup over n of sum over k
    return math.sqrt(float(gamma1) * float(gamma2))


def banded_bound(phi: FrameSystem, psi: FrameSystem, band: int) -> float:
    """Sum over diagonals ``|i| <= band`` of ``max_n |<phi_n, psi_{n+i}>|``.

    Raises :class:`DomainError` if some ``<phi_n, psi_k>`` with ``|n - k| > band``
    exceeds ``1e-12 * max(1, max|G|)``.
    """
    if band < 0:
        raise DomainError(f"band must be nonnegative, got {band}")
    g = np.abs(cross_gram(phi, psi))  # g[k, n] = |<phi_n, psi_k>|
    k_idx, n_idx = np.indices(g.shape)
    outside = np.abs(n_idx - k_idx) > band
    tol = BAND_TOL * max(1.0, float(g.max()))
    bad = np.argwhere(outside & (g > tol))
    if bad.size:
        k, n = (int(v) for v in bad[0])
        raise DomainError(
            f"<phi_{n}, psi_{k}> = {g[k, n]:.3e} lies outside band {band}"
        )
    total = 0.0
    for i in range(-band, band + 1):
        diag = np.diagonal(g, offset=-i)  # entries with k = n + i
        if diag.size:
            total += float(diag.max())
    return total


@dataclass(frozen=True)
class BoundsLedger:
    """Every upper bound on the multiplier's spectral radius, plus its ingredients."""

    prop1: float
    thm1: float
    gram_norm: float
    sqrt_BB: float
    schur: float | None = None
    banded: float | None = None

    def present(self) -> dict:
        return {k: v for k, v in asdict(self).items() if v is not None and k not in ("gram_norm", "sqrt_BB")}

    def to_dict(self) -> dict:
        return asdict(self)


def bounds_ledger(m, phi: FrameSystem, psi: FrameSystem, band: int | None = None) -> BoundsLedger:
    m = _as_symbol(m)
    _check_shapes(m, phi, psi)
    sup = m.sup_modulus
    gnorm = gram_norm(phi, psi)
    sqrt_bb = math.sqrt(phi.bounds.upper * psi.bounds.upper)
    return BoundsLedger(
        prop1=sup * sqrt_bb,
        thm1=sup * gnorm,
        gram_norm=gnorm,
        sqrt_BB=sqrt_bb,
        schur=sup * schur_bound(phi, psi),
        banded=None if band is None else sup * banded_bound(phi, psi, band),
    )


def nonzero_eigenvalues(t, scale: float | None = None) -> np.ndarray:
    """Eigenvalues with modulus above ``1e-9 * scale`` (default scale ``max(1, ||T||)``)."""
    if scale is None:
        scale = max(1.0, linalg.operator_norm(t))
    w = linalg.eig_general(t).eigenvalues
    return w[np.abs(w) > NONZERO_TOL * scale]


def match_spectra(a, b) -> float:
    """Largest pairing distance under an optimal one-to-one matching; ``inf`` if sizes differ."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.size != b.size:
        return math.inf
    if a.size == 0:
        return 0.0
    cost = np.abs(a[:, None] - b[None, :])
    rows, cols = linear_sum_assignment(cost)
    return float(cost[rows, cols].max())
