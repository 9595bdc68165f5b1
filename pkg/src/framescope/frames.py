"""Finite frame systems in C^d and the operators derived from them.

Inner products are linear in the first slot: ``<f, g> = sum f_i conj(g_i)``.
A system of ``n`` vectors is stored as an ``n x d`` array whose row ``k`` is
the vector ``phi_k``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import linalg
from .errors import DomainError, ShapeError

#: A <= RANK_TOL * B makes dual / tight constructions refuse the system.
RANK_TOL = 1e-12


@dataclass(frozen=True)
class FrameBounds:
    """Optimal frame bounds: extreme eigenvalues of the frame operator."""

    lower: float
    upper: float

    @property
    def is_frame(self) -> bool:
        return self.lower > RANK_TOL * self.upper and self.lower > 0


@dataclass(frozen=True, eq=False)
class FrameSystem:
    """An immutable indexed family of ``n`` vectors in ``C^d``.

    Derived operators are memoized on first access.  Concurrent first access
    may compute a value twice, which is harmless since they are pure.
    """

    vectors: np.ndarray
    label: str = ""

    def __post_init__(self):
        vecs = np.array(self.vectors, dtype=complex)
        if vecs.ndim != 2 or vecs.shape[0] < 1 or vecs.shape[1] < 1:
            raise ShapeError(f"vectors must form an n x d array with n, d >= 1, got {vecs.shape}")
        if not np.all(np.isfinite(vecs)):
            raise DomainError("frame vectors have non-finite entries")
        vecs.setflags(write=False)
        object.__setattr__(self, "vectors", vecs)

    @classmethod
    def from_columns(cls, mat, label=""):
        """Build from a ``d x n`` matrix whose columns are the vectors."""
        return cls(np.asarray(mat, dtype=complex).T, label)

    @property
    def count(self) -> int:
        return self.vectors.shape[0]

    @property
    def dim(self) -> int:
        return self.vectors.shape[1]

    def __len__(self):
        return self.count

    def __getitem__(self, k):
        return self.vectors[k]

    @cached_property
    def analysis(self) -> np.ndarray:
        return _readonly(analysis_matrix(self))

    @cached_property
    def synthesis(self) -> np.ndarray:
        return _readonly(synthesis_matrix(self))

    @cached_property
    def frame_op(self) -> np.ndarray:
        return _readonly(frame_operator(self))

    @cached_property
    def bounds(self) -> FrameBounds:
        return frame_bounds(self)

    def __eq__(self, other):
        if not isinstance(other, FrameSystem):
            return NotImplemented
        return (
            self.label == other.label
            and self.vectors.shape == other.vectors.shape
            and bool(np.array_equal(self.vectors, other.vectors))
        )

    __hash__ = None


def _readonly(a):
    a.setflags(write=False)
    return a


def standard_basis(d: int, label="standard basis") -> FrameSystem:
    return FrameSystem(np.eye(d, dtype=complex), label)


def analysis_matrix(phi: FrameSystem) -> np.ndarray:
    """``n x d`` matrix with ``(C f)_k = <f, phi_k>``."""
    return phi.vectors.conj().copy()


def synthesis_matrix(phi: FrameSystem) -> np.ndarray:
    """``d x n`` matrix whose columns are the frame vectors."""
    return phi.vectors.T.copy()


def frame_operator(phi: FrameSystem) -> np.ndarray:
    s = phi.synthesis @ phi.analysis
    return 0.5 * (s + s.conj().T)


def _same_dim(phi, psi):
    if phi.dim != psi.dim:
        raise ShapeError(f"ambient dimensions differ: {phi.dim} vs {psi.dim}")


def cross_gram(phi: FrameSystem, psi: FrameSystem) -> np.ndarray:
    """``psi.n x phi.n`` matrix ``C_psi D_phi``; entry ``(k, n)`` is ``<phi_n, psi_k>``."""
    _same_dim(phi, psi)
    return psi.analysis @ phi.synthesis


def frame_bounds(phi: FrameSystem) -> FrameBounds:
    w = linalg.eig_hermitian(phi.frame_op).eigenvalues.real
    lower = max(float(w[0]), 0.0)
    upper = max(float(w[-1]), 0.0)
    return FrameBounds(min(lower, upper), upper)


def is_dual_pair(phi: FrameSystem, psi: FrameSystem, tol: float = 1e-8) -> tuple[bool, float]:
    """Return ``(ok, defect)`` with ``defect = ||D_phi C_psi - I||``."""
    _same_dim(phi, psi)
    if phi.count != psi.count:
        raise ShapeError(f"systems have different counts: {phi.count} vs {psi.count}")
    defect = linalg.operator_norm(phi.synthesis @ psi.analysis - np.eye(phi.dim))
    return defect <= tol, defect


def _require_frame(phi, what):
    b = phi.bounds
    if not b.lower > RANK_TOL * b.upper:
        raise DomainError(
            f"cannot form {what}: system is not a frame (lower bound {b.lower:.3e}, upper {b.upper:.3e})"
        )


def canonical_dual(phi: FrameSystem) -> FrameSystem:
    """The system ``{S^-1 phi_n}``."""
    _require_frame(phi, "canonical dual")
    dual = linalg.solve_hpd(phi.frame_op, phi.synthesis)
    return FrameSystem.from_columns(dual, _derived_label(phi, "canonical dual"))


def canonical_tight(phi: FrameSystem) -> FrameSystem:
    """The Parseval frame ``{S^-1/2 phi_n}``."""
    _require_frame(phi, "canonical tight frame")
    root = linalg.hermitian_power(phi.frame_op, -0.5)
    return FrameSystem.from_columns(root @ phi.synthesis, _derived_label(phi, "canonical tight"))


def _derived_label(phi, what):
    return f"{what} of {phi.label}" if phi.label else what
