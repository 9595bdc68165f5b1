"""Dense complex linear algebra.

Matrices are plain ``numpy`` arrays of dtype ``complex128``.  Every public
function validates its inputs through :func:`as_matrix`, which rejects
non-finite entries, and never mutates its arguments.

Two eigensolver backends are available.  ``"lapack"`` (the default) calls
the LAPACK drivers shipped with numpy; ``"qr"`` (general) and ``"jacobi"``
(Hermitian) are the in-package Hessenberg/shifted-QR and cyclic Jacobi
solvers.  Both backends share the same validation, ordering and residual
reporting.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import solve_triangular

from .errors import ConvergenceError, DomainError, ShapeError

#: relative deflation threshold for the shifted QR iteration
QR_DEFLATION_TOL = 1e-14
#: total QR iterations allowed per unit of matrix order
QR_ITERATIONS_PER_ORDER = 40
#: off-diagonal Frobenius mass (relative) at which Jacobi stops
JACOBI_TOL = 1e-14
JACOBI_MAX_SWEEPS = 30
#: relative anti-Hermitian part tolerated by the Hermitian routines
HERMITIAN_TOL = 1e-12


@dataclass(frozen=True)
class EigenResult:
    """Eigenvalues plus the worst relative backward-error estimate.

    ``eigenvectors`` is populated only by the Hermitian solver (columns are
    orthonormal and ordered like ``eigenvalues``).
    """

    eigenvalues: np.ndarray
    residual: float
    eigenvectors: np.ndarray | None = None

    def __len__(self):
        return len(self.eigenvalues)


def as_matrix(a, name="matrix") -> np.ndarray:
    """Return ``a`` as a finite 2-D complex array (a copy if conversion is needed)."""
    arr = np.asarray(a, dtype=complex)
    if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
        raise ShapeError(f"{name} must be a non-empty 2-D array, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"{name} has non-finite entries")
    return arr


def as_vector(x, name="vector") -> np.ndarray:
    arr = np.asarray(x, dtype=complex)
    if arr.ndim != 1 or arr.shape[0] < 1:
        raise ShapeError(f"{name} must be a non-empty 1-D array, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"{name} has non-finite entries")
    return arr


def _require_square(a, name="matrix"):
    if a.shape[0] != a.shape[1]:
        raise ShapeError(f"{name} must be square, got shape {a.shape}")


def matmul(a, b) -> np.ndarray:
    a = as_matrix(a, "a")
    b = as_matrix(b, "b")
    if a.shape[1] != b.shape[0]:
        raise ShapeError(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def adjoint(a) -> np.ndarray:
    """Conjugate transpose."""
    return as_matrix(a).conj().T.copy()


def operator_norm(a, tol: float = 1e-12, backend: str = "lapack") -> float:
    """Largest singular value, via the Hermitian eigensolver on the smaller Gram matrix."""
    if not tol > 0:
        raise DomainError(f"tol must be positive, got {tol}")
    a = as_matrix(a)
    peak = float(np.abs(a).max())
    if peak == 0.0:
        return 0.0
    a = a / peak  # keeps the Gram matrix inside double range
    gram = a.conj().T @ a if a.shape[1] <= a.shape[0] else a @ a.conj().T
    gram = 0.5 * (gram + gram.conj().T)
    try:
        if backend == "jacobi":
            top = _jacobi(gram)[0][-1]
        else:
            top = np.linalg.eigvalsh(gram)[-1]
    except (np.linalg.LinAlgError, ConvergenceError) as exc:
        raise ConvergenceError(
            "operator norm did not converge", estimate=peak * _power_norm(a, tol)
        ) from exc
    return peak * math.sqrt(max(float(top), 0.0))


def _power_norm(a, tol, max_iter=10_000):
    g = a.conj().T @ a
    x = np.ones(g.shape[0], dtype=complex) / math.sqrt(g.shape[0])
    lam = 0.0
    for _ in range(max_iter):
        y = g @ x
        ny = np.linalg.norm(y)
        if ny == 0:
            return 0.0
        new = float(np.real(np.vdot(x, y)))
        x = y / ny
        if abs(new - lam) <= tol * abs(new):
            return math.sqrt(max(new, 0.0))
        lam = new
    return math.sqrt(max(lam, 0.0))


def norm_scale(a) -> float:
    """Operator norm, falling back to Frobenius and finally 1 for the zero matrix."""
    a = as_matrix(a)
    s = operator_norm(a)
    if s == 0.0:
        s = float(np.linalg.norm(a))
    return s if s > 0 else 1.0


def sort_spectrum(values, scale: float = 1.0) -> np.ndarray:
    """Sort by descending modulus, ties (to 1e-12*scale) by ascending argument in (-pi, pi]."""
    values = np.asarray(values, dtype=complex)
    if values.size == 0:
        return values
    mod = np.abs(values)
    arg = np.angle(values)
    arg[arg == -np.pi] = np.pi
    # Bucket moduli so round-off does not break ties.
    key = np.round(mod / (1e-12 * max(scale, 1e-300)))
    order = np.lexsort((arg, -key))
    return values[order]


def eig_general(a, backend: str = "lapack") -> EigenResult:
    """All eigenvalues of a square matrix with a backward-error estimate.

    ``residual`` is the largest ``||(A - lambda I) v|| / ||A||`` over the
    computed eigenpairs, an upper estimate of the smallest singular value of
    ``A - lambda I`` relative to ``||A||``.
    """
    a = as_matrix(a)
    _require_square(a)
    scale = norm_scale(a)
    if backend == "lapack":
        try:
            w, v = np.linalg.eig(a)
        except np.linalg.LinAlgError as exc:
            raise ConvergenceError(str(exc)) from exc
        res = np.linalg.norm(a @ v - v * w, axis=0) / np.maximum(np.linalg.norm(v, axis=0), 1e-300)
        residual = float(res.max()) / scale
    elif backend == "qr":
        w = hessenberg_qr_eigenvalues(a)
        residual = max(_inverse_iteration_residual(a, lam) for lam in w) / scale
    else:
        raise ValueError(f"unknown backend {backend!r}")
    return EigenResult(sort_spectrum(w, scale), residual)


def _inverse_iteration_residual(a, lam):
    n = a.shape[0]
    shifted = a - lam * np.eye(n)
    rng = np.random.default_rng(0)
    x = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    eps = 1e-14 * max(np.linalg.norm(a), 1.0)
    try:
        y = np.linalg.solve(shifted + eps * np.eye(n), x)
    except np.linalg.LinAlgError:
        return 0.0
    ny = np.linalg.norm(y)
    if not np.isfinite(ny) or ny == 0:
        return 0.0
    return float(np.linalg.norm(shifted @ (y / ny)))


def hessenberg(a) -> np.ndarray:
    """Reduce to upper Hessenberg form with Householder reflections (similarity)."""
    h = as_matrix(a).copy()
    n = h.shape[0]
    for k in range(n - 2):
        x = h[k + 1:, k]
        alpha = np.linalg.norm(x)
        if alpha == 0.0:
            continue
        phase = x[0] / abs(x[0]) if x[0] != 0 else 1.0
        v = x.copy()
        v[0] += phase * alpha
        v /= np.linalg.norm(v)
        h[k + 1:, k:] -= 2.0 * np.outer(v, v.conj() @ h[k + 1:, k:])
        h[:, k + 1:] -= 2.0 * np.outer(h[:, k + 1:] @ v, v.conj())
        h[k + 2:, k] = 0.0
    return h


def _givens(x, y):
    """Return (c, s) with c real so that [[c, s], [-conj(s), c]] @ [x, y] = [r, 0]."""
    ay = abs(y)
    if ay == 0.0:
        return 1.0, 0j
    ax = abs(x)
    if ax == 0.0:
        return 0.0, np.conj(y) / ay
    r = math.hypot(ax, ay)
    return ax / r, (x / ax) * np.conj(y) / r


def _wilkinson_shift(a, b, c, d):
    """Eigenvalue of [[a, b], [c, d]] closer to d."""
    tr = a + d
    det = a * d - b * c
    disc = np.sqrt(tr * tr / 4 - det)
    l1 = tr / 2 + disc
    l2 = tr / 2 - disc
    return l1 if abs(l1 - d) <= abs(l2 - d) else l2


def hessenberg_qr_eigenvalues(a) -> np.ndarray:
    """Eigenvalues by Householder Hessenberg reduction and single-shift complex QR.

    Uses Wilkinson shifts with occasional exceptional shifts.  Raises
    :class:`ConvergenceError` carrying the eigenvalues deflated so far when the
    total iteration count exceeds ``40 * n``.
    """
    a = as_matrix(a)
    _require_square(a)
    n = a.shape[0]
    h = hessenberg(a)
    anorm = np.linalg.norm(h)
    if anorm == 0.0:
        return np.zeros(n, dtype=complex)
    eig = np.zeros(n, dtype=complex)
    hi = n - 1
    iters = 0
    stall = 0
    cap = QR_ITERATIONS_PER_ORDER * n
    while hi >= 0:
        if hi == 0:
            eig[0] = h[0, 0]
            break
        # Find the start of the unreduced block ending at hi.
        lo = hi
        while lo > 0:
            s = abs(h[lo - 1, lo - 1]) + abs(h[lo, lo])
            if s == 0.0:
                s = anorm
            if abs(h[lo, lo - 1]) <= QR_DEFLATION_TOL * s:
                h[lo, lo - 1] = 0.0
                break
            lo -= 1
        if lo == hi:
            eig[hi] = h[hi, hi]
            hi -= 1
            stall = 0
            continue
        iters += 1
        stall += 1
        if iters > cap:
            raise ConvergenceError(
                f"QR iteration exceeded {cap} steps", estimate=eig[hi + 1:].copy()
            )
        if stall % 11 == 0:
            shift = h[hi, hi] + abs(h[hi, hi - 1])
        else:
            shift = _wilkinson_shift(h[hi - 1, hi - 1], h[hi - 1, hi], h[hi, hi - 1], h[hi, hi])
        # One shifted QR step on the active window h[lo:hi+1, lo:hi+1].
        for k in range(lo, hi + 1):
            h[k, k] -= shift
        rots = []
        for k in range(lo, hi):
            c, s = _givens(h[k, k], h[k + 1, k])
            rows = h[[k, k + 1], k:]
            top = c * rows[0] + s * rows[1]
            bot = -np.conj(s) * rows[0] + c * rows[1]
            h[k, k:] = top
            h[k + 1, k:] = bot
            h[k + 1, k] = 0.0
            rots.append((c, s))
        for k, (c, s) in zip(range(lo, hi), rots):
            top = min(k + 2, hi) + 1
            cols = h[:top, [k, k + 1]]
            left = c * cols[:, 0] + np.conj(s) * cols[:, 1]
            right = -s * cols[:, 0] + c * cols[:, 1]
            h[:top, k] = left
            h[:top, k + 1] = right
        for k in range(lo, hi + 1):
            h[k, k] += shift
    return eig


def check_hermitian(a, name="matrix") -> np.ndarray:
    a = as_matrix(a, name)
    _require_square(a, name)
    size = np.linalg.norm(a)
    defect = np.linalg.norm(a - a.conj().T)
    if defect > HERMITIAN_TOL * max(size, 1e-300) and defect > 0:
        raise DomainError(f"{name} is not Hermitian (relative defect {defect / size:.3e})")
    return 0.5 * (a + a.conj().T)


def eig_hermitian(a, backend: str = "lapack") -> EigenResult:
    """Real eigenvalues ascending, orthonormal eigenvectors in columns."""
    a = check_hermitian(a)
    if backend == "lapack":
        try:
            w, v = np.linalg.eigh(a)
        except np.linalg.LinAlgError as exc:
            raise ConvergenceError(str(exc)) from exc
    elif backend == "jacobi":
        w, v = _jacobi(a)
    else:
        raise ValueError(f"unknown backend {backend!r}")
    scale = max(float(np.linalg.norm(a)), 1e-300)
    residual = float(np.linalg.norm(a @ v - v * w, axis=0).max()) / scale
    return EigenResult(np.asarray(w, dtype=float).astype(complex), residual, v)


def _jacobi(a):
    """Cyclic complex Jacobi; returns (ascending eigenvalues, eigenvectors)."""
    a = np.array(a, dtype=complex)
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    target = JACOBI_TOL * np.linalg.norm(a)

    def off(m):
        return float(np.linalg.norm(m - np.diag(np.diag(m))))

    for _ in range(JACOBI_MAX_SWEEPS):
        if off(a) <= target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                b = a[p, q]
                ab = abs(b)
                if ab == 0.0:
                    continue
                app, aqq = a[p, p].real, a[q, q].real
                zeta = (aqq - app) / (2.0 * ab)
                t = math.copysign(1.0, zeta) / (abs(zeta) + math.sqrt(1.0 + zeta * zeta))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                ph = b / ab
                # unitary acting on coordinates (p, q)
                u = np.array([[c, s], [-s * np.conj(ph), c * np.conj(ph)]], dtype=complex)
                a[:, [p, q]] = a[:, [p, q]] @ u
                a[[p, q], :] = u.conj().T @ a[[p, q], :]
                a[p, q] = a[q, p] = 0.0
                v[:, [p, q]] = v[:, [p, q]] @ u
    else:
        if off(a) > target:
            raise ConvergenceError(
                f"Jacobi exceeded {JACOBI_MAX_SWEEPS} sweeps", estimate=np.sort(np.diag(a).real)
            )
    w = np.diag(a).real
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]


def hermitian_power(a, p: float, tol: float = 1e-12) -> np.ndarray:
    """``V diag(lambda**p) V*`` for a Hermitian positive definite ``a``."""
    res = eig_hermitian(a)
    w = res.eigenvalues.real
    if w[0] <= tol * max(abs(w[-1]), 1e-300):
        raise DomainError(f"matrix is not positive definite (smallest eigenvalue {w[0]:.3e})")
    v = res.eigenvectors
    out = (v * w ** p) @ v.conj().T
    return 0.5 * (out + out.conj().T)


def solve_hpd(a, b) -> np.ndarray:
    """Solve ``a X = b`` by Cholesky for Hermitian positive definite ``a``."""
    a = check_hermitian(a)
    b = np.asarray(b, dtype=complex)
    vector = b.ndim == 1
    b = as_matrix(b.reshape(-1, 1) if vector else b, "b")
    if a.shape[0] != b.shape[0]:
        raise ShapeError(f"cannot solve {a.shape} system with right-hand side {b.shape}")
    try:
        low = np.linalg.cholesky(a)
    except np.linalg.LinAlgError as exc:
        raise DomainError("matrix is not positive definite (Cholesky pivot breakdown)") from exc
    y = solve_triangular(low, b, lower=True)
    x = solve_triangular(low.conj().T, y, lower=False)
    return x[:, 0] if vector else x
