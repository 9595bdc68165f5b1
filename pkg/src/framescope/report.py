"""Spectral reports: the JSON record produced by ``framescope analyze`` and ``group``.

Everything except the ``timing`` field is a deterministic function of the
inputs, so re-runs serialize byte-identically once ``timing`` is dropped.
"""
from __future__ import annotations

import json
import time

import numpy as np

from . import __version__
from . import localization as loc
from .frames import FrameSystem, is_dual_pair
from .groups import CyclicWindow, analyze_group
from .io import complex_pairs, dumps
from .multipliers import (
    Symbol,
    bounds_ledger,
    multiplier_matrix,
    reduced_matrix,
    spectral_radius_gelfand,
)
from . import linalg

TOOL = "framescope"


def _system_info(phi: FrameSystem, digest=None) -> dict:
    return {"label": phi.label, "d": phi.dim, "n": phi.count, "sha256": digest}


def analyze(
    phi: FrameSystem,
    psi: FrameSystem,
    m: Symbol,
    *,
    band: int | None = None,
    tol: float | None = None,
    hashes: dict | None = None,
    seed: int | None = None,
) -> dict:
    """Full spectral report for the multiplier of ``(m, phi, psi)``."""
    start = time.perf_counter()
    hashes = hashes or {}
    t = multiplier_matrix(m, phi, psi)
    red = reduced_matrix(m, phi, psi)
    eig_t = linalg.eig_general(t).eigenvalues
    eig_red = linalg.eig_general(red).eigenvalues
    radius = float(np.max(np.abs(eig_t)))
    radius_red = float(np.max(np.abs(eig_red)))
    gelfand = spectral_radius_gelfand(t)
    ledger = bounds_ledger(m, phi, psi, band)
    if tol is None:
        tol = 1e-8 * (1.0 + radius)

    regions = [
        loc.SpectralRegion.disk(0, ledger.prop1, "bessel-bound origin disk"),
        loc.SpectralRegion.disk(0, ledger.thm1, "gram-norm origin disk"),
    ]
    dual_ok, defect = (False, None)
    canonical = False
    if phi.count == psi.count:
        dual_ok, defect = is_dual_pair(phi, psi, loc.DUAL_TOL)
    if dual_ok:
        regions.append(loc.region_symbol_disk(m, phi, psi))
        if m.is_real:
            regions.append(loc.region_real_symbol(m, phi, psi))
        canonical = loc.is_canonical_dual(phi, psi)
        if canonical:
            regions.append(loc.region_convex_hull(m))
    certificates = [
        loc.ContainmentCertificate(r, eig_t, r.margins(eig_t), float(tol)).to_dict() for r in regions
    ]
    report = {
        "tool": TOOL,
        "version": __version__,
        "seed": seed,
        "inputs": {
            "phi": _system_info(phi, hashes.get("phi")),
            "psi": _system_info(psi, hashes.get("psi")),
            "symbol": {"n": len(m), "sha256": hashes.get("symbol"), "is_real": m.is_real},
        },
        "eigenvalues": {"multiplier": complex_pairs(eig_t), "reduced": complex_pairs(eig_red)},
        "radius_eigen": radius,
        "radius_eigen_reduced": radius_red,
        "radius_gap": abs(radius - radius_red),
        "radius_gelfand": [[n, v] for n, v in gelfand],
        "gelfand_gap": gelfand[-1][1] - radius,
        "bounds": ledger.to_dict(),
        "duality": {"is_dual": bool(dual_ok), "defect": defect, "canonical": bool(canonical)},
        "certificates": certificates,
        "all_pass": all(c["overall"] for c in certificates),
    }
    report["timing"] = {"seconds": time.perf_counter() - start}
    return report


def analyze_windows(m: Symbol, chi: CyclicWindow, eta: CyclicWindow, hashes: dict | None = None) -> dict:
    start = time.perf_counter()
    hashes = hashes or {}
    res = analyze_group(m, chi, eta)
    scale = max(1.0, res.radius_bound)
    slack = res.radius_bound - res.radius_eigen
    report = {
        "tool": TOOL,
        "version": __version__,
        "inputs": {
            "chi": {"N": chi.N, "sha256": hashes.get("chi")},
            "eta": {"N": eta.N, "sha256": hashes.get("eta")},
            "symbol": {"n": len(m), "sha256": hashes.get("symbol")},
        },
        "bracket": complex_pairs(res.bracket.values),
        "gram_norm_bracket": res.gram_norm_bracket,
        "gram_norm_dense": res.gram_norm_dense,
        "gram_norm_gap": res.norm_gap,
        "radius_bound": res.radius_bound,
        "radius_eigen": res.radius_eigen,
        "radius_slack": slack,
        "frames": {
            "chi": {"lower": res.bounds_chi.lower, "upper": res.bounds_chi.upper, "is_frame": res.bounds_chi.is_frame},
            "eta": {"lower": res.bounds_eta.lower, "upper": res.bounds_eta.upper, "is_frame": res.bounds_eta.is_frame},
        },
        "all_pass": bool(res.norm_gap <= 1e-9 and slack >= -1e-8 * scale),
    }
    report["timing"] = {"seconds": time.perf_counter() - start}
    return report


def serialize(report: dict) -> str:
    return dumps(report)


def parse(text: str) -> dict:
    return json.loads(text)


def without_timing(report: dict) -> dict:
    return {k: v for k, v in report.items() if k != "timing"}
