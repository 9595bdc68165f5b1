"""Batch property run over random instances (``framescope verify``)."""
from __future__ import annotations

from collections import OrderedDict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from . import localization as loc
from . import rng as rngmod
from .frames import canonical_tight, cross_gram
from .multipliers import (
    Symbol,
    bounds_ledger,
    match_spectra,
    multiplier_matrix,
    nonzero_eigenvalues,
    reduced_matrix,
    spectral_radius_eigen,
    spectral_radius_gelfand,
)

CHECKS = (
    "radius_equality",
    "nonzero_spectra",
    "bound_chain",
    "gelfand",
    "symbol_disk",
    "real_symbol_disk",
    "convex_hull",
    "region_nesting",
    "canonical_gram",
    "strictness",
)


@dataclass
class CheckStats:
    passed: int = 0
    total: int = 0
    worst: float = float("inf")

    def add(self, slack: float):
        """Record one check; it passes when ``slack >= 0``."""
        self.total += 1
        self.passed += slack >= 0
        self.worst = min(self.worst, float(slack))


@dataclass
class Summary:
    stats: "OrderedDict[str, CheckStats]" = field(
        default_factory=lambda: OrderedDict((c, CheckStats()) for c in CHECKS)
    )

    @property
    def ok(self) -> bool:
        return all(s.passed == s.total for s in self.stats.values())

    def table(self) -> str:
        lines = [f"{'check':<20} {'pass':>6} {'total':>6} {'worst slack':>14}"]
        for name, s in self.stats.items():
            worst = "-" if s.total == 0 else f"{s.worst:.3e}"
            lines.append(f"{name:<20} {s.passed:>6} {s.total:>6} {worst:>14}")
        lines.append("ALL PASS" if self.ok else "FAILURES")
        return "\n".join(lines)


def check_instance(seed: int, index: int, d: int, n: int) -> list[tuple[str, float]]:
    """Run every applicable invariant on one random instance; return (check, slack) pairs."""
    g = rngmod.stream(seed, index)
    out = []
    phi = rngmod.gaussian_system(g, d, n)
    psi = rngmod.gaussian_system(g, d, n)
    m = Symbol(rngmod.bounded_symbol(g, n, 1.0 + g.random()))

    t = multiplier_matrix(m, phi, psi)
    red = reduced_matrix(m, phi, psi)
    r = spectral_radius_eigen(t)
    r_red = spectral_radius_eigen(red)
    out.append(("radius_equality", 1e-8 * (1 + max(r, r_red)) - abs(r - r_red)))

    scale = max(1.0, linalg.operator_norm(t), linalg.operator_norm(red))
    gap = match_spectra(nonzero_eigenvalues(t, scale), nonzero_eigenvalues(red, scale))
    out.append(("nonzero_spectra", 1e-8 * scale - gap))

    led = bounds_ledger(m, phi, psi)
    bscale = max(1.0, led.prop1)
    out.append(("bound_chain", min(led.thm1 - r, led.prop1 - led.thm1, led.schur - led.thm1) + 1e-8 * bscale))

    gel = spectral_radius_gelfand(t)
    tnorm = linalg.operator_norm(t)
    vals = [v for _, v in gel]
    mono = min(vals[i] - vals[i + 1] for i in range(len(vals) - 1)) + 1e-9 * max(1.0, tnorm)
    out.append(("gelfand", min(0.05 * (1 + tnorm) - (vals[-1] - r), mono)))

    if n >= d:
        phi_f, psi_f = rngmod.dual_pair(g, d, n)
        mu = complex(*rngmod.gaussian(g, 2))
        radius = 0.1 + g.random()
        mc = Symbol(mu + rngmod.bounded_symbol(g, n, radius))
        tc = multiplier_matrix(mc, phi_f, psi_f)
        eig = linalg.eig_general(tc).eigenvalues
        disk = loc.region_symbol_disk(mc, phi_f, psi_f, (mu, radius))
        out.append(("symbol_disk", disk.margins(eig).min() + 1e-8))
        prop2 = loc.region_prop2(mc, phi_f, psi_f, (mu, radius))
        out.append(("region_nesting", (1 + 1e-9) * prop2.radius - disk.radius))

        mr = Symbol(rngmod.real_symbol(g, n, -1.0 - g.random(), 1.0 + g.random()))
        tr = multiplier_matrix(mr, phi_f, psi_f)
        real_disk = loc.region_real_symbol(mr, phi_f, psi_f)
        out.append(("real_symbol_disk", real_disk.margins(linalg.eig_general(tr).eigenvalues).min() + 1e-8))
        real_prop2 = loc.region_prop2(mr, phi_f, psi_f, real=True)
        out.append(("region_nesting", (1 + 1e-9) * real_prop2.radius - real_disk.radius))

        hull = loc.region_convex_hull(mc)
        out.append(("convex_hull", hull.margins(eig).min() + 1e-8))

        gram = cross_gram(phi_f, psi_f)
        tight = canonical_tight(phi_f)
        gnorm = linalg.operator_norm(gram)
        entry_gap = float(np.abs(gram - cross_gram(tight, tight)).max())
        out.append(("canonical_gram", min(1e-9 - abs(gnorm - 1.0), 1e-10 - entry_gap)))
    return out


def strictness_check(d: int = 6) -> float:
    """Slack of the alternating-fixture identities: identity multiplier, r = 1, bound 4."""
    phi, psi, m = rngmod.alternating_fixture(d)
    t = multiplier_matrix(m, phi, psi)
    led = bounds_ledger(m, phi, psi)
    r = spectral_radius_eigen(t)
    err = max(float(np.abs(t - np.eye(d)).max()), abs(r - 1.0), abs(led.thm1 - 4.0))
    strict = led.thm1 - r  # must be > 0 (strict inequality)
    return min(1e-12 - err, strict)


def _run(args):
    return check_instance(*args)


def run(seed: int, trials: int, sizes, workers: int = 1) -> Summary:
    if trials < 1:
        raise ValueError("trials must be >= 1")
    jobs = []
    index = 0
    for d, n in sizes:
        for _ in range(trials):
            jobs.append((seed, index, d, n))
            index += 1
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run, jobs))
    else:
        results = [_run(j) for j in jobs]
    summary = Summary()
    for res in results:
        for name, slack in res:
            summary.stats[name].add(slack)
    summary.stats["strictness"].add(strictness_check())
    return summary
