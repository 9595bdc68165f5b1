"""Command-line interface.

Exit codes: 0 success, 1 a mathematical check failed, 2 bad input or usage.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import io, report, rng, verify
from .errors import ConvergenceError, FramescopeError, ShapeError
from .frames import standard_basis
from .groups import CyclicWindow
from .multipliers import Symbol
from .plot import render_svg

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

GEN_KINDS = (
    "gaussian", "parseval", "riesz", "dual-pair", "paper-remark-i",
    "orthonormal", "symbol", "real-symbol", "window",
)


class UsageError(FramescopeError):
    pass


def _seed(args) -> int:
    return args.seed if args.seed is not None else rng.seed_from_env(0)


def _suffixed(out: Path, suffix: str) -> Path:
    return out.with_name(f"{out.stem}_{suffix}{out.suffix or '.json'}")


def cmd_gen(args) -> int:
    seed = _seed(args)
    d, n, out = args.d, args.n, Path(args.out)
    g = rng.stream(seed)
    kind = args.kind
    if kind in ("riesz", "paper-remark-i", "orthonormal"):
        if n is not None and n != d:
            raise UsageError(f"{kind} requires n = d (got d={d}, n={n})")
        n = d
    if n is None:
        n = d
    if kind == "parseval" and n < d:
        raise UsageError(f"parseval requires n >= d (got d={d}, n={n})")
    if kind == "dual-pair" and n < d:
        raise UsageError(f"dual-pair requires n >= d (got d={d}, n={n})")
    if kind == "paper-remark-i" and (d < 2 or d % 2):
        raise UsageError(f"paper-remark-i requires an even d >= 2 (got {d})")

    written = []
    if kind == "gaussian":
        io.write_frame(out, rng.gaussian_system(g, d, n))
        written.append(out)
    elif kind == "parseval":
        io.write_frame(out, rng.parseval_system(g, d, n))
        written.append(out)
    elif kind == "riesz":
        io.write_frame(out, rng.riesz_basis(g, d))
        written.append(out)
    elif kind == "orthonormal":
        io.write_frame(out, standard_basis(d))
        written.append(out)
    elif kind == "dual-pair":
        phi, psi = rng.dual_pair(g, d, n)
        for path, sys_ in ((_suffixed(out, "phi"), phi), (_suffixed(out, "psi"), psi)):
            io.write_frame(path, sys_)
            written.append(path)
    elif kind == "paper-remark-i":
        phi, psi, m = rng.alternating_fixture(d)
        io.write_frame(_suffixed(out, "phi"), phi)
        io.write_frame(_suffixed(out, "psi"), psi)
        io.write_symbol(_suffixed(out, "symbol"), Symbol(m))
        written += [_suffixed(out, s) for s in ("phi", "psi", "symbol")]
    elif kind == "symbol":
        io.write_symbol(out, Symbol(rng.bounded_symbol(g, n)))
        written.append(out)
    elif kind == "real-symbol":
        io.write_symbol(out, Symbol(rng.real_symbol(g, n)))
        written.append(out)
    elif kind == "window":
        io.write_window(out, CyclicWindow(rng.complex_gaussian(g, d)))
        written.append(out)
    for path in written:
        print(path)
    return EXIT_OK


def _emit(text: str, out):
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_analyze(args) -> int:
    phi = io.read_frame(args.phi)
    psi = io.read_frame(args.psi)
    m = io.read_symbol(args.symbol)
    hashes = {"phi": io.file_hash(args.phi), "psi": io.file_hash(args.psi), "symbol": io.file_hash(args.symbol)}
    rep = report.analyze(phi, psi, m, band=args.band, tol=args.tol, hashes=hashes, seed=args.seed)
    _emit(report.serialize(rep), args.out)
    if not rep["all_pass"]:
        for cert in rep["certificates"]:
            if not cert["overall"]:
                print(
                    f"containment failed for {cert['region']['label']}: worst margin {min(cert['margins']):.3e}",
                    file=sys.stderr,
                )
        return EXIT_FAIL
    return EXIT_OK


def cmd_group(args) -> int:
    chi = io.read_window(args.chi)
    eta = io.read_window(args.eta)
    if args.symbol:
        m = io.read_symbol(args.symbol)
    else:
        m = Symbol(np.ones(chi.N, dtype=complex))
    if not (chi.N == eta.N == len(m)):
        raise ShapeError(f"lengths differ: chi {chi.N}, eta {eta.N}, symbol {len(m)}")
    hashes = {"chi": io.file_hash(args.chi), "eta": io.file_hash(args.eta)}
    if args.symbol:
        hashes["symbol"] = io.file_hash(args.symbol)
    rep = report.analyze_windows(m, chi, eta, hashes)
    _emit(report.serialize(rep), args.out)
    for name in ("chi", "eta"):
        if not rep["frames"][name]["is_frame"]:
            print(f"{name}: translates are not a frame (lower bound {rep['frames'][name]['lower']:.3e})", file=sys.stderr)
    return EXIT_OK if rep["all_pass"] else EXIT_FAIL


def cmd_plot(args) -> int:
    data = io.read_json(args.report)
    try:
        svg = render_svg(data)
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise UsageError(f"{args.report}: malformed report ({exc!r})") from exc
    Path(args.out).write_text(svg, encoding="utf-8")
    return EXIT_OK


def parse_sizes(text: str):
    sizes = []
    for part in text.split(","):
        try:
            d, n = part.lower().split("x")
            d, n = int(d), int(n)
        except ValueError as exc:
            raise UsageError(f"bad size {part!r}; expected DxN") from exc
        if d < 1 or n < 1:
            raise UsageError(f"bad size {part!r}; dimensions must be positive")
        sizes.append((d, n))
    return sizes


def cmd_verify(args) -> int:
    if args.trials < 1:
        raise UsageError("--trials must be >= 1")
    summary = verify.run(_seed(args), args.trials, parse_sizes(args.sizes), args.workers)
    print(summary.table())
    return EXIT_OK if summary.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="framescope", description="Spectra and spectral bounds of frame multipliers.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate fixture files")
    g.add_argument("kind", choices=GEN_KINDS)
    g.add_argument("--d", type=int, required=True, help="ambient dimension (window length for 'window')")
    g.add_argument("--n", type=int, default=None, help="number of vectors (default d)")
    g.add_argument("--seed", type=int, default=None)
    g.add_argument("--out", required=True)
    g.set_defaults(func=cmd_gen)

    a = sub.add_parser("analyze", help="spectral report for a multiplier")
    a.add_argument("--phi", required=True)
    a.add_argument("--psi", required=True)
    a.add_argument("--symbol", required=True)
    a.add_argument("--out")
    a.add_argument("--tol", type=float, default=None)
    a.add_argument("--band", type=int, default=None)
    a.add_argument("--seed", type=int, default=None, help="recorded in the report")
    a.add_argument("--format", choices=("json",), default="json")
    a.set_defaults(func=cmd_analyze)

    gr = sub.add_parser("group", help="translation systems on Z_N")
    gr.add_argument("--chi", required=True)
    gr.add_argument("--eta", required=True)
    gr.add_argument("--symbol")
    gr.add_argument("--out")
    gr.set_defaults(func=cmd_group)

    pl = sub.add_parser("plot", help="SVG of eigenvalues and regions")
    pl.add_argument("--report", required=True)
    pl.add_argument("--out", required=True)
    pl.add_argument("--format", choices=("svg",), default="svg")
    pl.set_defaults(func=cmd_plot)

    v = sub.add_parser("verify", help="batch property run")
    v.add_argument("--seed", type=int, default=None)
    v.add_argument("--trials", type=int, default=10)
    v.add_argument("--sizes", default="8x20")
    v.add_argument("--workers", type=int, default=1)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (FramescopeError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
