"""JSON file formats for frame systems, symbols and cyclic windows.

Complex numbers are written as ``[re, im]`` pairs::

    frame:   {"label": str, "dim": d, "vectors": [[[re, im], ...d], ...n]}
    symbol:  {"values": [[re, im], ...]}
    window:  {"N": N, "samples": [[re, im], ...N]}
"""
from __future__ import annotations

import hashlib
import json
import math
from pathlib import Path

import numpy as np

from .errors import FramescopeError
from .frames import FrameSystem
from .groups import CyclicWindow
from .multipliers import Symbol


class FormatError(FramescopeError, ValueError):
    """Malformed input file; the message names the offending line or field."""


def _complex(value, where):
    if (
        not isinstance(value, (list, tuple))
        or len(value) != 2
        or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in value)
    ):
        raise FormatError(f"{where}: expected [re, im] pair of numbers, got {value!r}")
    re, im = float(value[0]), float(value[1])
    if not (math.isfinite(re) and math.isfinite(im)):
        raise FormatError(f"{where}: non-finite value {value!r}")
    return complex(re, im)


def _pairs(z) -> list:
    return [[float(v.real), float(v.imag)] for v in np.asarray(z, dtype=complex).ravel()]


def _complex_list(items, where, expected=None):
    if not isinstance(items, list):
        raise FormatError(f"{where}: expected a list, got {type(items).__name__}")
    if expected is not None and len(items) != expected:
        raise FormatError(f"{where}: expected {expected} entries, got {len(items)}")
    return np.array([_complex(v, f"{where}[{i}]") for i, v in enumerate(items)], dtype=complex)


def _field(data, key, where):
    if not isinstance(data, dict):
        raise FormatError(f"{where}: expected a JSON object")
    if key not in data:
        raise FormatError(f"{where}: missing field {key!r}")
    return data[key]


def _count(value, where):
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise FormatError(f"{where}: expected a positive integer, got {value!r}")
    return value


def loads(text: str, source="<string>"):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{source}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc


def read_json(path):
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"{path}: {exc.strerror}") from exc
    return loads(text, str(path))


def dumps(data) -> str:
    return json.dumps(data, indent=2, sort_keys=False, allow_nan=False) + "\n"


def write_json(path, data):
    Path(path).write_text(dumps(data), encoding="utf-8")


def file_hash(path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


# -- frames ------------------------------------------------------------------

def frame_to_dict(phi: FrameSystem) -> dict:
    return {"label": phi.label, "dim": phi.dim, "vectors": [_pairs(v) for v in phi.vectors]}


def frame_from_dict(data, source="frame") -> FrameSystem:
    dim = _count(_field(data, "dim", source), f"{source}.dim")
    label = data.get("label", "")
    if not isinstance(label, str):
        raise FormatError(f"{source}.label: expected text")
    vectors = _field(data, "vectors", source)
    if not isinstance(vectors, list) or not vectors:
        raise FormatError(f"{source}.vectors: expected a nonempty list")
    rows = [_complex_list(v, f"{source}.vectors[{k}]", dim) for k, v in enumerate(vectors)]
    return FrameSystem(np.array(rows), label)


def read_frame(path) -> FrameSystem:
    return frame_from_dict(read_json(path), str(path))


def write_frame(path, phi: FrameSystem):
    write_json(path, frame_to_dict(phi))


# -- symbols -----------------------------------------------------------------

def symbol_to_dict(m: Symbol) -> dict:
    return {"values": _pairs(m.values)}


def symbol_from_dict(data, source="symbol") -> Symbol:
    values = _complex_list(_field(data, "values", source), f"{source}.values")
    if values.size == 0:
        raise FormatError(f"{source}.values: expected a nonempty list")
    return Symbol(values)


def read_symbol(path) -> Symbol:
    return symbol_from_dict(read_json(path), str(path))


def write_symbol(path, m: Symbol):
    write_json(path, symbol_to_dict(m))


# -- windows -----------------------------------------------------------------

def window_to_dict(chi: CyclicWindow) -> dict:
    return {"N": chi.N, "samples": _pairs(chi.samples)}


def window_from_dict(data, source="window") -> CyclicWindow:
    n = _count(_field(data, "N", source), f"{source}.N")
    return CyclicWindow(_complex_list(_field(data, "samples", source), f"{source}.samples", n))


def read_window(path) -> CyclicWindow:
    return window_from_dict(read_json(path), str(path))


def write_window(path, chi: CyclicWindow):
    write_json(path, window_to_dict(chi))


def complex_pairs(z) -> list:
    return _pairs(z)


def from_pairs(items, where="values") -> np.ndarray:
    return _complex_list(items, where)
