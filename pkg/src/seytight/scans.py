"""Scan kernel backend selection.

The compiled kernels (seytight._fastscan, Cython) are used when the extension
built; otherwise the pure-Python twin takes over with identical semantics.
Benchmarks and parity tests can load both through available_backends().
"""

from __future__ import annotations

from . import _scan_py

PRED_SEYMOUR_TIGHT = _scan_py.PRED_SEYMOUR_TIGHT
PRED_COUNTEREXAMPLE = _scan_py.PRED_COUNTEREXAMPLE
PRED_SULLIVAN_TIGHT = _scan_py.PRED_SULLIVAN_TIGHT
PRED_EULERIAN_TIGHT = _scan_py.PRED_EULERIAN_TIGHT

try:
    from . import _fastscan as _backend

    BACKEND = "compiled"
except ImportError:  # extension not built on this install
    _backend = _scan_py
    BACKEND = "pure"

scan_predicate = _backend.scan_predicate
scan_degree_census = _backend.scan_degree_census


def available_backends() -> dict:
    """Name -> module for every importable backend."""
    out = {"pure": _scan_py}
    try:
        from . import _fastscan

        out["compiled"] = _fastscan
    except ImportError:
        pass
    return out


def arcs_from_bytes(blob: bytes) -> list[tuple[int, int]]:
    """Decode the kernels' flat arc encoding."""
    return [(blob[i], blob[i + 1]) for i in range(0, len(blob), 2)]
