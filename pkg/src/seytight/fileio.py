"""Edge-list text and DOT serialization.

Edge-list format: line 1 is the vertex count, then one "u v" line per arc,
0-indexed. Writers sort arcs lexicographically; readers accept any order and
reject duplicates, loops and out-of-range endpoints. Both writers are
byte-deterministic.
"""

from __future__ import annotations

from .digraph import Digraph, Orientation
from .errors import InputError

__all__ = ["to_edge_text", "parse_edge_text", "to_dot", "read_edge_file", "write_edge_file"]


def to_edge_text(d: Digraph) -> str:
    lines = [str(d.n)]
    lines.extend(f"{u} {v}" for u, v in d.arcs())
    return "\n".join(lines) + "\n"


def parse_edge_text(text: str, as_orientation: bool = False) -> Digraph:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise InputError("empty edge-list input")
    try:
        n = int(lines[0])
    except ValueError:
        raise InputError(f"first line must be the vertex count, got {lines[0]!r}") from None
    seen: set[tuple[int, int]] = set()
    arcs: list[tuple[int, int]] = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise InputError(f"malformed arc line {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise InputError(f"malformed arc line {ln!r}") from None
        if (u, v) in seen:
            raise InputError(f"duplicate arc ({u},{v})")
        seen.add((u, v))
        arcs.append((u, v))
    cls = Orientation if as_orientation else Digraph
    return cls(n, arcs)


def to_dot(d: Digraph) -> str:
    # Node statements first so isolated vertices survive rendering.
    lines = ["digraph {"]
    lines.extend(f"  {v};" for v in range(d.n))
    lines.extend(f"  {u} -> {v};" for u, v in d.arcs())
    lines.append("}")
    return "\n".join(lines) + "\n"


def read_edge_file(path, as_orientation: bool = False) -> Digraph:
    with open(path, "r", encoding="ascii") as fh:
        return parse_edge_text(fh.read(), as_orientation=as_orientation)


def write_edge_file(path, d: Digraph) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(to_edge_text(d))
