"""Digraph isomorphism by invariant refinement plus backtracking.

Intended for small graphs (the classification workloads stay below ~16
vertices). Larger inputs are accepted but may be slow; there is deliberately
no nauty-class canonical labelling here.
"""

from __future__ import annotations

from itertools import permutations

from .digraph import Digraph, bits

__all__ = ["find_isomorphism", "is_isomorphic", "canonical_arcs"]


def _vertex_colours(d: Digraph) -> list[int]:
    """Stable 1-WL-style colour refinement over (out, in) neighbourhoods."""
    colours = [
        (
            d.out_degree(v),
            d.in_degree(v),
            d.second_out_mask(v).bit_count(),
            d.second_in_mask(v).bit_count(),
        )
        for v in range(d.n)
    ]
    ids = _normalise(colours)
    for _ in range(d.n):
        refined = [
            (
                ids[v],
                tuple(sorted(ids[w] for w in bits(d.out_mask(v)))),
                tuple(sorted(ids[w] for w in bits(d.in_mask(v)))),
            )
            for v in range(d.n)
        ]
        new_ids = _normalise(refined)
        if new_ids == ids:
            break
        ids = new_ids
    return ids


def _normalise(keys: list) -> list[int]:
    order = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [order[k] for k in keys]


def find_isomorphism(d1: Digraph, d2: Digraph) -> list[int] | None:
    """Return a vertex bijection mapping arcs of d1 onto arcs of d2, or None.

    witness[u] is the d2-vertex assigned to d1-vertex u.
    """
    if d1.n != d2.n or d1.arc_count != d2.arc_count:
        return None
    n = d1.n
    if n == 0:
        return []
    c1 = _vertex_colours(d1)
    c2 = _vertex_colours(d2)
    if sorted(c1) != sorted(c2):
        return None

    by_colour: dict[int, list[int]] = {}
    for v in range(n):
        by_colour.setdefault(c2[v], []).append(v)

    # Assign guest vertices rarest colour class first, then by connectivity
    # to already-assigned vertices, so adjacency constraints bite early.
    class_size = {c: len(vs) for c, vs in by_colour.items()}
    order: list[int] = []
    placed = 0
    remaining = set(range(n))
    adj = [d1.out_mask(v) | d1.in_mask(v) for v in range(n)]
    while remaining:
        placed_mask = 0
        for v in order:
            placed_mask |= 1 << v
        best = min(
            remaining,
            key=lambda v: (-(adj[v] & placed_mask).bit_count(), class_size[c1[v]], v),
        )
        order.append(best)
        remaining.remove(best)
        placed += 1

    mapping = [-1] * n
    used = [False] * n

    def extend(pos: int) -> bool:
        if pos == n:
            return True
        u = order[pos]
        for w in by_colour[c1[u]]:
            if used[w]:
                continue
            ok = True
            for prev in order[:pos]:
                pw = mapping[prev]
                if d1.has_arc(u, prev) != d2.has_arc(w, pw):
                    ok = False
                    break
                if d1.has_arc(prev, u) != d2.has_arc(pw, w):
                    ok = False
                    break
            if ok:
                mapping[u] = w
                used[w] = True
                if extend(pos + 1):
                    return True
                mapping[u] = -1
                used[w] = False
        return False

    if extend(0):
        return mapping
    return None


def is_isomorphic(d1: Digraph, d2: Digraph) -> bool:
    return find_isomorphism(d1, d2) is not None


def canonical_arcs(d: Digraph) -> tuple[tuple[int, int], ...]:
    """Lexicographically least arc list over all vertex permutations.

    Exhaustive over n! relabellings; affordable for n <= ~9, which covers the
    deduplication workloads. Prefer find_isomorphism for mere comparisons.
    """
    best: tuple[tuple[int, int], ...] | None = None
    arcs = d.arcs()
    for perm in permutations(range(d.n)):
        candidate = tuple(sorted((perm[u], perm[v]) for u, v in arcs))
        if best is None or candidate < best:
            best = candidate
    return best if best is not None else ()
