"""Immutable digraphs and orientations over dense vertex labels 0..n-1.

Adjacency is stored as one integer bitmask per vertex (Python ints double as
arbitrary-width bitsets), which keeps second-neighbourhood computation a
handful of bitwise ORs. All set-valued queries return ascending lists so every
output is deterministic. Instances never mutate after construction and are
safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import InputError

__all__ = [
    "Digraph",
    "Orientation",
    "DigraphBuilder",
    "EmbeddingMap",
    "bits",
    "disjoint_union",
]


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Digraph:
    """Loop-free directed graph; antiparallel arc pairs (2-cycles) allowed."""

    __slots__ = ("n", "_out", "_in")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise InputError(f"vertex count must be >= 0, got {n}")
        out = [0] * n
        inn = [0] * n
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"arc ({u},{v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            out[u] |= 1 << v
            inn[v] |= 1 << u
        self.n = n
        self._out = tuple(out)
        self._in = tuple(inn)

    @classmethod
    def _from_masks(cls, n: int, out: tuple[int, ...], inn: tuple[int, ...]):
        d = object.__new__(cls)
        d.n = n
        d._out = out
        d._in = inn
        if isinstance(d, Orientation):
            d._check_no_two_cycles()
        return d

    @classmethod
    def from_out_masks(cls, n: int, out_masks: Iterable[int]):
        """Build from per-vertex out-neighbour bitmasks (validated)."""
        out = tuple(out_masks)
        if len(out) != n:
            raise InputError(f"expected {n} masks, got {len(out)}")
        full = (1 << n) - 1
        inn = [0] * n
        for v, m in enumerate(out):
            if m & ~full:
                raise InputError(f"mask of vertex {v} references vertices >= {n}")
            if m >> v & 1:
                raise InputError(f"self-loop at vertex {v}")
            for w in bits(m):
                inn[w] |= 1 << v
        return cls._from_masks(n, out, tuple(inn))

    # -- neighbourhood queries ------------------------------------------

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise InputError(f"vertex {v} out of range for n={self.n}")

    def out_mask(self, v: int) -> int:
        """Bitmask of the out-neighbourhood of v."""
        self._check_vertex(v)
        return self._out[v]

    def in_mask(self, v: int) -> int:
        self._check_vertex(v)
        return self._in[v]

    def second_out_mask(self, v: int) -> int:
        """Bitmask of the second out-neighbourhood: reachable in two steps but not fewer."""
        self._check_vertex(v)
        first = self._out[v]
        reach = 0
        for w in bits(first):
            reach |= self._out[w]
        return reach & ~first & ~(1 << v)

    def second_in_mask(self, v: int) -> int:
        self._check_vertex(v)
        first = self._in[v]
        reach = 0
        for w in bits(first):
            reach |= self._in[w]
        return reach & ~first & ~(1 << v)

    def out_neighbourhood(self, v: int) -> list[int]:
        return list(bits(self.out_mask(v)))

    def in_neighbourhood(self, v: int) -> list[int]:
        return list(bits(self.in_mask(v)))

    def second_out_neighbourhood(self, v: int) -> list[int]:
        return list(bits(self.second_out_mask(v)))

    def second_in_neighbourhood(self, v: int) -> list[int]:
        """Mirror of the second-out definition on the converse digraph."""
        return list(bits(self.second_in_mask(v)))

    def out_degree(self, v: int) -> int:
        return self.out_mask(v).bit_count()

    def in_degree(self, v: int) -> int:
        return self.in_mask(v).bit_count()

    def has_arc(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self._out[u] >> v & 1)

    def arcs(self) -> list[tuple[int, int]]:
        """All arcs in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in bits(self._out[u])]

    @property
    def arc_count(self) -> int:
        return sum(m.bit_count() for m in self._out)

    # -- structure ------------------------------------------------------

    def converse(self):
        """The digraph with every arc reversed. Involutive."""
        return type(self)._from_masks(self.n, self._in, self._out)

    def induced_subgraph(self, vertices: Iterable[int]):
        """Induced subgraph on the given vertex set, relabelled 0..|X|-1 in
        ascending original order. Returns the same class as the input."""
        xs = sorted(set(vertices))
        for v in xs:
            self._check_vertex(v)
        index = {v: i for i, v in enumerate(xs)}
        keep = _mask(xs)
        out = []
        for v in xs:
            out.append(_mask(index[w] for w in bits(self._out[v] & keep)))
        inn = [0] * len(xs)
        for i, m in enumerate(out):
            for j in bits(m):
                inn[j] |= 1 << i
        return type(self)._from_masks(len(xs), tuple(out), tuple(inn))

    def is_strongly_connected(self) -> bool:
        if self.n <= 1:
            return True
        return (
            self._reachable_mask(1, self._out) == (1 << self.n) - 1
            and self._reachable_mask(1, self._in) == (1 << self.n) - 1
        )

    def _reachable_mask(self, seed: int, rows: tuple[int, ...]) -> int:
        reach = seed
        frontier = seed
        while frontier:
            new = 0
            for v in bits(frontier):
                new |= rows[v]
            frontier = new & ~reach
            reach |= new
        return reach

    def strongly_connected_components(self) -> list[list[int]]:
        """SCC partition as sorted vertex lists, ordered by smallest member."""
        # Iterative Tarjan; recursion depth would bite on long cycles.
        n = self.n
        index = [-1] * n
        low = [0] * n
        on_stack = [False] * n
        stack: list[int] = []
        comps: list[list[int]] = []
        counter = 0
        for root in range(n):
            if index[root] != -1:
                continue
            work = [(root, iter(bits(self._out[root])))]
            index[root] = low[root] = counter
            counter += 1
            stack.append(root)
            on_stack[root] = True
            while work:
                v, it = work[-1]
                advanced = False
                for w in it:
                    if index[w] == -1:
                        index[w] = low[w] = counter
                        counter += 1
                        stack.append(w)
                        on_stack[w] = True
                        work.append((w, iter(bits(self._out[w]))))
                        advanced = True
                        break
                    if on_stack[w]:
                        low[v] = min(low[v], index[w])
                if advanced:
                    continue
                work.pop()
                if work:
                    pv = work[-1][0]
                    low[pv] = min(low[pv], low[v])
                if low[v] == index[v]:
                    comp = []
                    while True:
                        w = stack.pop()
                        on_stack[w] = False
                        comp.append(w)
                        if w == v:
                            break
                    comps.append(sorted(comp))
        comps.sort(key=lambda c: c[0])
        return comps

    def condensation(self) -> "Digraph":
        """Acyclic digraph of SCCs; vertex i is the i-th component of
        strongly_connected_components()."""
        comps = self.strongly_connected_components()
        comp_of = [0] * self.n
        for i, comp in enumerate(comps):
            for v in comp:
                comp_of[v] = i
        arcs = set()
        for u, v in self.arcs():
            cu, cv = comp_of[u], comp_of[v]
            if cu != cv:
                arcs.add((cu, cv))
        return Digraph(len(comps), sorted(arcs))

    def reachable_closure(self, component_id: int):
        """Induced subgraph on the union of all SCCs reachable from the given
        SCC (inclusive); same class as the input."""
        comps = self.strongly_connected_components()
        if not (0 <= component_id < len(comps)):
            raise InputError(
                f"component id {component_id} out of range ({len(comps)} components)"
            )
        cond = self.condensation()
        reach = cond._reachable_mask(1 << component_id, cond._out)
        vertices: list[int] = []
        for ci in bits(reach):
            vertices.extend(comps[ci])
        return self.induced_subgraph(vertices)

    # -- dunder ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        """Arc-identical comparison (labels matter; use isomorphism otherwise)."""
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self._out == other._out

    def __hash__(self) -> int:
        return hash((self.n, self._out))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, arcs={self.arcs()!r})"


class Orientation(Digraph):
    """Digraph with no 2-cycles: (v,w) present implies (w,v) absent."""

    __slots__ = ()

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = ()):
        super().__init__(n, arcs)
        self._check_no_two_cycles()

    def _check_no_two_cycles(self) -> None:
        for v in range(self.n):
            both = self._out[v] & self._in[v]
            if both:
                w = next(bits(both))
                raise InputError(f"2-cycle between vertices {v} and {w}")

    @classmethod
    def from_digraph(cls, d: Digraph) -> "Orientation":
        """View an existing digraph as an orientation (validates 2-cycles)."""
        return cls._from_masks(d.n, d._out, d._in)


class DigraphBuilder:
    """Mutable arc accumulator; build() / build_orientation() snapshot it."""

    def __init__(self, n: int = 0):
        if n < 0:
            raise InputError(f"vertex count must be >= 0, got {n}")
        self._n = n
        self._arcs: set[tuple[int, int]] = set()

    @property
    def n(self) -> int:
        return self._n

    def add_vertex(self) -> int:
        """Append a fresh isolated vertex and return its label."""
        self._n += 1
        return self._n - 1

    def add_arc(self, u: int, v: int) -> "DigraphBuilder":
        if not (0 <= u < self._n and 0 <= v < self._n):
            raise InputError(f"arc ({u},{v}) out of range for n={self._n}")
        if u == v:
            raise InputError(f"self-loop at vertex {u}")
        self._arcs.add((u, v))
        return self

    def build(self) -> Digraph:
        return Digraph(self._n, sorted(self._arcs))

    def build_orientation(self) -> Orientation:
        return Orientation(self._n, sorted(self._arcs))


def disjoint_union(d1: Digraph, d2: Digraph) -> Digraph:
    """Disjoint union; the second graph's labels are offset by |V(d1)|.

    Returns an Orientation when both inputs are orientations.
    """
    off = d1.n
    arcs = d1.arcs() + [(u + off, v + off) for u, v in d2.arcs()]
    cls = Orientation if isinstance(d1, Orientation) and isinstance(d2, Orientation) else Digraph
    return cls(d1.n + d2.n, arcs)


@dataclass(frozen=True)
class EmbeddingMap:
    """Witness that guest appears as an induced subgraph of host.

    image[i] is the host vertex carrying guest vertex i; validated injective
    and induced at construction.
    """

    guest: Digraph
    host: Digraph
    image: tuple[int, ...]

    def __post_init__(self):
        if len(self.image) != self.guest.n:
            raise InputError(
                f"image has {len(self.image)} entries for {self.guest.n} guest vertices"
            )
        if len(set(self.image)) != len(self.image):
            raise InputError("embedding image is not injective")
        for w in self.image:
            self.host._check_vertex(w)
        for u in range(self.guest.n):
            for v in range(self.guest.n):
                if u == v:
                    continue
                if self.guest.has_arc(u, v) != self.host.has_arc(self.image[u], self.image[v]):
                    raise InputError(
                        f"embedding is not induced at guest arc slot ({u},{v})"
                    )
