"""Parameterized families and tightness-preserving composition operators.

Families: empty graphs, directed cycles, cycle powers, regular circulant
tournaments. Operators: (generalized) lexicographic products, uniform-subset
replacement, source attachments, homomorphism attachments, and the embedding
of an arbitrary orientation into a strongly connected Seymour-tight host.
"""

from __future__ import annotations

from dataclasses import dataclass

from .digraph import DigraphBuilder, EmbeddingMap, Orientation, bits
from .errors import InputError, ValidationError
from .tightness import (
    NeighbourhoodProfile,
    is_seymour_tight,
    seymour_matrix,
    sullivan_matrix,
)

__all__ = [
    "FamilySpec",
    "build_family",
    "family_catalogue",
    "empty_orientation",
    "directed_cycle",
    "cycle_power",
    "circulant_tournament",
    "pendant_triangle",
    "lex_product",
    "gen_lex_product",
    "is_uniform_on",
    "replace_uniform_subset",
    "add_source_by_neighbourhood_copy",
    "hom_source_attach",
    "hom_bijective_attach",
    "embed_in_seymour_tight",
    "deficiency_of_product",
]


@dataclass(frozen=True)
class FamilySpec:
    """One member of the parameterized family catalogue.

    kind: "empty" | "cycle" | "cycle-power" | "tournament"
    """

    kind: str
    order: int
    power: int = 0

    def __post_init__(self):
        k = self.kind
        if k == "empty":
            if self.order < 0:
                raise InputError(f"empty graph needs order >= 0, got {self.order}")
        elif k == "cycle":
            if self.order < 3:
                raise InputError(f"directed cycle needs order >= 3, got {self.order}")
        elif k == "cycle-power":
            if self.power < 1:
                raise InputError(f"cycle power needs power >= 1, got {self.power}")
            if 2 * self.power >= self.order:
                raise InputError(
                    f"cycle power needs 2k < n, got n={self.order}, k={self.power}"
                )
        elif k == "tournament":
            if self.order < 3 or self.order % 2 == 0:
                raise InputError(
                    f"circulant tournament needs odd order >= 3, got {self.order}"
                )
        else:
            raise InputError(f"unknown family kind {k!r}")

    def build(self) -> Orientation:
        if self.kind == "empty":
            return empty_orientation(self.order)
        if self.kind == "cycle":
            return directed_cycle(self.order)
        if self.kind == "cycle-power":
            return cycle_power(self.order, self.power)
        return circulant_tournament(self.order)

    def label(self) -> str:
        if self.kind == "empty":
            return f"E{self.order}"
        if self.kind == "cycle":
            return f"C{self.order}"
        if self.kind == "cycle-power":
            return f"C{self.order}^{self.power}"
        return f"T{self.order}"

    def cli_tokens(self) -> list[str]:
        """Arguments reproducing this spec through the `build` subcommand."""
        if self.kind == "cycle-power":
            return [self.kind, str(self.order), str(self.power)]
        return [self.kind, str(self.order)]


def build_family(spec: FamilySpec) -> Orientation:
    return spec.build()


def family_catalogue(max_order: int) -> list[FamilySpec]:
    """All family specs with at most max_order vertices (test corpora)."""
    out: list[FamilySpec] = []
    for m in range(1, max_order + 1):
        out.append(FamilySpec("empty", m))
    for n in range(3, max_order + 1):
        out.append(FamilySpec("cycle", n))
        for k in range(1, (n - 1) // 2 + 1):
            out.append(FamilySpec("cycle-power", n, k))
    for m in range(3, max_order + 1, 2):
        out.append(FamilySpec("tournament", m))
    return out


def empty_orientation(m: int) -> Orientation:
    return Orientation(m)


def directed_cycle(n: int) -> Orientation:
    if n < 3:
        raise InputError(f"directed cycle needs order >= 3, got {n}")
    return Orientation(n, [(i, (i + 1) % n) for i in range(n)])


def cycle_power(n: int, k: int) -> Orientation:
    """Arcs i -> i+j mod n for j in 1..k; the Cayley digraph of Z_n on {1..k}."""
    if k < 1 or 2 * k >= n:
        raise InputError(f"cycle power needs 1 <= k and 2k < n, got n={n}, k={k}")
    return Orientation(n, [(i, (i + j) % n) for i in range(n) for j in range(1, k + 1)])


def circulant_tournament(m: int) -> Orientation:
    """Regular tournament on odd m: arcs i -> i+j mod m for j in 1..(m-1)/2."""
    if m < 3 or m % 2 == 0:
        raise InputError(f"circulant tournament needs odd order >= 3, got {m}")
    k = (m - 1) // 2
    return Orientation(m, [(i, (i + j) % m) for i in range(m) for j in range(1, k + 1)])


def pendant_triangle() -> Orientation:
    """Directed triangle 0->1->2->0 plus the arc 3->0.

    Seymour-tight, but its converse is not: vertex 0 of the converse has two
    in-neighbours and a single second in-neighbour.
    """
    return Orientation(4, [(0, 1), (1, 2), (2, 0), (3, 0)])


# -- products ------------------------------------------------------------


def lex_product(d: Orientation, g: Orientation) -> Orientation:
    """Lexicographic product d[g]: blow each vertex of d into a copy of g.

    Vertex (v,i) gets label v*|V(g)| + i. Arc (v,i) -> (w,j) iff v -> w in d,
    or v = w and i -> j in g.
    """
    return gen_lex_product(d, [g] * d.n)


def gen_lex_product(
    outer: Orientation,
    parts: list[Orientation],
    check: str | None = None,
) -> Orientation:
    """Generalized lexicographic product outer[parts[0], ..., parts[n-1]].

    check="seymour" (or "sullivan") validates the size vector: it must be
    constant or lie in the kernel of the outer sign matrix S (or R), the
    precondition under which tight parts yield a tight product.
    """
    if len(parts) != outer.n:
        raise InputError(f"need {outer.n} parts, got {len(parts)}")
    sizes = [p.n for p in parts]
    if check is not None:
        _check_size_vector(outer, sizes, check)

    offsets = [0] * (outer.n + 1)
    for v in range(outer.n):
        offsets[v + 1] = offsets[v] + sizes[v]
    total = offsets[outer.n]

    block_mask = [((1 << sizes[v]) - 1) << offsets[v] for v in range(outer.n)]
    out = [0] * total
    for v in range(outer.n):
        between = 0
        for w in bits(outer.out_mask(v)):
            between |= block_mask[w]
        part = parts[v]
        base = offsets[v]
        for i in range(sizes[v]):
            out[base + i] = between | (part.out_mask(i) << base)
    return Orientation.from_out_masks(total, out)


def _check_size_vector(outer: Orientation, sizes: list[int], check: str) -> None:
    if check not in ("seymour", "sullivan"):
        raise InputError(f"check must be 'seymour' or 'sullivan', got {check!r}")
    if len(set(sizes)) <= 1:
        return  # constant size vectors always qualify
    mat = seymour_matrix(outer) if check == "seymour" else sullivan_matrix(outer)
    image = mat.matvec(sizes)
    for row, value in enumerate(image):
        if value != 0:
            raise ValidationError(
                f"size vector {sizes} is neither constant nor in the kernel of "
                f"the {check} matrix: row {row} gives {value}"
            )


def deficiency_of_product(
    profile_d: NeighbourhoodProfile,
    size_g: int,
    profile_g: NeighbourhoodProfile,
) -> list[int]:
    """Seymour deficiencies of d[g] without building the product.

    Row-major: entry v*size_g + i equals size_g * def_d(v) + def_g(i). This is
    the arithmetic that makes products of counterexamples with Seymour
    orientations counterexamples again.
    """
    if size_g != profile_g.n:
        raise InputError(f"size_g={size_g} but profile_g has {profile_g.n} vertices")
    defs_d = profile_d.seymour_deficiencies()
    defs_g = profile_g.seymour_deficiencies()
    return [size_g * dv + di for dv in defs_d for di in defs_g]


# -- uniform replacement --------------------------------------------------


def is_uniform_on(d: Orientation, v: int, x) -> bool:
    """True iff v relates to X in one of the three uniform ways:
    all of X in-neighbours, all of X out-neighbours, or no adjacency at all."""
    xs = set(x)
    if v in xs:
        raise InputError(f"vertex {v} lies in X")
    if not xs:
        return True
    xmask = 0
    for w in xs:
        d._check_vertex(w)
        xmask |= 1 << w
    inn = d.in_mask(v) & xmask
    out = d.out_mask(v) & xmask
    return inn == xmask or out == xmask or (inn | out) == 0


def replace_uniform_subset(
    d: Orientation,
    x,
    h: Orientation,
    require_tight: bool = False,
) -> Orientation:
    """Replace the induced orientation on X by h (ascending-order matching).

    Every vertex outside X must be uniform on X. With require_tight=True the
    tight-preserving contract is enforced: both d|_X and h must be
    Seymour-tight, which guarantees a tight result when d is tight.
    """
    xs = sorted(set(x))
    for w in xs:
        d._check_vertex(w)
    if h.n != len(xs):
        raise InputError(f"|V(h)| = {h.n} but |X| = {len(xs)}")
    for v in range(d.n):
        if v in xs:
            continue
        if not is_uniform_on(d, v, xs):
            raise ValidationError(f"vertex {v} is not uniform on X")
    if require_tight:
        induced = d.induced_subgraph(xs)
        if not is_seymour_tight(induced):
            raise ValidationError("induced orientation on X is not Seymour-tight")
        if not is_seymour_tight(h):
            raise ValidationError("replacement orientation is not Seymour-tight")

    in_x = set(xs)
    arcs = [(u, v) for u, v in d.arcs() if u not in in_x or v not in in_x]
    arcs.extend((xs[i], xs[j]) for i, j in h.arcs())
    return Orientation(d.n, arcs)


# -- source attachments ----------------------------------------------------


def add_source_by_neighbourhood_copy(d: Orientation, g: Orientation, x) -> Orientation:
    """Attach d as a source component: every vertex of d gets arcs to X in g.

    Requires |N1(X) \\ X| = |X|, the fresh second-neighbourhood content each
    d-vertex gains; taking X = N1(x) for any x of a tight g always qualifies.
    """
    xs = sorted(set(x))
    xmask = 0
    for w in xs:
        g._check_vertex(w)
        xmask |= 1 << w
    reach = 0
    for w in xs:
        reach |= g.out_mask(w)
    fresh = (reach & ~xmask).bit_count()
    if fresh != len(xs):
        raise ValidationError(
            f"|N1(X) \\ X| = {fresh} but |X| = {len(xs)}; attachment would not stay tight"
        )
    off = d.n
    arcs = d.arcs()
    arcs.extend((u + off, v + off) for u, v in g.arcs())
    arcs.extend((u, w + off) for u in range(d.n) for w in xs)
    return Orientation(d.n + g.n, arcs)


def _check_homomorphism(d: Orientation, g: Orientation, f) -> list[int]:
    fm = list(f)
    if len(fm) != d.n:
        raise InputError(f"map has {len(fm)} entries for {d.n} vertices")
    for w in fm:
        g._check_vertex(w)
    for u, v in d.arcs():
        if not g.has_arc(fm[u], fm[v]):
            raise ValidationError(
                f"map is not a homomorphism: arc ({u},{v}) lands on non-arc "
                f"({fm[u]},{fm[v]})"
            )
    return fm


def hom_source_attach(d: Orientation, g: Orientation, f) -> Orientation:
    """d joins g as a source part: each d-vertex also sees N1(f(d)) in g."""
    fm = _check_homomorphism(d, g, f)
    off = d.n
    arcs = d.arcs()
    arcs.extend((u + off, v + off) for u, v in g.arcs())
    arcs.extend((u, w + off) for u in range(d.n) for w in g.out_neighbourhood(fm[u]))
    return Orientation(d.n + g.n, arcs)


def hom_bijective_attach(d: Orientation, g: Orientation, f) -> Orientation:
    """Bijective variant: g-vertices point back at the preimages of their
    out-neighbours, doubling first and second neighbourhoods on the g side."""
    fm = _check_homomorphism(d, g, f)
    if sorted(fm) != list(range(g.n)):
        raise InputError("map must be a bijection onto V(g)")
    pre = [0] * g.n
    for u, w in enumerate(fm):
        pre[w] = u
    off = d.n
    arcs = d.arcs()
    arcs.extend((u + off, v + off) for u, v in g.arcs())
    arcs.extend((u + off, pre[w]) for u in range(g.n) for w in g.out_neighbourhood(u))
    return Orientation(d.n + g.n, arcs)


# -- embedding ----------------------------------------------------------


def embed_in_seymour_tight(d: Orientation) -> EmbeddingMap:
    """Embed d as an induced subgraph of a strongly connected Seymour-tight host.

    Construction: add |V(d)| common sinks fed by every original vertex and one
    private sink per vertex; each private sink is then absorbed into a fresh
    triangle-of-independent-sets gadget sized by the vertex's deficiency, and
    the whole graph is wrapped in a lexicographic product with a directed
    triangle to force strong connectivity.
    """
    m = d.n
    b = DigraphBuilder(m)
    for u, v in d.arcs():
        b.add_arc(u, v)
    for _ in range(m):
        c = b.add_vertex()
        for v in range(m):
            b.add_arc(v, c)
    private = []
    for v in range(m):
        s = b.add_vertex()
        b.add_arc(v, s)
        private.append(s)

    augmented = b.build_orientation()
    deficiency = [
        augmented.out_mask(v).bit_count() - augmented.second_out_mask(v).bit_count()
        for v in range(m)
    ]

    for v in range(m):
        k = deficiency[v]
        if k == 0:
            continue  # the private sink stays its own tight component
        gadget = lex_product(directed_cycle(3), empty_orientation(k))
        local = [private[v]] + [b.add_vertex() for _ in range(gadget.n - 1)]
        for gu, gv in gadget.arcs():
            b.add_arc(local[gu], local[gv])

    core = b.build_orientation()
    host = lex_product(directed_cycle(3), core)
    return EmbeddingMap(guest=d, host=host, image=tuple(range(m)))
