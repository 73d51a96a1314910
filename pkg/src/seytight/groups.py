"""Finite abelian groups, Cayley digraphs, and the sumset route to tightness.

A valid connection set S (no identity, S disjoint from -S) is Seymour exactly
when |S u (S+S)| = 2|S|; Kemperman's bound makes every such Cayley orientation
tight. classify_abelian_seymour decomposes each one into lexicographic
products of empty graphs, cycle powers and regular tournaments, following the
subgroup/quotient recursion of the classification proof, and verifies the
result by reconstruction and isomorphism before returning it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iter_product

from .constructions import cycle_power, empty_orientation, lex_product
from .digraph import Orientation
from .errors import InputError, SeytightError, SizeCapError, TheoremViolationError
from .isomorphism import find_isomorphism

__all__ = [
    "AbelianGroup",
    "ConnectionSet",
    "all_abelian_groups",
    "cayley_digraph",
    "seymour_set_criterion",
    "enumerate_connection_sets",
    "enumerate_seymour_connection_sets",
    "automorphisms",
    "subgroups",
    "cosets",
    "quotient",
    "subgroup_presentation",
    "EmptyLeaf",
    "CyclePowerLeaf",
    "TournamentLeaf",
    "LexNode",
    "LexDecomposition",
    "classify_abelian_seymour",
]

DEFAULT_ORDER_CAP = 24


@dataclass(frozen=True)
class AbelianGroup:
    """Direct product of cyclic groups; elements are tuples mod the factors.

    The empty factor list is the trivial group. Vertex order for Cayley
    digraphs is the lexicographic order of element tuples.
    """

    factors: tuple[int, ...]

    def __post_init__(self):
        for f in self.factors:
            if f < 2:
                raise InputError(f"factors must be >= 2, got {f}")

    @property
    def order(self) -> int:
        n = 1
        for f in self.factors:
            n *= f
        return n

    @property
    def zero(self) -> tuple[int, ...]:
        return (0,) * len(self.factors)

    def elements(self) -> list[tuple[int, ...]]:
        return list(iter_product(*(range(f) for f in self.factors)))

    def contains(self, a) -> bool:
        return (
            isinstance(a, tuple)
            and len(a) == len(self.factors)
            and all(0 <= x < f for x, f in zip(a, self.factors))
        )

    def add(self, a, b) -> tuple[int, ...]:
        return tuple((x + y) % f for x, y, f in zip(a, b, self.factors))

    def neg(self, a) -> tuple[int, ...]:
        return tuple((-x) % f for x, f in zip(a, self.factors))

    def order_of(self, a) -> int:
        k = 1
        cur = a
        while cur != self.zero:
            cur = self.add(cur, a)
            k += 1
        return k

    def element_index(self, a) -> int:
        idx = 0
        for x, f in zip(a, self.factors):
            idx = idx * f + x
        return idx

    def __str__(self) -> str:
        if not self.factors:
            return "Z1"
        return "x".join(f"Z{f}" for f in self.factors)


def all_abelian_groups(order: int) -> list[AbelianGroup]:
    """One group per isomorphism type of the given order (invariant factors)."""
    if order < 1:
        raise InputError(f"order must be >= 1, got {order}")
    if order == 1:
        return [AbelianGroup(())]
    chains: list[tuple[int, ...]] = []

    def extend(prefix: list[int], remaining: int) -> None:
        # next factor must be >= 2, divide `remaining`, and be divisible by prefix[-1]
        for d in range(2, remaining + 1):
            if remaining % d:
                continue
            if prefix and d % prefix[-1]:
                continue
            if remaining == d:
                chains.append(tuple(prefix + [d]))
            else:
                extend(prefix + [d], remaining // d)

    extend([], order)
    return [AbelianGroup(c) for c in sorted(chains)]


@dataclass(frozen=True)
class ConnectionSet:
    """Validated arc-generating set: no identity and no inverse pairs."""

    group: AbelianGroup
    elements: frozenset

    def __post_init__(self):
        for s in self.elements:
            if not self.group.contains(s):
                raise InputError(f"{s} is not an element of {self.group}")
            if s == self.group.zero:
                raise InputError("identity element in connection set")
        for s in self.elements:
            if self.group.neg(s) in self.elements:
                raise InputError(
                    f"connection set contains an inverse pair: {s} and {self.group.neg(s)}"
                )

    def __iter__(self):
        return iter(sorted(self.elements))

    def __len__(self):
        return len(self.elements)


def _as_set(group: AbelianGroup, s) -> frozenset:
    if isinstance(s, ConnectionSet):
        return s.elements
    return ConnectionSet(group, frozenset(s)).elements


def cayley_digraph(group: AbelianGroup, s) -> Orientation:
    """Vertices are group elements in lexicographic order; arcs g -> g+s."""
    elems = group.elements()
    index = {e: i for i, e in enumerate(elems)}
    conn = _as_set(group, s)
    arcs = [(index[g], index[group.add(g, x)]) for g in elems for x in sorted(conn)]
    return Orientation(group.order, arcs)


def _sumset(group: AbelianGroup, a, b) -> frozenset:
    return frozenset(group.add(x, y) for x in a for y in b)


def seymour_set_criterion(group: AbelianGroup, s) -> bool:
    """|S u (S+S)| = 2|S|; equivalent to the Cayley digraph being Seymour-tight."""
    conn = _as_set(group, s)
    return len(conn | _sumset(group, conn, conn)) == 2 * len(conn)


def enumerate_connection_sets(group: AbelianGroup):
    """All valid connection sets: pick at most one of each inverse pair
    {x, -x}; self-inverse elements can never appear."""
    pairs = []
    seen = set()
    for x in group.elements():
        if x == group.zero or x in seen:
            continue
        y = group.neg(x)
        seen.add(x)
        seen.add(y)
        if x != y:
            pairs.append((x, y))
    for choice in iter_product((None, 0, 1), repeat=len(pairs)):
        yield frozenset(
            pair[c] for pair, c in zip(pairs, choice) if c is not None
        )


def _check_cap(group: AbelianGroup, cap: int) -> None:
    if group.order > cap:
        raise SizeCapError(
            f"group order {group.order} exceeds the cap {cap} for exhaustive work"
        )


def enumerate_seymour_connection_sets(
    group: AbelianGroup,
    up_to_auto: bool = False,
    cap: int = DEFAULT_ORDER_CAP,
) -> list[ConnectionSet]:
    """All connection sets passing the Seymour criterion, optionally one
    representative per automorphism orbit."""
    _check_cap(group, cap)
    hits = [s for s in enumerate_connection_sets(group) if seymour_set_criterion(group, s)]
    if up_to_auto:
        autos = automorphisms(group)
        reps: dict[tuple, frozenset] = {}
        for s in hits:
            canon = min(tuple(sorted(frozenset(a[x] for x in s))) for a in autos)
            reps.setdefault(canon, s)
        hits = list(reps.values())
    hits.sort(key=lambda s: (len(s), sorted(s)))
    return [ConnectionSet(group, s) for s in hits]


def automorphisms(group: AbelianGroup) -> list[dict]:
    """Brute-force group automorphisms as element maps.

    A candidate is fixed by the images of the standard generators; it must
    respect the factor relations (ord(image) divides the factor) and generate
    injectively, which the span sizes certify level by level.
    """
    elems = group.elements()
    if not group.factors:
        return [{group.zero: group.zero}]
    factors = group.factors
    candidates_per_gen = [
        [a for a in elems if f % group.order_of(a) == 0] for f in factors
    ]
    multiples = {}
    for a in elems:
        tab = [group.zero]
        cur = group.zero
        for _ in range(max(factors) - 1):
            cur = group.add(cur, a)
            tab.append(cur)
        multiples[a] = tab

    out = []
    chosen: list = []

    def descend(level: int, span: frozenset, domain_size: int) -> None:
        if level == len(factors):
            mapping = {}
            tabs = [multiples[g] for g in chosen]
            for e in elems:
                img = group.zero
                for coord, tab in zip(e, tabs):
                    img = group.add(img, tab[coord])
                mapping[e] = img
            out.append(mapping)
            return
        want = domain_size * factors[level]
        for g in candidates_per_gen[level]:
            bigger = _closure(group, set(span) | {g})
            if len(bigger) != want:
                continue  # restriction to the first generators not injective
            chosen.append(g)
            descend(level + 1, bigger, want)
            chosen.pop()

    descend(0, frozenset({group.zero}), 1)
    return out


# -- subgroup machinery ------------------------------------------------------


def _closure(group: AbelianGroup, gens) -> frozenset:
    out = {group.zero}
    frontier = [group.zero]
    gens = list(gens)
    while frontier:
        cur = frontier.pop()
        for g in gens:
            nxt = group.add(cur, g)
            if nxt not in out:
                out.add(nxt)
                frontier.append(nxt)
    return frozenset(out)


def subgroups(group: AbelianGroup, cap: int = DEFAULT_ORDER_CAP) -> list[frozenset]:
    """All subgroups as element sets, sorted by (order, element list)."""
    _check_cap(group, cap)
    found = {frozenset({group.zero})}
    frontier = [frozenset({group.zero})]
    while frontier:
        h = frontier.pop()
        for g in group.elements():
            if g in h:
                continue
            bigger = _closure(group, set(h) | {g})
            if bigger not in found:
                found.add(bigger)
                frontier.append(bigger)
    return sorted(found, key=lambda h: (len(h), sorted(h)))


def cosets(group: AbelianGroup, f) -> list[list[tuple]]:
    """Partition of the group into F-cosets, each sorted, ordered by min rep."""
    fset = frozenset(f)
    _require_subgroup(group, fset)
    seen = set()
    out = []
    for e in group.elements():
        if e in seen:
            continue
        coset = sorted(group.add(e, x) for x in fset)
        seen.update(coset)
        out.append(coset)
    return out


def _require_subgroup(group: AbelianGroup, fset: frozenset) -> None:
    if group.zero not in fset:
        raise InputError("subgroup must contain the identity")
    for a in fset:
        if not group.contains(a):
            raise InputError(f"{a} is not an element of {group}")
        if group.neg(a) not in fset:
            raise InputError(f"set is not closed under negation at {a}")
    for a in fset:
        for b in fset:
            if group.add(a, b) not in fset:
                raise InputError(f"set is not closed under addition at {a}+{b}")


def quotient(group: AbelianGroup, f) -> tuple[AbelianGroup, dict]:
    """Quotient presentation plus the explicit surjection on elements."""
    fset = frozenset(f)
    _require_subgroup(group, fset)
    cg = _CGroup.from_abelian(group).quotient(fset)
    presented, iso = _present(cg)
    projection = {}
    rep_of = {}
    for e in group.elements():
        coset = min(group.add(e, x) for x in fset)
        rep_of[e] = coset
    for e in group.elements():
        projection[e] = iso[rep_of[e]]
    return presented, projection


def subgroup_presentation(group: AbelianGroup, f) -> tuple[AbelianGroup, dict]:
    """Invariant-factor presentation of a subgroup plus the element bijection."""
    fset = frozenset(f)
    _require_subgroup(group, fset)
    cg = _CGroup.from_abelian(group).restrict(fset)
    presented, iso = _present(cg)
    return presented, dict(iso)


class _CGroup:
    """Concrete finite abelian group: a sorted element tuple plus operations.

    Subgroups and quotients stay in ambient coordinates (quotient elements are
    the lexicographically least coset representatives), so the classification
    recursion never needs to re-present anything.
    """

    __slots__ = ("elements", "add", "neg", "zero")

    def __init__(self, elements, add, neg, zero):
        self.elements = tuple(sorted(elements))
        self.add = add
        self.neg = neg
        self.zero = zero

    @classmethod
    def from_abelian(cls, group: AbelianGroup) -> "_CGroup":
        return cls(group.elements(), group.add, group.neg, group.zero)

    @property
    def order(self) -> int:
        return len(self.elements)

    def order_of(self, a) -> int:
        k = 1
        cur = a
        while cur != self.zero:
            cur = self.add(cur, a)
            k += 1
        return k

    def generated(self, gens) -> frozenset:
        out = {self.zero}
        frontier = [self.zero]
        gens = list(gens)
        while frontier:
            cur = frontier.pop()
            for g in gens:
                nxt = self.add(cur, g)
                if nxt not in out:
                    out.add(nxt)
                    frontier.append(nxt)
        return frozenset(out)

    def restrict(self, subset: frozenset) -> "_CGroup":
        return _CGroup(subset, self.add, self.neg, self.zero)

    def quotient(self, fset: frozenset) -> "_CGroup":
        rep = {}
        for e in self.elements:
            rep[e] = min(self.add(e, x) for x in fset)
        reps = sorted(set(rep.values()))
        add = self.add
        neg = self.neg

        def qadd(a, b, _rep=rep, _add=add):
            return _rep[_add(a, b)]

        def qneg(a, _rep=rep, _neg=neg):
            return _rep[_neg(a)]

        return _CGroup(reps, qadd, qneg, rep[self.zero])

    def projection(self, fset: frozenset) -> dict:
        return {e: min(self.add(e, x) for x in fset) for e in self.elements}

    def proper_subgroups(self) -> list[frozenset]:
        """Proper subgroups of order >= 2, ascending (order, sorted elements)."""
        found = {frozenset({self.zero})}
        frontier = [frozenset({self.zero})]
        while frontier:
            h = frontier.pop()
            for g in self.elements:
                if g in h:
                    continue
                bigger = self.generated(set(h) | {g})
                if bigger not in found:
                    found.add(bigger)
                    frontier.append(bigger)
        keep = [h for h in found if 2 <= len(h) < self.order]
        keep.sort(key=lambda h: (len(h), sorted(h)))
        return keep

    def cayley_orientation(self, s) -> Orientation:
        index = {e: i for i, e in enumerate(self.elements)}
        arcs = [(index[g], index[self.add(g, x)]) for g in self.elements for x in sorted(s)]
        return Orientation(self.order, arcs)


def _present(cg: _CGroup) -> tuple[AbelianGroup, dict]:
    """Find the invariant-factor presentation of a concrete group and an
    explicit isomorphism (element -> presentation tuple)."""
    n = cg.order
    if n == 1:
        return AbelianGroup(()), {cg.zero: ()}
    for candidate in all_abelian_groups(n):
        gens = _find_independent_generators(cg, candidate.factors)
        if gens is None:
            continue
        mapping = {}
        for coords in iter_product(*(range(f) for f in candidate.factors)):
            cur = cg.zero
            for c, g in zip(coords, gens):
                for _ in range(c):
                    cur = cg.add(cur, g)
            mapping[cur] = coords
        return candidate, mapping
    raise SeytightError(f"no abelian presentation found for a group of order {n}")


def _find_independent_generators(cg: _CGroup, factors: tuple[int, ...]):
    """Search for elements of the prescribed orders generating a direct sum."""

    def descend(level: int, span: frozenset, chosen: list):
        if level == len(factors):
            return list(chosen) if len(span) == cg.order else None
        want = factors[level]
        for g in cg.elements:
            if cg.order_of(g) != want:
                continue
            bigger = cg.generated(set(span) | {g})
            if len(bigger) != len(span) * want:
                continue
            chosen.append(g)
            result = descend(level + 1, bigger, chosen)
            if result is not None:
                return result
            chosen.pop()
        return None

    return descend(0, frozenset({cg.zero}), [])


# -- classification -----------------------------------------------------------


@dataclass(frozen=True)
class EmptyLeaf:
    order: int

    def build(self) -> Orientation:
        return empty_orientation(self.order)

    def label(self) -> str:
        return f"E{self.order}"

    def to_json(self) -> dict:
        return {"kind": "empty", "order": self.order}


@dataclass(frozen=True)
class CyclePowerLeaf:
    order: int
    power: int

    def build(self) -> Orientation:
        return cycle_power(self.order, self.power)

    def label(self) -> str:
        if self.power == 1:
            return f"C{self.order}"
        return f"CyclePower({self.order},{self.power})"

    def to_json(self) -> dict:
        return {"kind": "cycle-power", "order": self.order, "power": self.power}


@dataclass(frozen=True)
class TournamentLeaf:
    """A concrete regular tournament leaf.

    The arcs are kept because non-circulant regular Cayley tournaments exist
    (for example on Z3 x Z3), so the order alone would not reconstruct an
    isomorphic graph.
    """

    order: int
    arcs: tuple[tuple[int, int], ...]

    def build(self) -> Orientation:
        return Orientation(self.order, self.arcs)

    def label(self) -> str:
        return f"RegularTournament({self.order})"

    def to_json(self) -> dict:
        return {
            "kind": "tournament",
            "order": self.order,
            "arcs": [list(a) for a in self.arcs],
        }


@dataclass(frozen=True)
class LexNode:
    outer: object
    inner: object

    def build(self) -> Orientation:
        return lex_product(self.outer.build(), self.inner.build())

    def label(self) -> str:
        return f"Lex({self.outer.label()}, {self.inner.label()})"

    def to_json(self) -> dict:
        return {"kind": "lex", "outer": self.outer.to_json(), "inner": self.inner.to_json()}


@dataclass(frozen=True)
class LexDecomposition:
    """Decomposition tree; reconstruct() rebuilds an isomorphic orientation."""

    root: object

    def reconstruct(self) -> Orientation:
        return self.root.build()

    def label(self) -> str:
        return self.root.label()

    def to_json(self) -> dict:
        return self.root.to_json()

    def render_text(self) -> str:
        lines: list[str] = []

        def walk(node, depth):
            pad = "  " * depth
            if isinstance(node, LexNode):
                lines.append(f"{pad}lex")
                walk(node.outer, depth + 1)
                walk(node.inner, depth + 1)
            else:
                lines.append(f"{pad}{node.label()}")

        walk(self.root, 0)
        return "\n".join(lines)


class _NoDecomposition(Exception):
    pass


def classify_abelian_seymour(
    group: AbelianGroup,
    s,
    cap: int = DEFAULT_ORDER_CAP,
    verify: bool = True,
) -> LexDecomposition:
    """Decompose the Cayley digraph of a Seymour connection set.

    Raises TheoremViolationError if no decomposition exists: that outcome
    would falsify the classification the search implements.
    """
    _check_cap(group, cap)
    conn = _as_set(group, s)
    if not seymour_set_criterion(group, conn):
        raise InputError("connection set does not satisfy the Seymour criterion")
    cg = _CGroup.from_abelian(group)
    try:
        root = _classify(cg, frozenset(conn))
    except _NoDecomposition as exc:
        raise TheoremViolationError(group, conn, str(exc)) from None
    tree = LexDecomposition(root)
    if verify:
        rebuilt = tree.reconstruct()
        target = cayley_digraph(group, conn)
        if find_isomorphism(rebuilt, target) is None:
            raise SeytightError(
                f"classification reconstruction is not isomorphic to the input "
                f"Cayley digraph for {group}, S={sorted(conn)}"
            )
    return tree


def _classify(cg: _CGroup, s: frozenset):
    n = cg.order
    if not s:
        return EmptyLeaf(n)
    span = cg.generated(s)
    if len(span) < n:
        # disconnected: one copy of the generated part per coset
        return LexNode(EmptyLeaf(n // len(span)), _classify(cg.restrict(span), s))

    leaf = _leaf_pattern(cg, s)
    if leaf is not None:
        return leaf

    a_full = s | {cg.zero}
    for f in cg.proper_subgroups():
        node = _try_split(cg, s, a_full, f)
        if node is not None:
            return node
    raise _NoDecomposition(
        f"no certifying subgroup at order {n} (residual set {sorted(s)})"
    )


def _leaf_pattern(cg: _CGroup, s: frozenset):
    """Leaf for a whole group generated by s: regular tournament if the graph
    is a tournament on more than 3 vertices, else an arithmetic progression
    cycle power. Returns None when neither pattern applies."""
    n = cg.order
    k = len(s)
    if n > 3 and n == 2 * k + 1:
        a = s | {cg.zero}
        if _sum2(cg, a) == cg.generated(s):
            return TournamentLeaf(n, tuple(cg.cayley_orientation(s).arcs()))
    for d in sorted(s):
        if _is_progression(cg, s, d) and cg.order_of(d) >= 2 * k + 1:
            return CyclePowerLeaf(cg.order_of(d), k)
    return None


def _is_progression(cg: _CGroup, s: frozenset, d) -> bool:
    cur = cg.zero
    prog = set()
    for _ in range(len(s)):
        cur = cg.add(cur, d)
        prog.add(cur)
    return prog == set(s)


def _sum2(cg: _CGroup, a: frozenset) -> frozenset:
    return frozenset(cg.add(x, y) for x in a for y in a)


def _inner_leaf(cg: _CGroup, f: frozenset, s_in: frozenset):
    """Leaf (possibly wrapped in an empty outer factor) for the induced
    connection set inside the certifying subgroup f."""
    fsize = len(f)
    if not s_in:
        return EmptyLeaf(fsize)
    sub = cg.restrict(f)
    span = sub.generated(s_in)
    inner = _leaf_pattern(sub.restrict(span), s_in)
    if inner is None:
        return None
    if len(span) == fsize:
        return inner
    return LexNode(EmptyLeaf(fsize // len(span)), inner)


def _try_split(cg: _CGroup, s: frozenset, a_full: frozenset, f: frozenset):
    s_in = s & f
    rest = s - f
    if not rest:
        return None  # cannot happen once s generates the group
    for x in rest:
        for h in f:
            if cg.add(x, h) not in rest:
                return None  # rest is not a union of f-cosets
    inner = _inner_leaf(cg, f, s_in)
    if inner is None:
        return None

    q = cg.quotient(f)
    proj = cg.projection(f)
    x_set = frozenset(proj[x] for x in rest)
    if q.zero in x_set:
        return None
    for x in x_set:
        if q.neg(x) in x_set:
            return None  # quotient set would create 2-cycles
    if len(x_set | frozenset(q.add(u, v) for u in x_set for v in x_set)) != 2 * len(x_set):
        return None  # quotient set is not Seymour
    try:
        outer = _classify(q, x_set)
    except _NoDecomposition:
        return None
    return LexNode(outer, inner)
