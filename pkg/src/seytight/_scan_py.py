"""Pure-Python scan kernels: the fallback twin of seytight._fastscan.

Both backends expose the same two entry points with identical semantics and
identical outputs; the compiled module is a line-for-line translation of this
one with C bitsets. Orientations of K_n are enumerated pair by pair in
lexicographic order, each unordered pair taking one of (no arc, u->v, v->u).

`covered` counts complete orientations either visited or excluded by a sound
prune, so it always totals 3^(#free pairs). Matches are encoded as flat arc
bytes (u0, v0, u1, v1, ...) in lexicographic arc order.
"""

from __future__ import annotations

PRED_SEYMOUR_TIGHT = 1
PRED_COUNTEREXAMPLE = 2
PRED_SULLIVAN_TIGHT = 3
PRED_EULERIAN_TIGHT = 4


def scan_predicate(n: int, pred: int, prefix: tuple[int, ...] = ()):
    """Scan all orientations on n vertices for the given predicate.

    prefix forces the first len(prefix) pairs to the given states (sharding).
    Returns (covered, matches).
    """
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    npairs = len(pairs)
    if len(prefix) > npairs:
        raise ValueError(f"prefix of length {len(prefix)} exceeds {npairs} pairs")
    pow3 = [3 ** (npairs - d) for d in range(npairs + 1)]

    out_mask = [0] * n
    out_deg = [0] * n
    in_deg = [0] * n
    matches: list[bytes] = []
    covered = 0

    def apply(u, v, state):
        if state == 1:
            out_mask[u] |= 1 << v
            out_deg[u] += 1
            in_deg[v] += 1
        elif state == 2:
            out_mask[v] |= 1 << u
            out_deg[v] += 1
            in_deg[u] += 1

    def unapply(u, v, state):
        if state == 1:
            out_mask[u] &= ~(1 << v)
            out_deg[u] -= 1
            in_deg[v] -= 1
        elif state == 2:
            out_mask[v] &= ~(1 << u)
            out_deg[v] -= 1
            in_deg[u] -= 1

    def block_prune(b):
        # vertex b's degrees are final once pair (b, n-1) is assigned
        if pred == PRED_COUNTEREXAMPLE:
            return out_deg[b] == 0
        if pred == PRED_EULERIAN_TIGHT:
            return out_deg[b] != in_deg[b]
        if pred == PRED_SULLIVAN_TIGHT:
            return out_deg[b] == 0 and in_deg[b] > 0
        return False

    def second_count(v):
        m = out_mask[v]
        mm = m
        reach = 0
        while mm:
            low = mm & -mm
            reach |= out_mask[low.bit_length() - 1]
            mm ^= low
        return (reach & ~m & ~(1 << v)).bit_count()

    def leaf_match():
        if pred == PRED_SEYMOUR_TIGHT:
            return all(second_count(v) == out_deg[v] for v in range(n))
        if pred == PRED_COUNTEREXAMPLE:
            return all(second_count(v) < out_deg[v] for v in range(n))
        if pred == PRED_SULLIVAN_TIGHT:
            return all(second_count(v) == in_deg[v] for v in range(n))
        if pred == PRED_EULERIAN_TIGHT:
            return all(out_deg[v] == in_deg[v] for v in range(n)) and all(
                second_count(v) == out_deg[v] for v in range(n)
            )
        raise ValueError(f"unknown predicate id {pred}")

    def encode():
        flat = bytearray()
        for u in range(n):
            mm = out_mask[u]
            while mm:
                low = mm & -mm
                flat.append(u)
                flat.append(low.bit_length() - 1)
                mm ^= low
        return bytes(flat)

    def recurse(d):
        nonlocal covered
        if d == npairs:
            covered += 1
            if leaf_match():
                matches.append(encode())
            return
        u, v = pairs[d]
        for state in (0, 1, 2):
            apply(u, v, state)
            if v == n - 1 and block_prune(u):
                covered += pow3[d + 1]
            else:
                recurse(d + 1)
            unapply(u, v, state)

    # forced prefix (shard): apply states, honouring the same prunes
    dead = False
    for d, state in enumerate(prefix):
        u, v = pairs[d]
        apply(u, v, state)
        if v == n - 1 and block_prune(u):
            dead = True
            break
    if dead:
        return pow3[len(prefix)], []
    recurse(len(prefix))
    return covered, matches


def scan_degree_census(n: int, degree: int):
    """Strongly connected Seymour-tight census under a degree restriction.

    degree=1: vertex 0's out-set is forced to {1} (every isomorphism class
    with an out-degree-1 vertex has such a representative); all vertices must
    keep out-degree >= 1. degree=2: every out-degree must equal 2 and vertex
    0's out-set is forced to {1,2}. Returns (visited_leaves, matches).
    """
    if degree not in (1, 2):
        raise ValueError(f"degree must be 1 or 2, got {degree}")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    npairs = len(pairs)
    full = (1 << n) - 1

    out_mask = [0] * n
    in_mask = [0] * n
    out_deg = [0] * n
    matches: list[bytes] = []
    visited = 0

    def states_for(d):
        u, v = pairs[d]
        if u == 0:
            if v == 1 or (degree == 2 and v == 2):
                return (1,)
            return (0, 2)
        return (0, 1, 2)

    def state_allowed(u, v, state):
        if degree == 2:
            if state == 1 and out_deg[u] >= 2:
                return False
            if state == 2 and out_deg[v] >= 2:
                return False
        return True

    def second_count(v):
        m = out_mask[v]
        mm = m
        reach = 0
        while mm:
            low = mm & -mm
            reach |= out_mask[low.bit_length() - 1]
            mm ^= low
        return (reach & ~m & ~(1 << v)).bit_count()

    def block_prune(b):
        # vertex b's out-row is final; rows 0..b are all final
        if degree == 2 and out_deg[b] != 2:
            return True
        if out_deg[b] == 0:
            return True  # a sink can never be strongly connected for n >= 2
        settled = (1 << (b + 1)) - 1
        for t in range(b + 1):
            if out_mask[t] & ~settled:
                continue  # some out-neighbour row still open
            if second_count(t) != out_deg[t]:
                return True
        return False

    def closure(rows):
        reach = 1
        frontier = 1
        while frontier:
            new = 0
            mm = frontier
            while mm:
                low = mm & -mm
                new |= rows[low.bit_length() - 1]
                mm ^= low
            frontier = new & ~reach
            reach |= new
        return reach

    def leaf_match():
        for v in range(n):
            if degree == 2 and out_deg[v] != 2:
                return False
            if out_deg[v] == 0:
                return False
            if second_count(v) != out_deg[v]:
                return False
        return closure(out_mask) == full and closure(in_mask) == full

    def encode():
        flat = bytearray()
        for u in range(n):
            mm = out_mask[u]
            while mm:
                low = mm & -mm
                flat.append(u)
                flat.append(low.bit_length() - 1)
                mm ^= low
        return bytes(flat)

    def recurse(d):
        nonlocal visited
        if d == npairs:
            visited += 1
            if leaf_match():
                matches.append(encode())
            return
        u, v = pairs[d]
        for state in states_for(d):
            if not state_allowed(u, v, state):
                continue
            if state == 1:
                out_mask[u] |= 1 << v
                in_mask[v] |= 1 << u
                out_deg[u] += 1
            elif state == 2:
                out_mask[v] |= 1 << u
                in_mask[u] |= 1 << v
                out_deg[v] += 1
            if not (v == n - 1 and block_prune(u)):
                recurse(d + 1)
            if state == 1:
                out_mask[u] &= ~(1 << v)
                in_mask[v] &= ~(1 << u)
                out_deg[u] -= 1
            elif state == 2:
                out_mask[v] &= ~(1 << u)
                in_mask[u] &= ~(1 << v)
                out_deg[v] -= 1

    recurse(0)
    return visited, matches
