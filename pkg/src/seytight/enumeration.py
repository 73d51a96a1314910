"""Exhaustive small-instance searches and their reports.

The generic generator enumerates orientations pair by pair with prefix-pruning
callbacks; the named scans (counterexample hunt, tight censuses, low-degree
classification, Eulerian converse experiment, Sullivan catalogue) run on the
scan kernels and return deterministic reports. Sharded runs merge into sorted
match lists, so results never depend on worker count.
"""

from __future__ import annotations

import multiprocessing
import time
from dataclasses import dataclass, field

from . import scans
from .constructions import cycle_power, directed_cycle, empty_orientation, lex_product
from .digraph import Orientation
from .errors import InputError, SizeCapError
from .fileio import to_edge_text
from .isomorphism import canonical_arcs, find_isomorphism
from .tightness import is_seymour_tight, is_sullivan_tight, profile

__all__ = [
    "SearchReport",
    "PREDICATES",
    "enumerate_orientations",
    "max_out_degree_filter",
    "max_arc_count_filter",
    "sink_free_filter",
    "eulerian_balance_filter",
    "search",
    "verify_no_counterexample",
    "lowdegree_census",
    "verify_lowdegree_classification",
    "converse_conjecture_experiment",
    "sullivan_catalogue",
    "dedupe_up_to_isomorphism",
]

PREDICATES = {
    "seymour-tight": scans.PRED_SEYMOUR_TIGHT,
    "seymour-counterexample": scans.PRED_COUNTEREXAMPLE,
    "sullivan-tight": scans.PRED_SULLIVAN_TIGHT,
    "eulerian-seymour-tight": scans.PRED_EULERIAN_TIGHT,
}

UNFILTERED_CAP = 6
FILTERED_CAP = 8


@dataclass
class SearchReport:
    """Result of one scan; matches are canonical edge-list strings."""

    n: int
    predicate: str
    count_total: int
    matches: list[str] = field(default_factory=list)
    note: str = ""

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "predicate": self.predicate,
            "count_total": self.count_total,
            "matches": list(self.matches),
            "note": self.note,
        }

    def match_orientations(self) -> list[Orientation]:
        from .fileio import parse_edge_text

        return [parse_edge_text(s, as_orientation=True) for s in self.matches]


# -- generic generator -------------------------------------------------------


class PartialOrientation:
    """Read-only view handed to pruning callbacks after each pair assignment."""

    __slots__ = ("n", "pairs", "pair_index", "out_masks", "in_masks", "out_degrees", "in_degrees")

    def __init__(self, n, pairs, pair_index, out_masks, in_masks, out_degrees, in_degrees):
        self.n = n
        self.pairs = pairs
        self.pair_index = pair_index
        self.out_masks = out_masks
        self.in_masks = in_masks
        self.out_degrees = out_degrees
        self.in_degrees = in_degrees

    def finished(self, v: int) -> bool:
        """True once every pair incident to v has been assigned."""
        last = (v, self.n - 1) if v < self.n - 1 else (self.n - 2, self.n - 1)
        return self.pairs[self.pair_index] >= last


def enumerate_orientations(n: int, filters=()):
    """Yield every orientation on n vertices (pair states: none, u->v, v->u).

    Filters are callables PartialOrientation -> bool, invoked after each pair
    assignment; returning False prunes the subtree. Unfiltered scans are
    refused above n=6.
    """
    npairs = n * (n - 1) // 2
    if n > UNFILTERED_CAP and not filters:
        raise SizeCapError(
            f"unfiltered scan at n={n} would visit 3^{npairs} = {3**npairs} "
            "orientations; pass a degree or arc-count filter"
        )
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    out_masks = [0] * n
    in_masks = [0] * n
    out_deg = [0] * n
    in_deg = [0] * n

    def rec(d):
        if d == npairs:
            yield Orientation.from_out_masks(n, list(out_masks))
            return
        u, v = pairs[d]
        for state in (0, 1, 2):
            if state == 1:
                out_masks[u] |= 1 << v
                in_masks[v] |= 1 << u
                out_deg[u] += 1
                in_deg[v] += 1
            elif state == 2:
                out_masks[v] |= 1 << u
                in_masks[u] |= 1 << v
                out_deg[v] += 1
                in_deg[u] += 1
            view = PartialOrientation(n, pairs, d, out_masks, in_masks, out_deg, in_deg)
            if all(f(view) for f in filters):
                yield from rec(d + 1)
            if state == 1:
                out_masks[u] &= ~(1 << v)
                in_masks[v] &= ~(1 << u)
                out_deg[u] -= 1
                in_deg[v] -= 1
            elif state == 2:
                out_masks[v] &= ~(1 << u)
                in_masks[u] &= ~(1 << v)
                out_deg[v] -= 1
                in_deg[u] -= 1

    yield from rec(0)


def max_out_degree_filter(cap: int):
    def f(p: PartialOrientation) -> bool:
        return all(d <= cap for d in p.out_degrees)

    return f


def max_arc_count_filter(cap: int):
    def f(p: PartialOrientation) -> bool:
        return sum(p.out_degrees) <= cap

    return f


def sink_free_filter():
    """Strong-connectivity necessary condition: no finished vertex without out-arcs."""

    def f(p: PartialOrientation) -> bool:
        if p.n <= 1:
            return True
        u, v = p.pairs[p.pair_index]
        if v == p.n - 1:
            if p.out_degrees[u] == 0:
                return False
            # the last pair also finishes vertex n-1
            if u == p.n - 2 and p.out_degrees[v] == 0:
                return False
        return True

    return f


def eulerian_balance_filter():
    def f(p: PartialOrientation) -> bool:
        u, v = p.pairs[p.pair_index]
        if v == p.n - 1:
            if p.out_degrees[u] != p.in_degrees[u]:
                return False
            if u == p.n - 2 and p.out_degrees[v] != p.in_degrees[v]:
                return False
        return True

    return f


# -- kernel-backed scans ------------------------------------------------------


def _scan_shard(args):
    n, pred, prefix = args
    return scans.scan_predicate(n, pred, prefix)


def _run_predicate_scan(n: int, pred: int, jobs: int = 1):
    npairs = n * (n - 1) // 2
    if jobs <= 1 or npairs < 2:
        covered, blobs = scans.scan_predicate(n, pred)
    else:
        # the top two pair assignments shard the space into 9 subtrees
        shards = [(n, pred, (s1, s2)) for s1 in range(3) for s2 in range(3)]
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(jobs) as pool:
            parts = pool.map(_scan_shard, shards)
        covered = sum(c for c, _ in parts)
        blobs = [b for _, bs in parts for b in bs]
    expected = 3**npairs
    if covered != expected:
        raise AssertionError(f"scan covered {covered} of {expected} orientations")
    blobs.sort()
    return covered, blobs


def _orientations_from_blobs(n: int, blobs) -> list[Orientation]:
    return [Orientation(n, scans.arcs_from_bytes(b)) for b in blobs]


def search(
    n: int,
    predicate: str,
    dedup: bool = False,
    jobs: int = 1,
    max_out_degree: int | None = None,
) -> SearchReport:
    """Scan all orientations on n vertices for a named predicate.

    Unfiltered scans use the kernels and cover the whole space (count_total =
    3^C(n,2)); with max_out_degree the filtered generator runs instead and
    count_total is the number of orientations satisfying the filter. The
    filtered path is pure Python: generous caps at n=7..8 can take very long.
    """
    if predicate not in PREDICATES:
        raise InputError(
            f"unknown predicate {predicate!r}; choose from {sorted(PREDICATES)}"
        )
    started = time.perf_counter()
    pred = PREDICATES[predicate]
    if max_out_degree is None:
        if n > UNFILTERED_CAP:
            raise SizeCapError(
                f"unfiltered search needs n <= {UNFILTERED_CAP}, got n={n}; "
                "pass a degree filter for larger n"
            )
        count, blobs = _run_predicate_scan(n, pred, jobs)
        found = _orientations_from_blobs(n, blobs)
        cover_note = "complete cover"
    else:
        if n > FILTERED_CAP:
            raise SizeCapError(f"filtered search needs n <= {FILTERED_CAP}, got n={n}")
        count = 0
        found = []
        checker = _PREDICATE_CHECKS[predicate]
        for d in enumerate_orientations(n, [max_out_degree_filter(max_out_degree)]):
            count += 1
            if checker(d):
                found.append(d)
        cover_note = f"orientations with max out-degree <= {max_out_degree}"
    if dedup:
        found = dedupe_up_to_isomorphism(found)
    elapsed = time.perf_counter() - started
    note = (
        f"{cover_note}; dedup={'up-to-isomorphism' if dedup else 'none'}; "
        f"n<=6 catalogue is new data (no published census); {elapsed:.2f}s wall clock"
    )
    return SearchReport(
        n=n,
        predicate=predicate,
        count_total=count,
        matches=[to_edge_text(d) for d in found],
        note=note,
    )


def _check_eulerian_tight(d: Orientation) -> bool:
    p = profile(d)
    return all(a == b for a, b in zip(p.out1, p.in1)) and all(
        a == b for a, b in zip(p.out1, p.out2)
    )


_PREDICATE_CHECKS = {
    "seymour-tight": is_seymour_tight,
    "seymour-counterexample": lambda d: all(
        x > 0 for x in profile(d).seymour_deficiencies()
    ),
    "sullivan-tight": is_sullivan_tight,
    "eulerian-seymour-tight": _check_eulerian_tight,
}


def verify_no_counterexample(n: int, jobs: int = 1) -> SearchReport:
    """Confirm that no orientation on n vertices has strictly positive
    deficiency everywhere. Evidence at desk scale, not a proof."""
    if n > UNFILTERED_CAP:
        raise SizeCapError(f"verify_no_counterexample needs n <= {UNFILTERED_CAP}, got {n}")
    started = time.perf_counter()
    count, blobs = _run_predicate_scan(n, scans.PRED_COUNTEREXAMPLE, jobs)
    found = _orientations_from_blobs(n, blobs)
    elapsed = time.perf_counter() - started
    return SearchReport(
        n=n,
        predicate="seymour-counterexample",
        count_total=count,
        matches=[to_edge_text(d) for d in found],
        note=(
            f"complete cover of 3^{n*(n-1)//2} orientations; evidence only, "
            f"not a proof; {elapsed:.2f}s wall clock"
        ),
    )


def lowdegree_census(n: int, degree: int) -> SearchReport:
    """Census (up to isomorphism) of strongly connected Seymour-tight
    orientations with an out-degree-1 vertex (degree=1) or with out-degree 2
    everywhere (degree=2)."""
    if degree == 1:
        cap = 7
    elif degree == 2:
        cap = 8
    else:
        raise InputError(f"degree must be 1 or 2, got {degree}")
    if not 3 <= n <= cap:
        raise SizeCapError(f"degree-{degree} census needs 3 <= n <= {cap}, got {n}")
    started = time.perf_counter()
    visited, blobs = scans.scan_degree_census(n, degree)
    reps = dedupe_up_to_isomorphism(_orientations_from_blobs(n, blobs))
    elapsed = time.perf_counter() - started
    wlog = "{1}" if degree == 1 else "{1,2}"
    return SearchReport(
        n=n,
        predicate=f"sc-tight-outdegree-{degree}",
        count_total=visited,
        matches=[to_edge_text(d) for d in reps],
        note=(
            f"scan fixes out(0) = {wlog} (every class has such a representative); "
            f"{len(blobs)} labelled matches before dedup; {elapsed:.2f}s wall clock"
        ),
    )


def verify_lowdegree_classification(
    n_max_degree1: int = 7, n_max_degree2: int = 8
) -> dict:
    """Check the censuses against the expected families.

    Degree 1 (n <= n_max_degree1): exactly the directed cycle. Degree 2
    (n <= n_max_degree2): exactly the square of the n-cycle and, for even n,
    the two-blowup of the (n/2)-cycle. Violators are reported, expected none.
    """
    out: dict = {"degree1": {}, "degree2": {}, "violations": []}
    for n in range(3, n_max_degree1 + 1):
        report = lowdegree_census(n, 1)
        expected = [directed_cycle(n)]
        out["degree1"][n] = report
        _collect_census_violations(out["violations"], report, expected, n, 1)
    for n in range(3, n_max_degree2 + 1):
        report = lowdegree_census(n, 2)
        expected = []
        if 4 < n:
            expected.append(cycle_power(n, 2))
        if n % 2 == 0 and n >= 6:
            expected.append(lex_product(directed_cycle(n // 2), empty_orientation(2)))
        out["degree2"][n] = report
        _collect_census_violations(out["violations"], report, expected, n, 2)
    return out


def _collect_census_violations(violations, report, expected, n, degree):
    found = report.match_orientations()
    for d in found:
        if not any(find_isomorphism(d, e) is not None for e in expected):
            violations.append((n, degree, to_edge_text(d), "unexpected census member"))
    for e in expected:
        if not any(find_isomorphism(d, e) is not None for d in found):
            violations.append((n, degree, to_edge_text(e), "expected member missing"))


def converse_conjecture_experiment(n_max: int, jobs: int = 1) -> dict:
    """Scan Eulerian Seymour-tight orientations up to n_max and report any
    whose converse is not Seymour-tight; also the fixed-degree sub-report
    (constant |N1-| = |N1+| = |N2+| = k must force |N2-| = k).

    Supporting evidence, not a proof.
    """
    if n_max > FILTERED_CAP:
        raise SizeCapError(f"converse experiment needs n_max <= {FILTERED_CAP}, got {n_max}")
    started = time.perf_counter()
    per_n = {}
    violations = []
    fixed_k_violations = []
    total = 0
    for n in range(3, n_max + 1):
        if n <= UNFILTERED_CAP:
            _, blobs = _run_predicate_scan(n, scans.PRED_EULERIAN_TIGHT, jobs)
        else:
            _, blobs = scans.scan_predicate(n, scans.PRED_EULERIAN_TIGHT)
        matches = _orientations_from_blobs(n, blobs)
        total += len(matches)
        fixed_k = 0
        for d in matches:
            if not is_seymour_tight(d.converse()):
                violations.append(to_edge_text(d))
            p = profile(d)
            ks = set(p.out1) | set(p.in1) | set(p.out2)
            if len(ks) == 1:
                fixed_k += 1
                k = next(iter(ks))
                if any(x != k for x in p.in2):
                    fixed_k_violations.append(to_edge_text(d))
        per_n[n] = {"eulerian_tight": len(matches), "fixed_k": fixed_k}
    elapsed = time.perf_counter() - started
    return {
        "n_max": n_max,
        "per_n": per_n,
        "eulerian_tight_total": total,
        "converse_violations": violations,
        "fixed_k_violations": fixed_k_violations,
        "note": (
            "evidence only, not a proof; Eulerian balance pruned scan; "
            f"{elapsed:.2f}s wall clock"
        ),
    }


def sullivan_catalogue(n: int) -> dict:
    """All Sullivan-tight orientations on n vertices up to isomorphism, the
    subset that is not Seymour-tight, and the exhaustive tournament
    diameter-2 equivalence check."""
    if not 3 <= n <= UNFILTERED_CAP:
        raise SizeCapError(f"sullivan catalogue needs 3 <= n <= {UNFILTERED_CAP}, got {n}")
    started = time.perf_counter()
    count, blobs = _run_predicate_scan(n, scans.PRED_SULLIVAN_TIGHT)
    reps = dedupe_up_to_isomorphism(_orientations_from_blobs(n, blobs))
    not_seymour = [d for d in reps if not is_seymour_tight(d)]
    checked, equivalence = _tournament_diameter2_equivalence(n)
    elapsed = time.perf_counter() - started
    return {
        "n": n,
        "count_total": count,
        "matches": [to_edge_text(d) for d in reps],
        "not_seymour_tight": [to_edge_text(d) for d in not_seymour],
        "tournaments_checked": checked,
        "tournament_diameter2_equivalence": equivalence,
        "note": f"complete cover; {elapsed:.2f}s wall clock",
    }


def _tournament_diameter2_equivalence(n: int) -> tuple[int, bool]:
    """Over every tournament on n vertices: Sullivan-tight iff diameter 2."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    checked = 0
    for code in range(1 << len(pairs)):
        out = [0] * n
        for i, (u, v) in enumerate(pairs):
            if code >> i & 1:
                out[u] |= 1 << v
            else:
                out[v] |= 1 << u
        d = Orientation.from_out_masks(n, out)
        checked += 1
        if is_sullivan_tight(d) != _has_diameter_two(d):
            return checked, False
    return checked, True


def _has_diameter_two(d: Orientation) -> bool:
    full = (1 << d.n) - 1
    for v in range(d.n):
        reach = (1 << v) | d.out_mask(v) | d.second_out_mask(v)
        if reach != full:
            return False
    return True


# -- isomorphism dedup --------------------------------------------------------


def dedupe_up_to_isomorphism(orientations) -> list[Orientation]:
    """One canonical representative per isomorphism class, sorted by arc list.

    Buckets by profile invariants first, then backtracking isomorphism within
    buckets; only the surviving representatives pay for exact canonicalisation
    (lexicographically least edge-list over all permutations).
    """
    buckets: dict = {}
    for d in orientations:
        p = profile(d)
        key = (d.n, d.arc_count, tuple(sorted(zip(p.out1, p.in1, p.out2, p.in2))))
        reps = buckets.setdefault(key, [])
        if not any(find_isomorphism(d, r) is not None for r in reps):
            reps.append(d)
    out = []
    for reps in buckets.values():
        for d in reps:
            out.append(Orientation(d.n, canonical_arcs(d)))
    out.sort(key=lambda d: (d.n, d.arcs()))
    return out
