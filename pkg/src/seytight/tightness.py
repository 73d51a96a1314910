"""Per-vertex neighbourhood profiles, tightness predicates and sign matrices.

An orientation is Seymour when |N1+| >= |N2+| everywhere, Seymour-tight when
equality holds everywhere, a Seymour counterexample when the inequality is
strict everywhere, and Sullivan-tight when |N1-| = |N2+| everywhere.
Deficiencies are signed integers, never clamped.
"""

from __future__ import annotations

from dataclasses import dataclass

from .digraph import Digraph, Orientation
from .errors import InputError

__all__ = [
    "NeighbourhoodProfile",
    "SignMatrix",
    "profile",
    "is_seymour_orientation",
    "is_seymour_tight",
    "is_seymour_counterexample",
    "is_sullivan_tight",
    "seymour_matrix",
    "sullivan_matrix",
    "check_report",
]


@dataclass(frozen=True)
class NeighbourhoodProfile:
    """Sizes |N1+|, |N2+|, |N1-|, |N2-| per vertex."""

    out1: tuple[int, ...]
    out2: tuple[int, ...]
    in1: tuple[int, ...]
    in2: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.out1)

    def seymour_deficiency(self, v: int) -> int:
        return self.out1[v] - self.out2[v]

    def sullivan_deficiency(self, v: int) -> int:
        return self.in1[v] - self.out2[v]

    def seymour_deficiencies(self) -> list[int]:
        return [a - b for a, b in zip(self.out1, self.out2)]

    def sullivan_deficiencies(self) -> list[int]:
        return [a - b for a, b in zip(self.in1, self.out2)]


def profile(d: Digraph) -> NeighbourhoodProfile:
    return NeighbourhoodProfile(
        out1=tuple(d.out_mask(v).bit_count() for v in range(d.n)),
        out2=tuple(d.second_out_mask(v).bit_count() for v in range(d.n)),
        in1=tuple(d.in_mask(v).bit_count() for v in range(d.n)),
        in2=tuple(d.second_in_mask(v).bit_count() for v in range(d.n)),
    )


def is_seymour_orientation(d: Orientation) -> bool:
    """Every vertex satisfies |N1+| >= |N2+|."""
    return all(
        d.out_mask(v).bit_count() >= d.second_out_mask(v).bit_count() for v in range(d.n)
    )


def is_seymour_tight(d: Orientation) -> bool:
    """Every vertex satisfies |N1+| = |N2+|."""
    return all(
        d.out_mask(v).bit_count() == d.second_out_mask(v).bit_count() for v in range(d.n)
    )


def is_seymour_counterexample(d: Orientation) -> bool:
    """Every vertex satisfies |N1+| > |N2+| (no such orientation is known)."""
    return all(
        d.out_mask(v).bit_count() > d.second_out_mask(v).bit_count() for v in range(d.n)
    )


def is_sullivan_tight(d: Orientation) -> bool:
    """Every vertex satisfies |N1-| = |N2+|."""
    return all(
        d.in_mask(v).bit_count() == d.second_out_mask(v).bit_count() for v in range(d.n)
    )


@dataclass(frozen=True)
class SignMatrix:
    """Dense n x n matrix with entries in {-1, 0, +1} and zero diagonal."""

    rows: tuple[tuple[int, ...], ...]
    kind: str  # "seymour" or "sullivan"

    def __post_init__(self):
        n = len(self.rows)
        for i, row in enumerate(self.rows):
            if len(row) != n:
                raise InputError(f"row {i} has length {len(row)}, expected {n}")
            if row[i] != 0:
                raise InputError(f"nonzero diagonal entry at ({i},{i})")
            for x in row:
                if x not in (-1, 0, 1):
                    raise InputError(f"entry {x} outside {{-1,0,1}} in row {i}")

    @property
    def n(self) -> int:
        return len(self.rows)

    def entry(self, v: int, w: int) -> int:
        return self.rows[v][w]

    def matvec(self, x) -> list[int]:
        """Exact integer matrix-vector product."""
        if len(x) != self.n:
            raise InputError(f"vector length {len(x)} != {self.n}")
        return [sum(r * xi for r, xi in zip(row, x)) for row in self.rows]

    def row_sums(self) -> list[int]:
        return [sum(row) for row in self.rows]

    def transpose(self) -> "SignMatrix":
        return SignMatrix(tuple(zip(*self.rows)), self.kind)


def seymour_matrix(d: Orientation) -> SignMatrix:
    """Entry (v,w) is +1 if w in N1+(v), -1 if w in N2+(v), else 0.

    Row sums are the Seymour deficiencies, so the matrix annihilates the
    all-ones vector exactly on Seymour-tight orientations.
    """
    rows = []
    for v in range(d.n):
        first = d.out_mask(v)
        second = d.second_out_mask(v)
        rows.append(
            tuple(
                1 if first >> w & 1 else -1 if second >> w & 1 else 0
                for w in range(d.n)
            )
        )
    return SignMatrix(tuple(rows), "seymour")


def sullivan_matrix(d: Orientation) -> SignMatrix:
    """Entry (v,w) is +1 if w in N2+(v)\\N1-(v), -1 if w in N1-(v)\\N2+(v), 0 otherwise.

    Membership in both sets cancels to 0; row sums are |N2+| - |N1-|.
    """
    rows = []
    for v in range(d.n):
        second = d.second_out_mask(v)
        first_in = d.in_mask(v)
        rows.append(
            tuple(
                1 if (second >> w & 1) and not (first_in >> w & 1)
                else -1 if (first_in >> w & 1) and not (second >> w & 1)
                else 0
                for w in range(d.n)
            )
        )
    return SignMatrix(tuple(rows), "sullivan")


def check_report(d: Orientation) -> dict:
    """JSON-ready report for the `check` CLI; keys in fixed order."""
    p = profile(d)
    return {
        "n": d.n,
        "arcs": [[u, v] for u, v in d.arcs()],
        "profile": {
            "out1": list(p.out1),
            "out2": list(p.out2),
            "in1": list(p.in1),
            "in2": list(p.in2),
        },
        "seymour_deficiency": p.seymour_deficiencies(),
        "sullivan_deficiency": p.sullivan_deficiencies(),
        "flags": {
            "seymour": all(x >= 0 for x in p.seymour_deficiencies()),
            "seymour_tight": all(x == 0 for x in p.seymour_deficiencies()),
            "sullivan_tight": all(x == 0 for x in p.sullivan_deficiencies()),
            "eulerian": all(a == b for a, b in zip(p.out1, p.in1)),
            "strongly_connected": d.is_strongly_connected(),
        },
    }
