"""Exact integer linear algebra for sign matrices.

Kernel bases are computed for the full integer kernel lattice ker(M) & Z^n
(unimodular column reduction, then Hermite-style row canonicalisation), so
lattice-membership tests and the bounded nonnegative-vector search are
complete. All arithmetic is exact; Python integers cannot overflow.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InputError

__all__ = [
    "KernelBasis",
    "integer_kernel_basis",
    "chi_vectors",
    "nonnegative_kernel_vectors",
    "in_kernel",
]


def _rows_of(m) -> list[tuple[int, ...]]:
    rows = m.rows if hasattr(m, "rows") else m
    rows = [tuple(r) for r in rows]
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise InputError("ragged matrix")
    return rows


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a,b) = x*a + y*b, g >= 0."""
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        g, x, y = -g, -x, -y
    return g, x, y


def _hermite_rows(vectors: list[list[int]]) -> list[tuple[int, ...]]:
    """Row-style Hermite form: echelon rows, positive pivots, entries above
    each pivot reduced into [0, pivot). Canonical for a given lattice."""
    rows = [list(v) for v in vectors if any(v)]
    if not rows:
        return []
    width = len(rows[0])
    basis: list[list[int]] = []
    for vec in rows:
        v = list(vec)
        for row in basis:
            p = next(i for i, x in enumerate(row) if x)
            if v[p] == 0:
                continue
            a, b = row[p], v[p]
            if b % a == 0:
                q = b // a
                for i in range(width):
                    v[i] -= q * row[i]
            else:
                g, x, y = _xgcd(a, b)
                ag, bg = a // g, b // g
                for i in range(width):
                    ri, vi = row[i], v[i]
                    row[i] = x * ri + y * vi
                    v[i] = ag * vi - bg * ri
        if any(v):
            basis.append(v)
            basis.sort(key=lambda r: next(i for i, x in enumerate(r) if x))
    # normalise pivots positive, reduce entries above pivots
    for row in basis:
        p = next(i for i, x in enumerate(row) if x)
        if row[p] < 0:
            for i in range(width):
                row[i] = -row[i]
    for j in range(len(basis) - 1, -1, -1):
        pj = next(i for i, x in enumerate(basis[j]) if x)
        piv = basis[j][pj]
        for r in range(j):
            q = basis[r][pj] // piv
            if q:
                for i in range(len(basis[r])):
                    basis[r][i] -= q * basis[j][i]
    return [tuple(r) for r in basis]


@dataclass(frozen=True)
class KernelBasis:
    """Basis of the integer kernel lattice of a matrix.

    Vectors are primitive (a basis of a pure lattice always is), verified to
    be annihilated exactly, and sorted lexicographically.
    """

    vectors: tuple[tuple[int, ...], ...]
    _echelon: tuple[tuple[int, ...], ...] = field(repr=False, default=())

    def __post_init__(self):
        if not self._echelon:
            object.__setattr__(self, "_echelon", tuple(_hermite_rows([list(v) for v in self.vectors])))

    @property
    def dimension(self) -> int:
        return len(self.vectors)

    def contains(self, vec) -> bool:
        """Exact lattice membership: is vec an integer combination of the basis?"""
        v = list(vec)
        for row in self._echelon:
            p = next(i for i, x in enumerate(row) if x)
            if v[p] == 0:
                continue
            if v[p] % row[p] != 0:
                return False
            q = v[p] // row[p]
            for i in range(len(v)):
                v[i] -= q * row[i]
        return not any(v)

    def __contains__(self, vec) -> bool:
        return self.contains(vec)


def integer_kernel_basis(m) -> KernelBasis:
    """Basis of ker(M) & Z^n via unimodular column operations.

    Full-rank matrices yield an empty basis. Every vector is re-multiplied
    through M before return.
    """
    rows = _rows_of(m)
    if not rows:
        raise InputError("empty matrix")
    nr, nc = len(rows), len(rows[0])
    cols = [[rows[i][j] for i in range(nr)] for j in range(nc)]
    u = [[1 if i == j else 0 for i in range(nc)] for j in range(nc)]
    piv = 0
    for r in range(nr):
        idx = next((j for j in range(piv, nc) if cols[j][r] != 0), None)
        if idx is None:
            continue
        cols[piv], cols[idx] = cols[idx], cols[piv]
        u[piv], u[idx] = u[idx], u[piv]
        for j in range(piv + 1, nc):
            if cols[j][r] == 0:
                continue
            a, b = cols[piv][r], cols[j][r]
            g, x, y = _xgcd(a, b)
            ag, bg = a // g, b // g
            cp, cj = cols[piv], cols[j]
            for i in range(nr):
                pi, ji = cp[i], cj[i]
                cp[i] = x * pi + y * ji
                cj[i] = ag * ji - bg * pi
            up, uj = u[piv], u[j]
            for i in range(nc):
                pi, ji = up[i], uj[i]
                up[i] = x * pi + y * ji
                uj[i] = ag * ji - bg * pi
        piv += 1

    raw = [u[j] for j in range(piv, nc)]
    echelon = _hermite_rows(raw)
    for vec in echelon:
        if any(sum(r * x for r, x in zip(row, vec)) for row in rows):
            raise AssertionError("kernel vector fails exact verification")
    return KernelBasis(tuple(sorted(echelon)), tuple(echelon))


def chi_vectors(n: int, k: int) -> list[tuple[int, ...]]:
    """Residue-class indicator vectors mod gcd(n,k), all annihilated by the
    sign matrix of the k-th cycle power on n vertices (verified)."""
    if k < 1 or 2 * k >= n:
        raise InputError(f"need 1 <= k and 2k < n, got n={n}, k={k}")
    from math import gcd

    from .constructions import cycle_power
    from .tightness import seymour_matrix

    d = gcd(n, k)
    vectors = [tuple(1 if j % d == i else 0 for j in range(n)) for i in range(d)]
    mat = seymour_matrix(cycle_power(n, k))
    for vec in vectors:
        if any(mat.matvec(vec)):
            raise AssertionError(f"chi vector {vec} not annihilated for (n={n}, k={k})")
    return vectors


def nonnegative_kernel_vectors(m, entry_bound: int) -> list[tuple[int, ...]]:
    """All x with 0 <= x_i <= entry_bound and M x = 0, sorted.

    Searches integer combinations of the echelon kernel basis; the staircase
    pivot structure bounds each coefficient exactly, so the enumeration is
    finite and complete. The zero vector is always present.
    """
    if entry_bound < 1:
        raise InputError(f"entry_bound must be >= 1, got {entry_bound}")
    rows = _rows_of(m)
    width = len(rows[0])
    basis = integer_kernel_basis(m)._echelon
    pivots = [next(i for i, x in enumerate(row) if x) for row in basis]

    found: set[tuple[int, ...]] = set()
    partial = [0] * width

    def descend(level: int) -> None:
        if level == len(basis):
            if all(0 <= x <= entry_bound for x in partial):
                found.add(tuple(partial))
            return
        row = basis[level]
        p = pivots[level]
        piv = row[p]
        # 0 <= partial[p] + c*piv <= entry_bound pins the coefficient range
        lo = -(partial[p] // piv)
        hi = (entry_bound - partial[p]) // piv
        for c in range(lo, hi + 1):
            if c:
                for i in range(width):
                    partial[i] += c * row[i]
            descend(level + 1)
            if c:
                for i in range(width):
                    partial[i] -= c * row[i]

    descend(0)
    return sorted(found)


def in_kernel(m, x) -> bool:
    """Exact check that M x = 0."""
    rows = _rows_of(m)
    if len(x) != len(rows[0]):
        raise InputError(f"vector length {len(x)} != {len(rows[0])}")
    return all(sum(r * xi for r, xi in zip(row, x)) == 0 for row in rows)
