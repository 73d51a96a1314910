# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled scan kernels: C translation of seytight._scan_py.

Same entry points, same semantics, same outputs; see the pure module for the
documentation of the enumeration order, pruning rules and match encoding.
"""

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

PRED_SEYMOUR_TIGHT = 1
PRED_COUNTEREXAMPLE = 2
PRED_SULLIVAN_TIGHT = 3
PRED_EULERIAN_TIGHT = 4

cdef enum:
    MAXN = 16
    MAXPAIRS = 120


cdef class _PredScan:
    cdef int n, npairs, pred
    cdef unsigned long long out_mask[MAXN]
    cdef int out_deg[MAXN]
    cdef int in_deg[MAXN]
    cdef int pair_u[MAXPAIRS]
    cdef int pair_v[MAXPAIRS]
    cdef unsigned long long pow3[MAXPAIRS + 1]
    cdef unsigned long long covered
    cdef list matches

    def __init__(self, int n, int pred):
        cdef int u, v, d
        self.n = n
        self.pred = pred
        self.npairs = 0
        for u in range(n):
            for v in range(u + 1, n):
                self.pair_u[self.npairs] = u
                self.pair_v[self.npairs] = v
                self.npairs += 1
        self.pow3[self.npairs] = 1
        for d in range(self.npairs - 1, -1, -1):
            self.pow3[d] = 3 * self.pow3[d + 1]
        for u in range(n):
            self.out_mask[u] = 0
            self.out_deg[u] = 0
            self.in_deg[u] = 0
        self.covered = 0
        self.matches = []

    cdef inline void apply_state(self, int u, int v, int state) nogil:
        if state == 1:
            self.out_mask[u] |= 1ULL << v
            self.out_deg[u] += 1
            self.in_deg[v] += 1
        elif state == 2:
            self.out_mask[v] |= 1ULL << u
            self.out_deg[v] += 1
            self.in_deg[u] += 1

    cdef inline void unapply_state(self, int u, int v, int state) nogil:
        if state == 1:
            self.out_mask[u] &= ~(1ULL << v)
            self.out_deg[u] -= 1
            self.in_deg[v] -= 1
        elif state == 2:
            self.out_mask[v] &= ~(1ULL << u)
            self.out_deg[v] -= 1
            self.in_deg[u] -= 1

    cdef inline bint block_prune(self, int b) nogil:
        if self.pred == 2:
            return self.out_deg[b] == 0
        if self.pred == 4:
            return self.out_deg[b] != self.in_deg[b]
        if self.pred == 3:
            return self.out_deg[b] == 0 and self.in_deg[b] > 0
        return False

    cdef inline int second_count(self, int v) nogil:
        cdef unsigned long long m = self.out_mask[v]
        cdef unsigned long long mm = m
        cdef unsigned long long reach = 0
        while mm:
            reach |= self.out_mask[__builtin_ctzll(mm)]
            mm &= mm - 1
        return __builtin_popcountll(reach & ~m & ~(1ULL << v))

    cdef inline bint leaf_match(self) nogil:
        cdef int v
        if self.pred == 1:
            for v in range(self.n):
                if self.second_count(v) != self.out_deg[v]:
                    return False
            return True
        if self.pred == 2:
            for v in range(self.n):
                if self.second_count(v) >= self.out_deg[v]:
                    return False
            return True
        if self.pred == 3:
            for v in range(self.n):
                if self.second_count(v) != self.in_deg[v]:
                    return False
            return True
        for v in range(self.n):
            if self.out_deg[v] != self.in_deg[v]:
                return False
        for v in range(self.n):
            if self.second_count(v) != self.out_deg[v]:
                return False
        return True

    cdef bytes encode(self):
        cdef bytearray flat = bytearray()
        cdef int u
        cdef unsigned long long mm
        for u in range(self.n):
            mm = self.out_mask[u]
            while mm:
                flat.append(u)
                flat.append(__builtin_ctzll(mm))
                mm &= mm - 1
        return bytes(flat)

    cdef void recurse(self, int d):
        cdef int u, v, state
        if d == self.npairs:
            self.covered += 1
            if self.leaf_match():
                self.matches.append(self.encode())
            return
        u = self.pair_u[d]
        v = self.pair_v[d]
        for state in range(3):
            self.apply_state(u, v, state)
            if v == self.n - 1 and self.block_prune(u):
                self.covered += self.pow3[d + 1]
            else:
                self.recurse(d + 1)
            self.unapply_state(u, v, state)


def scan_predicate(int n, int pred, prefix=()):
    """Scan all orientations on n vertices for the given predicate.

    prefix forces the first len(prefix) pairs to the given states (sharding).
    Returns (covered, matches).
    """
    # covered is a 64-bit counter; 3^C(n,2) must fit (n <= 9 gives 3^36)
    if n > 9:
        raise ValueError(f"n={n} exceeds the compiled scan limit 9")
    cdef _PredScan scan = _PredScan(n, pred)
    if len(prefix) > scan.npairs:
        raise ValueError(f"prefix of length {len(prefix)} exceeds {scan.npairs} pairs")
    cdef int d, u, v, state
    cdef bint dead = False
    for d in range(len(prefix)):
        state = prefix[d]
        u = scan.pair_u[d]
        v = scan.pair_v[d]
        scan.apply_state(u, v, state)
        if v == n - 1 and scan.block_prune(u):
            dead = True
            break
    if dead:
        return int(scan.pow3[len(prefix)]), []
    scan.recurse(len(prefix))
    return int(scan.covered), scan.matches


cdef class _CensusScan:
    cdef int n, npairs, degree
    cdef unsigned long long full
    cdef unsigned long long out_mask[MAXN]
    cdef unsigned long long in_mask[MAXN]
    cdef int out_deg[MAXN]
    cdef int pair_u[MAXPAIRS]
    cdef int pair_v[MAXPAIRS]
    cdef unsigned long long visited
    cdef list matches

    def __init__(self, int n, int degree):
        cdef int u, v
        self.n = n
        self.degree = degree
        self.full = (1ULL << n) - 1
        self.npairs = 0
        for u in range(n):
            for v in range(u + 1, n):
                self.pair_u[self.npairs] = u
                self.pair_v[self.npairs] = v
                self.npairs += 1
        for u in range(n):
            self.out_mask[u] = 0
            self.in_mask[u] = 0
            self.out_deg[u] = 0
        self.visited = 0
        self.matches = []

    cdef inline int second_count(self, int v) nogil:
        cdef unsigned long long m = self.out_mask[v]
        cdef unsigned long long mm = m
        cdef unsigned long long reach = 0
        while mm:
            reach |= self.out_mask[__builtin_ctzll(mm)]
            mm &= mm - 1
        return __builtin_popcountll(reach & ~m & ~(1ULL << v))

    cdef bint block_prune(self, int b) nogil:
        cdef unsigned long long settled
        cdef int t
        if self.degree == 2 and self.out_deg[b] != 2:
            return True
        if self.out_deg[b] == 0:
            return True
        settled = (1ULL << (b + 1)) - 1
        for t in range(b + 1):
            if self.out_mask[t] & ~settled:
                continue
            if self.second_count(t) != self.out_deg[t]:
                return True
        return False

    cdef unsigned long long closure(self, unsigned long long *rows) nogil:
        cdef unsigned long long reach = 1
        cdef unsigned long long frontier = 1
        cdef unsigned long long new, mm
        while frontier:
            new = 0
            mm = frontier
            while mm:
                new |= rows[__builtin_ctzll(mm)]
                mm &= mm - 1
            frontier = new & ~reach
            reach |= new
        return reach

    cdef bint leaf_match(self) nogil:
        cdef int v
        for v in range(self.n):
            if self.degree == 2 and self.out_deg[v] != 2:
                return False
            if self.out_deg[v] == 0:
                return False
            if self.second_count(v) != self.out_deg[v]:
                return False
        if self.closure(self.out_mask) != self.full:
            return False
        return self.closure(self.in_mask) == self.full

    cdef bytes encode(self):
        cdef bytearray flat = bytearray()
        cdef int u
        cdef unsigned long long mm
        for u in range(self.n):
            mm = self.out_mask[u]
            while mm:
                flat.append(u)
                flat.append(__builtin_ctzll(mm))
                mm &= mm - 1
        return bytes(flat)

    cdef void recurse(self, int d):
        cdef int u, v, state, first, last
        if d == self.npairs:
            self.visited += 1
            if self.leaf_match():
                self.matches.append(self.encode())
            return
        u = self.pair_u[d]
        v = self.pair_v[d]
        for state in range(3):
            if u == 0:
                # vertex 0's out-set is forced: {1} (degree 1) or {1,2} (degree 2)
                if v == 1 or (self.degree == 2 and v == 2):
                    if state != 1:
                        continue
                elif state == 1:
                    continue
            if self.degree == 2:
                if state == 1 and self.out_deg[u] >= 2:
                    continue
                if state == 2 and self.out_deg[v] >= 2:
                    continue
            if state == 1:
                self.out_mask[u] |= 1ULL << v
                self.in_mask[v] |= 1ULL << u
                self.out_deg[u] += 1
            elif state == 2:
                self.out_mask[v] |= 1ULL << u
                self.in_mask[u] |= 1ULL << v
                self.out_deg[v] += 1
            if not (v == self.n - 1 and self.block_prune(u)):
                self.recurse(d + 1)
            if state == 1:
                self.out_mask[u] &= ~(1ULL << v)
                self.in_mask[v] &= ~(1ULL << u)
                self.out_deg[u] -= 1
            elif state == 2:
                self.out_mask[v] &= ~(1ULL << u)
                self.in_mask[u] &= ~(1ULL << v)
                self.out_deg[v] -= 1


def scan_degree_census(int n, int degree):
    """Strongly connected Seymour-tight census under a degree restriction.

    Same contract as the pure twin; see seytight._scan_py.scan_degree_census.
    """
    if n > MAXN:
        raise ValueError(f"n={n} exceeds the compiled limit {MAXN}")
    if degree not in (1, 2):
        raise ValueError(f"degree must be 1 or 2, got {degree}")
    cdef _CensusScan scan = _CensusScan(n, degree)
    scan.recurse(0)
    return int(scan.visited), scan.matches
