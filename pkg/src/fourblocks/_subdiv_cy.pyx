# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled kernel for the four-blocks cycle subdivision search.

Transliteration of _subdiv_py with identical visit order and node
accounting; see that module for the algorithm description. Kept in lockstep
so the two kernels are interchangeable and return identical results.
"""

from libc.stdlib cimport malloc, free

FOUND = 0
ABSENT = 1
BUDGET = 2


cdef class _Search:
    cdef int n
    cdef int* indptr
    cdef int* indices
    cdef int* path_buf        # 4 rows of n+1 vertices
    cdef char* used
    cdef int[4] mins
    cdef int[4] rem_after
    cdef int[4] starts
    cdef int[4] targets
    cdef int[4] path_len
    cdef int L
    cdef long long nodes
    cdef long long budget

    def __cinit__(self, int n, object indptr, object indices):
        cdef int i, m
        self.n = n
        m = len(indices)
        self.indptr = <int*>malloc((n + 1) * sizeof(int))
        self.indices = <int*>malloc((m if m > 0 else 1) * sizeof(int))
        self.path_buf = <int*>malloc(4 * (n + 1) * sizeof(int))
        self.used = <char*>malloc(n * sizeof(char))
        if not self.indptr or not self.indices or not self.path_buf or not self.used:
            raise MemoryError()
        for i in range(n + 1):
            self.indptr[i] = indptr[i]
        for i in range(m):
            self.indices[i] = indices[i]
        for i in range(n):
            self.used[i] = 0

    def __dealloc__(self):
        if self.indptr:
            free(self.indptr)
        if self.indices:
            free(self.indices)
        if self.path_buf:
            free(self.path_buf)
        if self.used:
            free(self.used)

    cdef int extend(self, int p, int u, int plen, int total):
        cdef int i, v, r, need, kp, tgt
        self.nodes += 1
        if self.nodes > self.budget:
            return -1
        kp = self.mins[p]
        tgt = self.targets[p]
        for i in range(self.indptr[u], self.indptr[u + 1]):
            v = self.indices[i]
            if v == tgt:
                if plen + 1 >= kp and total + 1 + self.rem_after[p] <= self.L:
                    self.path_buf[p * (self.n + 1) + self.path_len[p]] = v
                    self.path_len[p] += 1
                    if p == 3:
                        return 1
                    r = self.begin_path(p + 1, total + 1)
                    if r != 0:
                        return r
                    self.path_len[p] -= 1
            elif not self.used[v]:
                need = kp - (plen + 1)
                if need < 1:
                    need = 1
                if total + 1 + need + self.rem_after[p] <= self.L:
                    self.used[v] = 1
                    self.path_buf[p * (self.n + 1) + self.path_len[p]] = v
                    self.path_len[p] += 1
                    r = self.extend(p, v, plen + 1, total + 1)
                    if r != 0:
                        return r
                    self.path_len[p] -= 1
                    self.used[v] = 0
        return 0

    cdef int begin_path(self, int p, int total):
        cdef int s = self.starts[p]
        cdef int r
        self.path_buf[p * (self.n + 1) + self.path_len[p]] = s
        self.path_len[p] += 1
        r = self.extend(p, s, 0, total)
        if r == 0:
            self.path_len[p] -= 1
        return r

    def run(self, int k1, int k2, int k3, int k4, long long budget):
        cdef int n = self.n
        cdef int total_min = k1 + k2 + k3 + k4
        cdef int extra, j1, j2, j3, j4, v, i, r, p
        cdef bint sym
        if total_min > n:
            return ABSENT, None, 0

        out_deg = [self.indptr[v + 1] - self.indptr[v] for v in range(n)]
        in_deg = [0] * n
        for i in range(self.indptr[n]):
            in_deg[self.indices[i]] += 1
        sources = [v for v in range(n) if out_deg[v] >= 2]
        sinks = [v for v in range(n) if in_deg[v] >= 2]
        if len(sources) < 2 or len(sinks) < 2:
            return ABSENT, None, 0

        sym = (k1 == k3) and (k2 == k4)
        self.mins[0], self.mins[1], self.mins[2], self.mins[3] = k1, k2, k3, k4
        self.rem_after[0] = k2 + k3 + k4
        self.rem_after[1] = k3 + k4
        self.rem_after[2] = k4
        self.rem_after[3] = 0
        self.nodes = 0
        self.budget = budget

        for extra in range(0, n - total_min + 1):
            self.L = total_min + extra
            for j1 in sources:
                for j2 in sinks:
                    if j2 == j1:
                        continue
                    for j3 in sources:
                        if j3 == j1 or j3 == j2 or (sym and j3 < j1):
                            continue
                        for j4 in sinks:
                            if j4 == j1 or j4 == j2 or j4 == j3:
                                continue
                            self.nodes += 1
                            if self.nodes > self.budget:
                                return BUDGET, None, self.nodes
                            self.starts[0] = j1; self.targets[0] = j2
                            self.starts[1] = j3; self.targets[1] = j2
                            self.starts[2] = j3; self.targets[2] = j4
                            self.starts[3] = j1; self.targets[3] = j4
                            self.used[j1] = 1; self.used[j2] = 1
                            self.used[j3] = 1; self.used[j4] = 1
                            for p in range(4):
                                self.path_len[p] = 0
                            r = self.begin_path(0, 0)
                            self.used[j1] = 0; self.used[j2] = 0
                            self.used[j3] = 0; self.used[j4] = 0
                            if r == 1:
                                paths = tuple(
                                    tuple(
                                        self.path_buf[p * (n + 1) + i]
                                        for i in range(self.path_len[p])
                                    )
                                    for p in range(4)
                                )
                                return FOUND, ((j1, j2, j3, j4), paths), self.nodes
                            if r == -1:
                                return BUDGET, None, self.nodes
        return ABSENT, None, self.nodes


def search_cycle_subdivision(n, indptr, indices, k1, k2, k3, k4, budget):
    """Returns (status, payload, nodes); payload is (junctions, paths) on FOUND."""
    return _Search(n, indptr, indices).run(k1, k2, k3, k4, budget)
