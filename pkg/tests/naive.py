"""Independent brute-force oracles for cross-checking the searchers.

Everything here is deliberately written from scratch against the witness
definitions, with no shared code or search strategy with the package
kernels: plain enumeration over junction tuples, simple paths, vertex
subsets and color assignments.
"""

from itertools import combinations, permutations

from fourblocks import Digraph, UGraph, OutTree


def _simple_dipaths(d: Digraph, start: int, end: int, banned: set):
    """All simple dipaths start..end whose interior avoids banned vertices."""
    path = [start]
    on_path = {start}

    def rec(u):
        for v in d.out_neighbors(u):
            if v == end:
                yield tuple(path) + (v,)
            elif v not in banned and v not in on_path:
                path.append(v)
                on_path.add(v)
                yield from rec(v)
                path.pop()
                on_path.remove(v)

    yield from rec(start)


def has_cycle_subdivision(d: Digraph, blocks) -> bool:
    """Existence of a subdivision of C(*blocks) by full enumeration."""
    k1, k2, k3, k4 = blocks
    for j1, j2, j3, j4 in permutations(range(d.n), 4):
        junctions = {j1, j2, j3, j4}
        for p1 in _simple_dipaths(d, j1, j2, junctions):
            if len(p1) - 1 < k1:
                continue
            used1 = junctions | set(p1[1:-1])
            for p2 in _simple_dipaths(d, j3, j2, used1):
                if len(p2) - 1 < k2:
                    continue
                used2 = used1 | set(p2[1:-1])
                for p3 in _simple_dipaths(d, j3, j4, used2):
                    if len(p3) - 1 < k3:
                        continue
                    used3 = used2 | set(p3[1:-1])
                    for p4 in _simple_dipaths(d, j1, j4, used3):
                        if len(p4) - 1 >= k4:
                            return True
    return False


def _paths_from(d: Digraph, origin: int, banned: set):
    """All simple dipaths leaving origin (including the trivial one)."""
    path = [origin]
    on_path = {origin}

    def rec(u):
        yield tuple(path)
        for v in d.out_neighbors(u):
            if v not in banned and v not in on_path:
                path.append(v)
                on_path.add(v)
                yield from rec(v)
                path.pop()
                on_path.remove(v)

    yield from rec(origin)


def has_two_block_path(d: Digraph, a: int, b: int) -> bool:
    for origin in range(d.n):
        for p1 in _paths_from(d, origin, set()):
            if len(p1) - 1 < a:
                continue
            used = set(p1) - {origin}
            for p2 in _paths_from(d, origin, used):
                if len(p2) - 1 >= b:
                    return True
    return False


def has_k_wheel(g: UGraph, k: int) -> bool:
    """Enumerate every cycle as an ordered vertex subset, then every center."""
    for size in range(3, g.n + 1):
        for subset in combinations(range(g.n), size):
            first = subset[0]
            for perm in permutations(subset[1:]):
                if perm[0] > perm[-1]:
                    continue
                cycle = (first,) + perm
                if not all(
                    g.has_edge(cycle[i], cycle[(i + 1) % size]) for i in range(size)
                ):
                    continue
                cset = set(cycle)
                for center in range(g.n):
                    if center in cset:
                        continue
                    if sum(1 for x in g.neighbors(center) if x in cset) >= k:
                        return True
    return False


def lca_by_path_intersection(t: OutTree, x: int, y: int) -> int:
    def root_path(v):
        path = [v]
        while t.parent[path[-1]] is not None:
            path.append(t.parent[path[-1]])
        return path

    common = set(root_path(x)) & set(root_path(y))
    return max(common, key=lambda v: t.level[v])


def is_colorable(g: UGraph, q: int) -> bool:
    colors: dict[int, int] = {}

    def rec(v: int, max_used: int) -> bool:
        if v == g.n:
            return True
        taken = {colors[w] for w in g.neighbors(v) if w in colors}
        for c in range(min(max_used + 1, q - 1) + 1):
            if c not in taken:
                colors[v] = c
                if rec(v + 1, max(max_used, c)):
                    return True
                del colors[v]
        return False

    if q <= 0:
        return g.n == 0
    return rec(0, -1)


def chromatic_number(g: UGraph) -> int:
    q = 0
    while not is_colorable(g, q):
        q += 1
    return q
