"""Saturation-greedy and exact branch-and-bound coloring, desk scale.

Both operate on a plain undirected adjacency mapping restricted to an
explicit vertex set, so they work on induced subgraphs without relabeling.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Optional

from .errors import BudgetExceeded


def dsatur(vertices: Iterable[int], adj: Mapping[int, set[int]]) -> dict[int, int]:
    """Greedy coloring by descending saturation; ties by degree then id."""
    vs = sorted(vertices)
    vset = set(vs)
    colors: dict[int, int] = {}
    neighbor_colors: dict[int, set[int]] = {v: set() for v in vs}
    degree = {v: len(adj.get(v, set()) & vset) for v in vs}
    for _ in vs:
        v = max(
            (u for u in vs if u not in colors),
            key=lambda u: (len(neighbor_colors[u]), degree[u], -u),
        )
        c = 0
        while c in neighbor_colors[v]:
            c += 1
        colors[v] = c
        for w in adj.get(v, set()):
            if w in vset and w not in colors:
                neighbor_colors[w].add(c)
    return colors


def color_within(
    vertices: Iterable[int],
    adj: Mapping[int, set[int]],
    q: int,
    budget: int,
) -> Optional[dict[int, int]]:
    """Exact decision: a proper coloring with at most q colors, or None when
    provably impossible. Raises BudgetExceeded when the node budget runs out.

    DSATUR-ordered branch and bound; new colors are only opened one past the
    current maximum, which prunes color permutations.
    """
    vs = sorted(vertices)
    if not vs:
        return {}
    if q < 1:
        return None
    vset = set(vs)
    neighbors = {v: sorted(adj.get(v, set()) & vset) for v in vs}
    colors: dict[int, int] = {}
    nodes = 0

    def pick() -> int:
        return max(
            (u for u in vs if u not in colors),
            key=lambda u: (
                len({colors[w] for w in neighbors[u] if w in colors}),
                len(neighbors[u]),
                -u,
            ),
        )

    def solve(max_used: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(nodes)
        if len(colors) == len(vs):
            return True
        v = pick()
        taken = {colors[w] for w in neighbors[v] if w in colors}
        limit = min(max_used + 1, q - 1)
        for c in range(limit + 1):
            if c not in taken:
                colors[v] = c
                if solve(max(max_used, c)):
                    return True
                del colors[v]
        return False

    if solve(-1):
        return dict(colors)
    return None
