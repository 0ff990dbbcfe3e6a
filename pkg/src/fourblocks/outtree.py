"""Spanning out-trees: levels, ancestry, and the final-tree rotation.

Levels count vertices on the root path, so the root has level 1 and a child
has its parent's level plus one. An arc (x,y) of the host digraph is forward
when level(x) < level(y) and backward otherwise (equal levels included).
A tree is final when every backward arc points into its tail's ancestor
chain; rotating offending arcs into the tree always terminates because each
rotation strictly raises some vertex's level.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .digraph import Digraph
from .errors import UnreachableVertex


class ArcKind(Enum):
    FORWARD = "forward"
    BACKWARD = "backward"


@dataclass(frozen=True)
class OutTree:
    """Rooted spanning out-tree with per-vertex parent links and levels."""

    root: int
    parent: tuple[Optional[int], ...]
    level: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.parent)

    def tree_arcs(self) -> frozenset[tuple[int, int]]:
        return frozenset(
            (p, v) for v, p in enumerate(self.parent) if p is not None
        )

    def dump(self) -> str:
        """One line per vertex: 'v parent level', '-' for the root's parent."""
        lines = []
        for v in range(self.n):
            p = self.parent[v]
            lines.append(f"{v} {'-' if p is None else p} {self.level[v]}")
        return "\n".join(lines) + "\n"


def spanning_out_tree(d: Digraph, r: int) -> OutTree:
    """Breadth-first spanning out-tree rooted at r; level = BFS depth + 1."""
    if not (0 <= r < d.n):
        raise ValueError(f"root {r} out of range")
    parent: list[Optional[int]] = [None] * d.n
    level = [0] * d.n
    level[r] = 1
    queue = deque([r])
    while queue:
        u = queue.popleft()
        for v in d.out_neighbors(u):
            if v != r and level[v] == 0:
                parent[v] = u
                level[v] = level[u] + 1
                queue.append(v)
    for v in range(d.n):
        if level[v] == 0:
            raise UnreachableVertex(v)
    return OutTree(r, tuple(parent), tuple(level))


def is_ancestor(t: OutTree, y: int, x: int) -> bool:
    """True iff y lies on the tree path from the root to x (reflexive)."""
    ly = t.level[y]
    while t.level[x] > ly:
        x = t.parent[x]  # type: ignore[assignment]
    return x == y


def lca(t: OutTree, x: int, y: int) -> int:
    """Deepest common ancestor, by pairwise level lifting."""
    while t.level[x] > t.level[y]:
        x = t.parent[x]  # type: ignore[assignment]
    while t.level[y] > t.level[x]:
        y = t.parent[y]  # type: ignore[assignment]
    while x != y:
        x = t.parent[x]  # type: ignore[assignment]
        y = t.parent[y]  # type: ignore[assignment]
    return x


def classify_arc(t: OutTree, arc: tuple[int, int]) -> ArcKind:
    u, v = arc
    return ArcKind.FORWARD if t.level[u] < t.level[v] else ArcKind.BACKWARD


def is_final(d: Digraph, t: OutTree) -> bool:
    """Every backward arc (x,y) must satisfy y on the root path of x."""
    for x, y in d.arcs:
        if t.level[x] >= t.level[y] and not is_ancestor(t, y, x):
            return False
    return True


def finalize(d: Digraph, t: OutTree) -> OutTree:
    """Rotate backward arcs into the tree until it is final.

    Arcs are scanned in (tail, head) order; the first backward arc (x,y)
    whose head is not an ancestor of its tail is rotated: y is reparented
    under x and the levels of y's subtree are recomputed. Every rotation
    strictly increases y's level, and no level ever decreases, so the total
    level sum is a strictly increasing potential bounded by n*n.
    """
    parent: list[Optional[int]] = list(t.parent)
    level: list[int] = list(t.level)
    arcs = sorted(d.arcs)

    def ancestor(y: int, x: int) -> bool:
        ly = level[y]
        while level[x] > ly:
            x = parent[x]  # type: ignore[assignment]
        return x == y

    while True:
        rotated = False
        for x, y in arcs:
            if level[x] >= level[y] and not ancestor(y, x):
                parent[y] = x
                # relevel the subtree of y
                children: list[list[int]] = [[] for _ in range(d.n)]
                for v, p in enumerate(parent):
                    if p is not None:
                        children[p].append(v)
                level[y] = level[x] + 1
                stack = [y]
                while stack:
                    u = stack.pop()
                    for c in children[u]:
                        level[c] = level[u] + 1
                        stack.append(c)
                rotated = True
                break
        if not rotated:
            return OutTree(t.root, tuple(parent), tuple(level))
