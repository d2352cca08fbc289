"""Exact isomorphism test for small graphs.

Colour refinement on the disjoint union of both graphs, then
individualisation of one vertex per step with backtracking.  Fine up to a
few dozen vertices, which is all the cospectral certification needs.
"""

from __future__ import annotations

from collections import Counter

from .errors import TooLarge
from .graph import Graph

MAX_VERTICES = 64


def _refine(adj: list[list[int]], colors: list[int]) -> list[int]:
    """Stable colouring; colour ids are canonical for the pair being compared."""
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(len(adj))]
        ids = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ids[s] for s in sigs]
        if len(ids) == len(set(colors)):
            return new
        colors = new


def _search(adj: list[list[int]], n: int, colors: list[int]) -> bool:
    colors = _refine(adj, colors)
    left, right = colors[:n], colors[n:]
    if Counter(left) != Counter(right):
        return False
    classes: dict[int, list[int]] = {}
    for v, c in enumerate(left):
        classes.setdefault(c, []).append(v)
    open_classes = [vs for vs in classes.values() if len(vs) > 1]
    if not open_classes:
        where = {c: n + i for i, c in enumerate(right)}
        image = [where[c] - n for c in left]
        return all(
            {image[w] for w in adj[v]} == {w - n for w in adj[n + image[v]]}
            for v in range(n)
        )
    target = min(open_classes, key=len)
    v = target[0]
    c = left[v]
    fresh = max(colors) + 1
    for w in range(n, 2 * n):
        if colors[w] != c:
            continue
        trial = list(colors)
        trial[v] = trial[w] = fresh
        if _search(adj, n, trial):
            return True
    return False


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n > MAX_VERTICES or g2.n > MAX_VERTICES:
        raise TooLarge(f"isomorphism check limited to {MAX_VERTICES} vertices")
    if g1.n != g2.n or g1.m != g2.m or sorted(g1.degrees) != sorted(g2.degrees):
        return False
    n = g1.n
    if n == 0:
        return True
    adj = [g1.neighbors(v) for v in range(n)] + [[w + n for w in g2.neighbors(v)] for v in range(n)]
    return _search(adj, n, [0] * (2 * n))
