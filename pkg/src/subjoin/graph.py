"""Simple undirected graphs, standard generators and the subdivision joins.

Edges are stored as a sorted tuple of ``(u, v)`` pairs with ``u < v``.  The
edge ordering is lexicographic, and that ordering fixes the column order of
the incidence matrix, the vertex order of the line graph and the index of
every inserted vertex in a subdivision.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from itertools import combinations
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidGraph, NonRegular


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or self.n < 0:
            raise InvalidGraph(f"vertex count must be a nonnegative integer, got {self.n!r}")
        seen = set()
        for e in self.edges:
            u, v = (int(x) for x in e)
            if u == v:
                raise InvalidGraph(f"self-loop at vertex {u}")
            if u > v:
                u, v = v, u
            if u < 0 or v >= self.n:
                raise InvalidGraph(f"edge ({u}, {v}) out of range for n={self.n}")
            seen.add((u, v))
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "edges", tuple(sorted(seen)))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        return cls(n, tuple(tuple(e) for e in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        """Adjacency as one bitset per vertex."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.neighbor_masks[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        mask = self.neighbor_masks[v]
        return [w for w in range(self.n) if mask >> w & 1]

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in range(self.n):
                if frontier >> v & 1:
                    nxt |= self.neighbor_masks[v]
            frontier = nxt & ~seen
            seen |= nxt
        return seen == (1 << self.n) - 1

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class RegularGraph:
    """A graph together with a certificate of its common degree."""

    graph: Graph
    r: int

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m


class JoinKind(str, Enum):
    SV = "sv"
    SE = "se"


@dataclass(frozen=True)
class JoinLayout:
    """Vertex index convention of a join: V(G1), then I(G1), then V(G2)."""

    kind: JoinKind
    n1: int
    m1: int
    n2: int
    m2: int = field(default=0)

    @property
    def total(self) -> int:
        return self.n1 + self.m1 + self.n2

    @property
    def original(self) -> range:
        return range(0, self.n1)

    @property
    def inserted(self) -> range:
        return range(self.n1, self.n1 + self.m1)

    @property
    def second(self) -> range:
        return range(self.n1 + self.m1, self.total)

    @property
    def expected_edges(self) -> int:
        if self.kind is JoinKind.SV:
            return 2 * self.m1 + self.n1 * self.n2 + self.m2
        return 2 * self.m1 + self.m1 * self.n2 + self.m2


def as_regular(g: Graph) -> RegularGraph:
    degs = set(g.degrees)
    if len(degs) > 1:
        raise NonRegular(f"graph is not regular (degrees {sorted(degs)})")
    return RegularGraph(g, degs.pop() if degs else 0)


def is_regular(g: Graph) -> bool:
    return len(set(g.degrees)) <= 1


# -- constructions ----------------------------------------------------------

def subdivision(g: Graph) -> Graph:
    """Insert a vertex into every edge; edge ``j`` gets vertex ``n + j``."""
    edges = []
    for j, (u, v) in enumerate(g.edges):
        edges.append((u, g.n + j))
        edges.append((v, g.n + j))
    return Graph.from_edges(g.n + g.m, edges)


def _check_join_inputs(g1: Graph, g2: Graph):
    if g2.n < 1:
        raise InvalidGraph("the second join operand needs at least one vertex")


def sv_join(g1: Graph, g2: Graph) -> tuple[Graph, JoinLayout]:
    """Subdivision-vertex join: S(g1) and g2 with V(g1) joined to V(g2)."""
    _check_join_inputs(g1, g2)
    layout = JoinLayout(JoinKind.SV, g1.n, g1.m, g2.n, g2.m)
    off = g1.n + g1.m
    edges = list(subdivision(g1).edges)
    edges += [(u, off + w) for u in range(g1.n) for w in range(g2.n)]
    edges += [(off + u, off + v) for u, v in g2.edges]
    return Graph.from_edges(layout.total, edges), layout


def se_join(g1: Graph, g2: Graph) -> tuple[Graph, JoinLayout]:
    """Subdivision-edge join: S(g1) and g2 with I(g1) joined to V(g2)."""
    _check_join_inputs(g1, g2)
    layout = JoinLayout(JoinKind.SE, g1.n, g1.m, g2.n, g2.m)
    off = g1.n + g1.m
    edges = list(subdivision(g1).edges)
    edges += [(g1.n + j, off + w) for j in range(g1.m) for w in range(g2.n)]
    edges += [(off + u, off + v) for u, v in g2.edges]
    return Graph.from_edges(layout.total, edges), layout


def join(kind: JoinKind | str, g1: Graph, g2: Graph) -> tuple[Graph, JoinLayout]:
    return sv_join(g1, g2) if JoinKind(kind) is JoinKind.SV else se_join(g1, g2)


def incidence_matrix(g: Graph) -> np.ndarray:
    R = np.zeros((g.n, g.m), dtype=np.int64)
    for j, (u, v) in enumerate(g.edges):
        R[u, j] = R[v, j] = 1
    return R


def line_graph(g: Graph) -> Graph:
    edges = [
        (i, j)
        for (i, e), (j, f) in combinations(enumerate(g.edges), 2)
        if set(e) & set(f)
    ]
    return Graph.from_edges(g.m, edges)


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    off = 0
    for g in graphs:
        edges += [(u + off, v + off) for u, v in g.edges]
        off += g.n
    return Graph.from_edges(off, edges)


def complement(g: Graph) -> Graph:
    present = set(g.edges)
    return Graph.from_edges(g.n, [e for e in combinations(range(g.n), 2) if e not in present])


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Image of ``g`` under the vertex map ``v -> perm[v]``."""
    return Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges])


# -- matrices ---------------------------------------------------------------

def adjacency(g: Graph) -> np.ndarray:
    A = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.edges:
        A[u, v] = A[v, u] = 1
    return A


def degree_matrix(g: Graph) -> np.ndarray:
    return np.diag(np.array(g.degrees, dtype=np.int64)).reshape(g.n, g.n)


def laplacian(g: Graph) -> np.ndarray:
    return degree_matrix(g) - adjacency(g)


def signless_laplacian(g: Graph) -> np.ndarray:
    return degree_matrix(g) + adjacency(g)


class MatrixKind(str, Enum):
    A = "A"
    L = "L"
    Q = "Q"

    @classmethod
    def parse(cls, value: "MatrixKind | str") -> "MatrixKind":
        if isinstance(value, cls):
            return value
        return cls(str(value).upper())


def graph_matrix(g: Graph, kind: MatrixKind | str) -> np.ndarray:
    kind = MatrixKind.parse(kind)
    if kind is MatrixKind.A:
        return adjacency(g)
    if kind is MatrixKind.L:
        return laplacian(g)
    return signless_laplacian(g)


# -- generators -------------------------------------------------------------

def _need(cond: bool, msg: str):
    if not cond:
        raise InvalidGraph(msg)


def cycle(n: int) -> Graph:
    _need(n >= 3, f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    _need(n >= 1, f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    _need(n >= 1, f"complete graph needs n >= 1, got {n}")
    return Graph.from_edges(n, combinations(range(n), 2))


def empty(n: int) -> Graph:
    _need(n >= 1, f"empty graph needs n >= 1, got {n}")
    return Graph(n)


def complete_bipartite(p: int, q: int) -> Graph:
    _need(p >= 1 and q >= 1, f"complete bipartite graph needs p, q >= 1, got {p}, {q}")
    return Graph.from_edges(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def star(k: int) -> Graph:
    """K_{1,k}."""
    return complete_bipartite(1, k)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def circulant(n: int, offsets: Iterable[int]) -> Graph:
    offsets = sorted({int(o) for o in offsets})
    _need(n >= 1, f"circulant needs n >= 1, got {n}")
    _need(len(offsets) > 0, "circulant needs at least one offset")
    _need(all(0 < o <= n // 2 for o in offsets), f"offsets must lie in [1, {n // 2}], got {offsets}")
    return Graph.from_edges(n, [(i, (i + o) % n) for i in range(n) for o in offsets])


def erdos_renyi(n: int, p: float, seed: int | None = None) -> Graph:
    _need(n >= 1, f"Erdos-Renyi graph needs n >= 1, got {n}")
    _need(0.0 <= p <= 1.0, f"edge probability must lie in [0, 1], got {p}")
    rng = np.random.default_rng(seed)
    pairs = list(combinations(range(n), 2))
    keep = rng.random(len(pairs)) < p
    return Graph.from_edges(n, [e for e, k in zip(pairs, keep) if k])


GENERATORS = {
    "cycle": cycle,
    "path": path,
    "complete": complete,
    "empty": empty,
    "complete-bipartite": complete_bipartite,
    "star": star,
    "petersen": petersen,
    "circulant": circulant,
    "erdos-renyi": erdos_renyi,
}


# -- serialization ----------------------------------------------------------

def to_dict(g: Graph) -> dict:
    return {"n": g.n, "edges": [[u, v] for u, v in g.edges]}


def to_json(g: Graph) -> str:
    """Canonical JSON: sorted edges, no optional whitespace."""
    return json.dumps(to_dict(g), separators=(",", ":"))


def from_dict(data: dict) -> Graph:
    try:
        n = data["n"]
        raw = data.get("edges", [])
    except (TypeError, KeyError) as exc:
        raise InvalidGraph(f"graph object needs 'n' and 'edges': {exc}") from None
    if isinstance(n, bool) or not isinstance(n, int):
        raise InvalidGraph(f"'n' must be an integer, got {n!r}")
    pairs = []
    for e in raw:
        if len(e) != 2 or not all(isinstance(x, int) and not isinstance(x, bool) for x in e):
            raise InvalidGraph(f"bad edge entry {e!r}")
        u, v = e
        if u >= v:
            raise InvalidGraph(f"edge [{u}, {v}] must satisfy u < v")
        pairs.append((u, v))
    if len(set(pairs)) != len(pairs):
        raise InvalidGraph("duplicate edges")
    return Graph.from_edges(n, pairs)


def from_json(text: str) -> Graph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidGraph(f"invalid JSON: {exc}") from None
    return from_dict(data)


def from_edge_list(text: str) -> Graph:
    """Plain text: vertex count on the first line, then one ``u v`` pair per line."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise InvalidGraph("empty edge list")
    try:
        n = int(lines[0])
        pairs = [tuple(int(x) for x in ln.split()) for ln in lines[1:]]
    except ValueError as exc:
        raise InvalidGraph(f"bad edge list: {exc}") from None
    for p in pairs:
        if len(p) != 2:
            raise InvalidGraph(f"edge line must hold two integers, got {p}")
    return Graph.from_edges(n, pairs)


def parse_graph(text: str) -> Graph:
    return from_json(text) if text.lstrip().startswith("{") else from_edge_list(text)


def load_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text())
