"""Small simple graphs, subgraph search and exact Turán numbers."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .errors import DomainError, ParseError


@dataclass(frozen=True)
class SimpleGraph:
    """Graph on vertices ``1..vertex_count``; edges stored as sorted pairs."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.vertex_count < 0:
            raise DomainError("negative vertex count")
        seen = set()
        norm = []
        for u, v in self.edges:
            if u == v:
                raise DomainError(f"loop at vertex {u}")
            e = (min(u, v), max(u, v))
            if not (1 <= e[0] and e[1] <= self.vertex_count):
                raise DomainError(f"edge {e} outside 1..{self.vertex_count}")
            if e in seen:
                raise DomainError(f"repeated edge {e}")
            seen.add(e)
            norm.append(e)
        object.__setattr__(self, "edges", tuple(norm))

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], vertex_count: int | None = None) -> "SimpleGraph":
        edges = list(edges)
        if vertex_count is None:
            vertex_count = max((max(e) for e in edges), default=0)
        return cls(vertex_count, tuple(edges))

    def degrees(self) -> list[int]:
        deg = [0] * (self.vertex_count + 1)
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg[1:]

    def adjacency(self) -> list[int]:
        """Neighbour bitmasks, index ``v-1`` holds bit ``w-1`` for each neighbour ``w``."""
        adj = [0] * self.vertex_count
        for u, v in self.edges:
            adj[u - 1] |= 1 << (v - 1)
            adj[v - 1] |= 1 << (u - 1)
        return adj


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, tuple((i, i + 1) for i in range(1, n)))


def cycle_graph(n: int) -> SimpleGraph:
    if n < 3:
        raise DomainError("a cycle needs at least 3 vertices")
    return SimpleGraph(n, tuple((i, i % n + 1) for i in range(1, n + 1)))


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, tuple(itertools.combinations(range(1, n + 1), 2)))


def complete_bipartite(s: int, t: int) -> SimpleGraph:
    return SimpleGraph(s + t, tuple((i, s + j) for i in range(1, s + 1) for j in range(1, t + 1)))


NAMED_GRAPHS = {
    "edge": lambda: SimpleGraph(2, ((1, 2),)),
    "path3": lambda: path_graph(3),
    "path_3": lambda: path_graph(3),
    "triangle": lambda: cycle_graph(3),
    "C4": lambda: cycle_graph(4),
}


def named_graph(spec: str) -> SimpleGraph:
    """``edge``, ``path3``, ``triangle``, ``C4``, or ``path:n`` / ``cycle:n`` / ``K:n`` / ``K:s,t``."""
    if spec in NAMED_GRAPHS:
        return NAMED_GRAPHS[spec]()
    name, _, arg = spec.partition(":")
    try:
        params = [int(x) for x in arg.split(",")] if arg else []
    except ValueError as exc:
        raise ParseError(f"bad graph parameters in {spec!r}") from exc
    if name == "path" and len(params) == 1:
        return path_graph(params[0])
    if name == "cycle" and len(params) == 1:
        return cycle_graph(params[0])
    if name == "K" and len(params) == 1:
        return complete_graph(params[0])
    if name == "K" and len(params) == 2:
        return complete_bipartite(*params)
    raise ParseError(f"unknown graph {spec!r}")


def parse_graph(text: str) -> SimpleGraph:
    """First line ``n e``, then ``e`` lines ``u v`` (1-indexed vertices)."""
    lines = [ln.split("#", 1)[0].split() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or len(lines[0]) != 2:
        raise ParseError("graph text must start with 'n e'")
    try:
        n, e = (int(x) for x in lines[0])
        edges = [(int(a), int(b)) for a, b in lines[1:]]
    except ValueError as exc:
        raise ParseError(f"bad graph text: {exc}") from exc
    if len(edges) != e:
        raise ParseError(f"expected {e} edges, found {len(edges)}")
    return SimpleGraph(n, tuple(edges))


def format_graph(G: SimpleGraph) -> str:
    lines = [f"{G.vertex_count} {len(G.edges)}"] + [f"{u} {v}" for u, v in G.edges]
    return "\n".join(lines) + "\n"


def load_graph(spec: str) -> SimpleGraph:
    p = Path(spec)
    if p.is_file():
        return parse_graph(p.read_text())
    return named_graph(spec)


def is_forest(G: SimpleGraph) -> bool:
    parent = list(range(G.vertex_count + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in G.edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def is_bipartite(G: SimpleGraph) -> bool:
    color = [0] * (G.vertex_count + 1)
    adj = [[] for _ in range(G.vertex_count + 1)]
    for u, v in G.edges:
        adj[u].append(v)
        adj[v].append(u)
    for s in range(1, G.vertex_count + 1):
        if color[s]:
            continue
        color[s] = 1
        stack = [s]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if not color[y]:
                    color[y] = -color[x]
                    stack.append(y)
                elif color[y] == color[x]:
                    return False
    return True


# --- subgraph search ---------------------------------------------------------


def _edge_order(H: SimpleGraph) -> list[int]:
    """Order H's non-isolated vertices so each one after the first of its
    component is adjacent to an earlier one; high degree first."""
    deg = H.degrees()
    adj = H.adjacency()
    left = {v for v in range(H.vertex_count) if deg[v] > 0}
    order: list[int] = []
    while left:
        frontier = [v for v in left if any((adj[v] >> u) & 1 for u in order)]
        pool = frontier or list(left)
        v = max(pool, key=lambda x: (deg[x], -x))
        order.append(v)
        left.remove(v)
    return order


def _embed_edges(adj_g: list[int], deg_g: list[int], H: SimpleGraph, order: list[int], pinned: dict[int, int]) -> bool:
    """Injective map of H's non-isolated vertices into G preserving edges.

    ``pinned`` fixes some H vertices (0-based) to G vertices.  Candidates are
    filtered by degree (a vertex of degree d needs a host of degree >= d).
    """
    adj_h = H.adjacency()
    deg_h = H.degrees()
    n = len(adj_g)
    image = dict(pinned)
    used = 0
    for g in pinned.values():
        used |= 1 << g
    rest = [v for v in order if v not in pinned]

    def ok(v: int, g: int) -> bool:
        if deg_g[g] < deg_h[v]:
            return False
        for u, gu in image.items():
            if (adj_h[v] >> u) & 1 and not (adj_g[g] >> gu) & 1:
                return False
        return True

    for v, g in pinned.items():
        if not ok(v, g):
            return False

    def rec(i: int, used: int) -> bool:
        if i == len(rest):
            return True
        v = rest[i]
        cand = (1 << n) - 1
        for u, gu in image.items():
            if (adj_h[v] >> u) & 1:
                cand &= adj_g[gu]
        cand &= ~used
        while cand:
            low = cand & -cand
            g = low.bit_length() - 1
            cand ^= low
            if ok(v, g):
                image[v] = g
                if rec(i + 1, used | low):
                    return True
                del image[v]
        return False

    return rec(0, used)


def has_subgraph(G: SimpleGraph, H: SimpleGraph) -> bool:
    """True when ``H`` (ignoring isolated vertices) is a subgraph of ``G``."""
    if H.vertex_count > G.vertex_count or len(H.edges) > len(G.edges):
        return False
    if not H.edges:
        return True
    return _embed_edges(G.adjacency(), G.degrees(), H, _edge_order(H), {})


def ex_exact(m: int, H: SimpleGraph, max_m: int = 8) -> int:
    """Maximum edge count of an ``H``-free simple graph on ``m`` vertices.

    Depth-first over the edges of ``K_m`` in lexicographic order.  An edge is
    added only if no copy of ``H`` uses it (anchored subgraph search with a
    degree filter); a branch is cut once chosen + remaining edges cannot beat
    the best found.
    """
    if not 1 <= m <= max_m:
        raise DomainError(f"m must be in 1..{max_m}")
    all_edges = list(itertools.combinations(range(m), 2))
    if not H.edges or H.vertex_count > m:
        return len(all_edges) if H.edges else 0
    h_edges = [(u - 1, v - 1) for u, v in H.edges]
    order = _edge_order(H)
    adj = [0] * m
    deg = [0] * m
    best = 0
    total = len(all_edges)

    def creates_copy(a: int, b: int) -> bool:
        for u, v in h_edges:
            for x, y in ((a, b), (b, a)):
                if _embed_edges(adj, deg, H, order, {u: x, v: y}):
                    return True
        return False

    def rec(idx: int, count: int) -> None:
        nonlocal best
        if count > best:
            best = count
        if count + (total - idx) <= best:
            return
        for j in range(idx, total):
            if count + (total - j) <= best:
                return
            a, b = all_edges[j]
            adj[a] |= 1 << b
            adj[b] |= 1 << a
            deg[a] += 1
            deg[b] += 1
            if not creates_copy(a, b):
                rec(j + 1, count + 1)
            adj[a] &= ~(1 << b)
            adj[b] &= ~(1 << a)
            deg[a] -= 1
            deg[b] -= 1

    rec(0, 0)
    return best
