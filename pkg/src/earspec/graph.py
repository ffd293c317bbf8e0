"""Simple undirected graphs on vertices ``0..n-1``.

Graphs are immutable values. Every operation returns a new graph; vertex
deletion reindexes the survivors order-preservingly and hands back the map
to the caller's labels.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

__all__ = [
    "Graph",
    "Bipartition",
    "GraphError",
    "Graph6Error",
    "parse_graph6",
    "to_graph6",
    "bipartition",
    "is_connected",
    "components",
    "canonical_form",
    "canonical_labeling",
    "without_vertices",
    "without_edges",
    "with_edges",
    "permute",
    "blocks",
    "cut_vertices",
    "cycle_graph",
    "path_graph",
    "complete_graph",
    "complete_bipartite_graph",
    "has_cycle_of_length",
]

MAX_GRAPH6_ORDER = 62
MAX_CANONICAL_ORDER = 14


class GraphError(ValueError):
    """Raised for invalid vertices, edges or graph operations."""


class Graph6Error(GraphError):
    """Raised for malformed graph6 input or unsupported orders."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    ``adj[v]`` is the frozenset of neighbours of ``v``. Use
    :meth:`from_edges` rather than building ``adj`` by hand; the
    constructor validates symmetry and loop-freeness either way.
    """

    n: int
    adj: tuple[frozenset[int], ...]
    _edges: tuple[tuple[int, int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise GraphError("adjacency length does not match n")
        edges = []
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                if not 0 <= v < self.n:
                    raise GraphError(f"neighbour {v} of {u} out of range")
                if v == u:
                    raise GraphError(f"loop at vertex {u}")
                if u not in self.adj[v]:
                    raise GraphError(f"asymmetric adjacency {u}-{v}")
                if u < v:
                    edges.append((u, v))
        object.__setattr__(self, "_edges", tuple(sorted(edges)))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, tuple(frozenset(s) for s in adj))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, tuple(frozenset() for _ in range(n)))

    @property
    def m(self) -> int:
        return len(self._edges)

    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as sorted ``(u, v)`` pairs with ``u < v``."""
        return self._edges

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return sorted(self.adj[v])

    def adjacency_matrix(self):
        import numpy as np

        a = np.zeros((self.n, self.n))
        for u, v in self._edges:
            a[u, v] = a[v, u] = 1.0
        return a

    def __str__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Bipartition:
    color_a: frozenset[int]
    color_b: frozenset[int]

    def side(self, v: int) -> int:
        return 0 if v in self.color_a else 1


# ---------------------------------------------------------------- graph6


def to_graph6(g: Graph) -> str:
    """Encode ``g`` in graph6 (single-byte order header, ``n <= 62``)."""
    if not 0 <= g.n <= MAX_GRAPH6_ORDER:
        raise Graph6Error(f"graph6 order {g.n} outside 0..{MAX_GRAPH6_ORDER}")
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line. Surrounding whitespace is ignored."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise Graph6Error("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"non-printable or out-of-range character {ch!r}")
    n = ord(s[0]) - 63
    if n > MAX_GRAPH6_ORDER:
        raise Graph6Error("multi-byte order headers are not supported")
    nbits = n * (n - 1) // 2
    nbytes = -(-nbits // 6)
    body = s[1:]
    if len(body) != nbytes:
        raise Graph6Error(f"expected {nbytes} data bytes for n={n}, got {len(body)}")
    bits: list[int] = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend((val >> (5 - k)) & 1 for k in range(6))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------- structure


def components(g: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest vertex."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def bipartition(g: Graph) -> Bipartition | None:
    """2-colouring of ``g`` or ``None`` when an odd cycle exists.

    The lowest vertex of every component is placed in ``color_a``.
    """
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    a = frozenset(v for v in range(g.n) if color[v] == 0)
    b = frozenset(v for v in range(g.n) if color[v] == 1)
    return Bipartition(a, b)


def blocks(g: Graph) -> list[list[int]]:
    """Vertex sets of the blocks (biconnected components and bridges).

    Isolated vertices form singleton blocks. Iterative Hopcroft-Tarjan.
    """
    disc = [-1] * g.n
    low = [0] * g.n
    result: list[list[int]] = []
    timer = 0
    for root in range(g.n):
        if disc[root] >= 0:
            continue
        if not g.adj[root]:
            disc[root] = timer
            timer += 1
            result.append([root])
            continue
        disc[root] = low[root] = timer
        timer += 1
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(sorted(g.adj[root])))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] < 0:
                    disc[w] = low[w] = timer
                    timer += 1
                    edge_stack.append((u, w))
                    stack.append((w, u, iter(sorted(g.adj[w]))))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[u]:
                    edge_stack.append((u, w))
                    low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[u])
                if low[u] >= disc[parent]:
                    comp: set[int] = set()
                    while True:
                        a, b = edge_stack.pop()
                        comp.update((a, b))
                        if (a, b) == (parent, u):
                            break
                    result.append(sorted(comp))
    return result


def cut_vertices(g: Graph) -> set[int]:
    count = [0] * g.n
    for b in blocks(g):
        for v in b:
            count[v] += 1
    return {v for v in range(g.n) if count[v] > 1}


# ------------------------------------------------------------- editing


def without_vertices(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Delete ``s`` and reindex.

    Returns ``(h, kept)`` where vertex ``i`` of ``h`` is vertex ``kept[i]``
    of ``g``.
    """
    drop = set(s)
    for v in drop:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range")
    kept = tuple(v for v in range(g.n) if v not in drop)
    index = {v: i for i, v in enumerate(kept)}
    adj = tuple(frozenset(index[w] for w in g.adj[v] if w in index) for v in kept)
    return Graph(len(kept), adj), kept


def without_edges(g: Graph, es: Iterable[Sequence[int]]) -> Graph:
    adj = [set(a) for a in g.adj]
    for u, v in es:
        if not g.has_edge(u, v) or v not in adj[u]:
            raise GraphError(f"edge {u}-{v} not present")
        adj[u].discard(v)
        adj[v].discard(u)
    return Graph(g.n, tuple(frozenset(a) for a in adj))


def with_edges(g: Graph, es: Iterable[Sequence[int]]) -> Graph:
    adj = [set(a) for a in g.adj]
    for u, v in es:
        if not (0 <= u < g.n and 0 <= v < g.n) or u == v:
            raise GraphError(f"edge {u}-{v} invalid for n={g.n}")
        if v in adj[u]:
            raise GraphError(f"edge {u}-{v} already present")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(g.n, tuple(frozenset(a) for a in adj))


def permute(g: Graph, perm: Sequence[int]) -> Graph:
    """Relabel vertex ``v`` as ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError("not a permutation of the vertex set")
    return Graph.from_edges(g.n, ((perm[u], perm[v]) for u, v in g.edges()))


# ------------------------------------------------------------ families


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def has_cycle_of_length(g: Graph, k: int) -> bool:
    """Brute-force test for a (not necessarily induced) ``k``-cycle."""

    def extend(path: list[int], on_path: set[int]) -> bool:
        if len(path) == k:
            return path[0] in g.adj[path[-1]]
        for w in g.adj[path[-1]]:
            if w > path[0] and w not in on_path:
                path.append(w)
                on_path.add(w)
                if extend(path, on_path):
                    return True
                path.pop()
                on_path.discard(w)
        return False

    return any(extend([s], {s}) for s in range(g.n))


# ---------------------------------------------------- canonical labeling


def _refine(g: Graph, colors: list[int]) -> list[int]:
    """Colour refinement to a stable partition.

    Colours are ranks of isomorphism-invariant signatures, so the result
    commutes with relabeling.
    """
    ncolors = len(set(colors))
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[w] for w in g.adj[v]))) for v in range(g.n)
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if len(rank) == ncolors:
            return new
        colors, ncolors = new, len(rank)


def _individualize(colors: list[int], v: int) -> list[int]:
    # v's colour c splits into (c, v) < (c, others); shift ranks accordingly.
    c = colors[v]
    return [x * 2 + (0 if (u == v or x != c) else 1) for u, x in enumerate(colors)]


def _twins(g: Graph, u: int, v: int) -> bool:
    return g.adj[u] - {v} == g.adj[v] - {u}


def _encode(g: Graph, order: Sequence[int]) -> tuple[int, ...]:
    # column-major upper triangle, as graph6 lays it out
    return tuple(
        1 if order[i] in g.adj[order[j]] else 0 for j in range(1, g.n) for i in range(j)
    )


def canonical_labeling(g: Graph) -> list[int]:
    """Vertex order (position -> vertex) giving the canonical relabeling.

    Individualize-and-refine search over the cells of an equitable
    partition, keeping the leaf with the lexicographically smallest
    adjacency bit string. Twin vertices and automorphisms discovered at
    earlier leaves prune sibling branches.
    """
    if g.n > MAX_CANONICAL_ORDER:
        raise GraphError(f"canonical form limited to n <= {MAX_CANONICAL_ORDER}")
    if g.n == 0:
        return []
    best: list = [None, None]  # [code, order]
    autos: list[list[int]] = []

    def search(colors: list[int], fixed: tuple[int, ...]) -> None:
        colors = _refine(g, colors)
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = next((c for c in sorted(counts) if counts[c] > 1), None)
        if target is None:
            order = sorted(range(g.n), key=colors.__getitem__)
            code = _encode(g, order)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            elif code == best[0]:
                auto = [0] * g.n
                for a, b in zip(best[1], order):
                    auto[a] = b
                autos.append(auto)
            return
        cell = [v for v in range(g.n) if colors[v] == target]
        tried: list[int] = []
        for v in cell:
            if any(_twins(g, v, t) for t in tried):
                continue
            if tried and _equivalent(v, tried, fixed):
                continue
            tried.append(v)
            search(_individualize(colors, v), fixed + (v,))

    def _equivalent(v: int, tried: list[int], fixed: tuple[int, ...]) -> bool:
        gens = [a for a in autos if all(a[f] == f for f in fixed)]
        if not gens:
            return False
        orbit = {v}
        frontier = [v]
        while frontier:
            x = frontier.pop()
            for a in gens:
                y = a[x]
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        return any(t in orbit for t in tried)

    search([0] * g.n, ())
    return best[1]


def canonical_form(g: Graph) -> str:
    """graph6 string of the canonical relabeling; equal iff isomorphic."""
    order = canonical_labeling(g)
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    return to_graph6(permute(g, perm))
