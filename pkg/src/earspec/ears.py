"""Ear decompositions (bipartite and odd), ear grades and edge exchange.

Decompositions are kept in the target graph's labels. A bipartite
decomposition starts from a single edge ``base = (u, v)``; its first ear
closes an even cycle. An odd decomposition starts from an odd cycle given
as a vertex sequence.

Grades and host indices refer to *layers*: layer 0 is the starting cycle
(for the bipartite kind, the base edge together with the first ear) and
every later ear is one further layer.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Literal, Sequence

from .graph import Graph, bipartition, cut_vertices, is_connected, to_graph6, with_edges, without_edges, without_vertices
from .matching import Certificate, is_factor_critical, is_matching_covered

__all__ = [
    "Ear",
    "EarDecomposition",
    "ParallelFamily",
    "EarError",
    "ExchangeError",
    "validate",
    "find_bipartite_ear_decomposition",
    "find_odd_ear_decomposition",
    "layers",
    "ear_grades",
    "parallel_families",
    "compatible",
    "segments_compatible",
    "add_ear",
    "edge_exchange",
]

Kind = Literal["bipartite", "odd"]


class EarError(ValueError):
    """Invalid ear or decomposition; ``reason`` is a short code."""

    def __init__(self, reason: str, detail: str = ""):
        super().__init__(f"{reason}: {detail}" if detail else reason)
        self.reason = reason


class ExchangeError(ValueError):
    """Edge-exchange precondition failure; ``reason`` names the violation."""

    def __init__(self, reason: str, detail: str = ""):
        super().__init__(f"{reason}: {detail}" if detail else reason)
        self.reason = reason


@dataclass(frozen=True)
class Ear:
    path: tuple[int, ...]

    def __init__(self, path: Iterable[int]):
        object.__setattr__(self, "path", tuple(path))

    @property
    def length(self) -> int:
        return len(self.path) - 1

    @property
    def ends(self) -> tuple[int, int]:
        return self.path[0], self.path[-1]

    @property
    def internal(self) -> tuple[int, ...]:
        return self.path[1:-1]

    @property
    def trivial(self) -> bool:
        return self.length == 1

    def edges(self) -> list[tuple[int, int]]:
        return [(min(a, b), max(a, b)) for a, b in zip(self.path, self.path[1:])]


@dataclass(frozen=True)
class EarDecomposition:
    kind: Kind
    base: tuple[int, ...]
    ears: tuple[Ear, ...] = ()
    _grades: tuple[int, ...] | None = field(default=None, compare=False, repr=False)

    @property
    def grades(self) -> tuple[int, ...]:
        if self._grades is None:
            object.__setattr__(self, "_grades", tuple(ear_grades(self)[0]))
        return self._grades

    def base_edges(self) -> list[tuple[int, int]]:
        b = self.base
        if self.kind == "bipartite":
            return [(min(b), max(b))]
        return [(min(x, y), max(x, y)) for x, y in zip(b, b[1:] + b[:1])]

    def base_graph(self, n: int) -> Graph:
        """The base subgraph inside an ``n``-vertex host (other vertices isolated)."""
        return Graph.from_edges(n, self.base_edges())

    def to_json(self, n: int) -> dict:
        return {
            "kind": self.kind,
            "base": to_graph6(self.base_graph(n)),
            "base_vertices": list(self.base),
            "ears": [list(e.path) for e in self.ears],
            "grades": list(self.grades),
        }

    @classmethod
    def from_json(cls, data: dict) -> "EarDecomposition":
        return cls(data["kind"], tuple(data["base_vertices"]), tuple(Ear(p) for p in data["ears"]))


@dataclass(frozen=True)
class ParallelFamily:
    ends: tuple[int, int]
    members: tuple[int, ...]


# --------------------------------------------------------- validation


def _check(g: Graph, d: EarDecomposition) -> tuple[int, str] | None:
    """First violation as ``(index, reason)``; index -1 means the base."""
    base = d.base
    if d.kind not in ("bipartite", "odd"):
        return -1, "unknown-kind"
    if len(set(base)) != len(base) or any(not 0 <= v < g.n for v in base):
        return -1, "bad-base-vertices"
    if d.kind == "bipartite" and len(base) != 2:
        return -1, "base-not-edge"
    if d.kind == "odd" and (len(base) < 3 or len(base) % 2 == 0):
        return -1, "base-not-odd-cycle"
    edges = set(d.base_edges())
    if not all(g.has_edge(u, v) for u, v in edges):
        return -1, "base-edge-missing"
    verts = set(base)
    side = {base[0]: 0, base[1]: 1} if d.kind == "bipartite" else {}
    for i, ear in enumerate(d.ears):
        p = ear.path
        if len(p) < 2:
            return i, "empty-ear"
        if ear.length % 2 == 0:
            return i, "even-ear"
        a, b = ear.ends
        if a == b:
            return i, "closed-ear"
        if a not in verts or b not in verts:
            return i, "end-not-in-prefix"
        inner = ear.internal
        if len(set(inner)) != len(inner) or any(v in verts or not 0 <= v < g.n for v in inner):
            return i, "internal-vertex-collision"
        if d.kind == "bipartite" and side[a] == side[b]:
            return i, "ends-same-part"
        new = ear.edges()
        if any(not g.has_edge(u, v) or (u, v) in edges for u, v in new):
            return i, "ear-edge-invalid"
        edges.update(new)
        verts.update(inner)
        if d.kind == "bipartite":
            for k, v in enumerate(inner, start=1):
                side[v] = side[a] ^ (k & 1)
    if len(verts) != g.n or edges != set(g.edges()):
        return len(d.ears), "final-prefix-differs"
    return None


def validate(g: Graph, d: EarDecomposition) -> Certificate:
    bad = _check(g, d)
    prop = f"{d.kind}-ear-decomposition"
    if bad is None:
        return Certificate(prop, True)
    return Certificate(prop, False, ("ear", bad[0]), bad[1])


# ------------------------------------------------------------- search


def _subgraph(n: int, verts: frozenset[int], edges: frozenset[tuple[int, int]]) -> Graph:
    h = Graph.from_edges(n, edges)
    return without_vertices(h, set(range(n)) - verts)[0]


def _adjacency(edges: Iterable[tuple[int, int]]) -> dict[int, list[int]]:
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    return adj


def _cycle_sequence(adj: dict[int, list[int]]) -> list[int] | None:
    """Vertex order of a 2-regular connected graph, else None."""
    if not adj or any(len(a) != 2 for a in adj.values()):
        return None
    start = min(adj)
    seq = [start, min(adj[start])]
    while True:
        a, b = adj[seq[-1]]
        nxt = a if a != seq[-2] else b
        if nxt == start:
            break
        seq.append(nxt)
    return seq if len(seq) == len(adj) else None


def _threads(adj: dict[int, list[int]]) -> list[tuple[int, ...]]:
    """Maximal paths whose internal vertices have degree 2 and whose ends have degree >= 3."""
    found = set()
    for b, nbrs in adj.items():
        if len(nbrs) < 3:
            continue
        for w in nbrs:
            path = [b, w]
            while len(adj[path[-1]]) == 2:
                x, y = adj[path[-1]]
                path.append(x if x != path[-2] else y)
            if len(adj[path[-1]]) < 3 or path[-1] == b:
                continue
            t = tuple(path)
            found.add(min(t, t[::-1]))
    return sorted(found, key=lambda p: (-len(p), p))


def _reverse_delete(g: Graph, kind: Kind) -> EarDecomposition | None:
    if kind == "bipartite":
        remainder_ok = lambda h: bool(is_matching_covered(h))  # noqa: E731
    else:
        remainder_ok = lambda h: bool(is_factor_critical(h)) and not cut_vertices(h)  # noqa: E731
    failed: set[frozenset] = set()

    def solve(verts: frozenset[int], edges: frozenset[tuple[int, int]]):
        if edges in failed:
            return None
        if kind == "bipartite" and len(edges) == 1:
            (e,) = edges
            return e, []
        adj = _adjacency(edges)
        seq = _cycle_sequence(adj)
        if seq is not None:
            if kind == "bipartite" and len(seq) % 2 == 0:
                return (seq[0], seq[-1]), [tuple(seq)]
            if kind == "odd" and len(seq) % 2 == 1:
                return tuple(seq), []
            failed.add(edges)
            return None
        for t in _threads(adj):
            if (len(t) - 1) % 2 == 0:
                continue
            sub_v = verts - set(t[1:-1])
            sub_e = edges - {(min(a, b), max(a, b)) for a, b in zip(t, t[1:])}
            if not remainder_ok(_subgraph(g.n, sub_v, sub_e)):
                continue
            res = solve(sub_v, sub_e)
            if res is not None:
                return res[0], res[1] + [t]
        failed.add(edges)
        return None

    res = solve(frozenset(range(g.n)), frozenset(g.edges()))
    if res is None:
        return None
    base, paths = res
    if kind == "bipartite" and paths:
        # orient the first ear so it runs between the base ends
        first = paths[0]
        if {first[0], first[-1]} != set(base):
            raise AssertionError("first ear does not close the base edge")
    return EarDecomposition(kind, tuple(base), tuple(Ear(p) for p in paths))


def find_bipartite_ear_decomposition(g: Graph) -> EarDecomposition | None:
    """Bipartite ear decomposition by reverse deletion, or None.

    Repeatedly removes an odd thread (or a single edge between branch
    vertices) whose removal keeps the remainder matching covered, longest
    threads first, backtracking on dead ends.
    """
    if g.n < 2 or not is_connected(g) or bipartition(g) is None:
        return None
    return _reverse_delete(g, "bipartite")


def find_odd_ear_decomposition(g: Graph) -> EarDecomposition | None:
    """Odd ear decomposition of a 2-connected graph, or None.

    Raises :class:`EarError` with ``reason="precondition"`` when ``g`` is
    disconnected or has fewer than 3 vertices, and ``reason="cut-vertex"``
    when it has a cut vertex.
    """
    if g.n < 3 or not is_connected(g):
        raise EarError("precondition", "graph must be connected with at least 3 vertices")
    if cut_vertices(g):
        raise EarError("cut-vertex", f"cut vertices {sorted(cut_vertices(g))}")
    return _reverse_delete(g, "odd")


# -------------------------------------------------------------- grades


def layers(d: EarDecomposition) -> list[tuple[int, ...]]:
    """Vertex sequences of the layers: the starting cycle, then each later ear."""
    if d.kind == "bipartite":
        if not d.ears:
            return [tuple(d.base)]
        return [d.ears[0].path] + [e.path for e in d.ears[1:]]
    return [tuple(d.base)] + [e.path for e in d.ears]


def _hosts(d: EarDecomposition) -> dict[int, int]:
    """Layer index in which each vertex first appears."""
    ls = layers(d)
    host = {v: 0 for v in ls[0]}
    for i, p in enumerate(ls[1:], start=1):
        for v in p[1:-1]:
            host[v] = i
    return host


def ear_grades(d: EarDecomposition) -> tuple[list[int], int]:
    """Per-layer grades and the maximum grade.

    The starting cycle has grade 0; a later ear has grade one more than the
    largest grade among the layers in which its two ends first appeared.
    """
    ls = layers(d)
    host: dict[int, int] = {v: 0 for v in ls[0]}
    grades = [0]
    for i, p in enumerate(ls[1:], start=1):
        a, b = p[0], p[-1]
        if a not in host or b not in host:
            raise EarError("invalid-decomposition", f"layer {i} ends outside prefix")
        grades.append(1 + max(grades[host[a]], grades[host[b]]))
        for v in p[1:-1]:
            host[v] = i
    return grades, max(grades)


def parallel_families(d: EarDecomposition, host_ear: int) -> list[ParallelFamily]:
    """Later ears with an end first appearing in ``host_ear``, grouped by end pair."""
    ls = layers(d)
    if not 0 <= host_ear < len(ls):
        raise EarError("invalid-index", str(host_ear))
    host = _hosts(d)
    groups: dict[tuple[int, int], list[int]] = {}
    for i in range(host_ear + 1, len(ls)):
        a, b = ls[i][0], ls[i][-1]
        if host.get(a) == host_ear or host.get(b) == host_ear:
            groups.setdefault((min(a, b), max(a, b)), []).append(i)
    return [ParallelFamily(k, tuple(v)) for k, v in sorted(groups.items(), key=lambda kv: kv[1][0])]


def segments_compatible(host_path: Sequence[int], ends1: Iterable[int], ends2: Iterable[int]) -> bool:
    """Whether two attachment sets occupy disjoint, non-interleaved segments of a path."""
    pos = {v: i for i, v in enumerate(host_path)}
    p1 = [pos[v] for v in ends1 if v in pos]
    p2 = [pos[v] for v in ends2 if v in pos]
    if not p1 or not p2:
        raise EarError("not-attached", "family has no end on the host ear")
    return max(p1) < min(p2) or max(p2) < min(p1)


def compatible(d: EarDecomposition, host_ear: int, f1: ParallelFamily, f2: ParallelFamily) -> bool:
    ls = layers(d)
    if not 0 <= host_ear < len(ls):
        raise EarError("invalid-index", str(host_ear))
    return segments_compatible(ls[host_ear], f1.ends, f2.ends)


# ------------------------------------------------------------ editing


def add_ear(
    g: Graph, d: EarDecomposition, ear: Ear | Sequence[int], minimal: bool = True
) -> tuple[Graph, EarDecomposition]:
    """Append ``ear`` to ``g`` and its decomposition ``d``.

    Internal vertices must be the fresh labels ``g.n, g.n + 1, ...`` (in
    any order). With ``minimal=True`` trivial ears are refused, and for the
    bipartite kind the ends must also be nonadjacent.
    """
    if not isinstance(ear, Ear):
        ear = Ear(ear)
    if not validate(g, d):
        raise EarError("invalid-decomposition", "decomposition does not describe the graph")
    if ear.length < 1:
        raise EarError("empty-ear")
    if ear.length % 2 == 0:
        raise EarError("parity", f"ear length {ear.length} is even")
    a, b = ear.ends
    if a == b or not (0 <= a < g.n and 0 <= b < g.n):
        raise EarError("bad-ends", f"ends {a}, {b}")
    inner = ear.internal
    if any(v < g.n for v in inner) or len(set(inner)) != len(inner):
        raise EarError("internal-vertex-collision", f"internal vertices {inner}")
    if sorted(inner) != list(range(g.n, g.n + len(inner))):
        raise EarError("internal-vertex-labels", "internal vertices must be the next fresh labels")
    if ear.trivial and g.has_edge(a, b):
        raise EarError("edge-present", f"{a}-{b}")
    if minimal and ear.trivial:
        raise EarError("trivial-ear", "minimality-preserving growth needs nontrivial ears")
    if d.kind == "bipartite":
        parts = bipartition(g)
        if parts is None or parts.side(a) == parts.side(b):
            raise EarError("same-part", f"ends {a}, {b} lie in the same part")
        if minimal and g.has_edge(a, b):
            raise EarError("ends-adjacent", f"ends {a}, {b} are adjacent")
    n2 = g.n + len(inner)
    h = Graph.from_edges(n2, list(g.edges()) + ear.edges())
    return h, EarDecomposition(d.kind, d.base, d.ears + (ear,))


def edge_exchange(g: Graph, t: Iterable[int], s1: Iterable[int], s2: Iterable[int]) -> Graph:
    """Join every T-S1 pair and delete every T-S2 edge.

    Requires T, S1, S2 nonempty and pairwise disjoint, no existing T-S1
    edge, and T-S2 complete.
    """
    t, s1, s2 = set(t), set(s1), set(s2)
    for name, s in (("T", t), ("S1", s1), ("S2", s2)):
        if not s:
            raise ExchangeError(f"empty:{name}")
        bad = [v for v in s if not 0 <= v < g.n]
        if bad:
            raise ExchangeError(f"out-of-range:{name}", str(bad))
    for (na, a), (nb, b) in ((("T", t), ("S1", s1)), (("T", t), ("S2", s2)), (("S1", s1), ("S2", s2))):
        if a & b:
            raise ExchangeError(f"overlap:{na},{nb}", str(sorted(a & b)))
    for x in sorted(t):
        for y in sorted(s1):
            if g.has_edge(x, y):
                raise ExchangeError("existing-edge:T-S1", f"{x}-{y}")
        for y in sorted(s2):
            if not g.has_edge(x, y):
                raise ExchangeError("missing-edge:T-S2", f"{x}-{y}")
    h = without_edges(g, [(x, y) for x in t for y in s2])
    return with_edges(h, [(x, y) for x in t for y in s1])
