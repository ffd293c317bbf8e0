"""Maximum matchings and the matching-covered / factor-critical predicates."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Any, Literal

from .graph import Graph, bipartition, is_connected, without_edges, without_vertices

__all__ = [
    "Certificate",
    "maximum_matching",
    "is_matching",
    "has_perfect_matching",
    "allowed_edges",
    "is_matching_covered",
    "is_minimal_matching_covered",
    "is_factor_critical",
    "is_minimal_factor_critical",
]

Matching = frozenset  # of (u, v) pairs with u < v


@dataclass(frozen=True)
class Certificate:
    """Verdict of a property check with a checkable witness.

    ``witness`` is ``None`` or a ``(kind, payload)`` pair where kind is one
    of ``"matching"``, ``"edge"``, ``"cycle+chord"``, ``"vertex"``.
    """

    property: str
    verdict: bool
    witness: tuple[str, Any] | None = None
    note: str = "ok"

    def __bool__(self) -> bool:
        return self.verdict

    def to_json(self) -> dict:
        w = None
        if self.witness is not None:
            kind, payload = self.witness
            w = {"kind": kind, "value": _jsonable(payload)}
        return {"property": self.property, "verdict": self.verdict, "witness": w, "note": self.note}


def _jsonable(x):
    if isinstance(x, (set, frozenset)):
        return sorted(_jsonable(y) for y in x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(y) for y in x]
    return x


# ------------------------------------------------------------- engines


def _blossom(g: Graph) -> list[int]:
    """Edmonds' algorithm; returns the mate array (-1 for exposed)."""
    n = g.n
    adj = [sorted(a) for a in g.adj]
    match = [-1] * n
    for v in range(n):
        if match[v] < 0:
            for w in adj[v]:
                if match[w] < 0:
                    match[v], match[w] = w, v
                    break

    def find_path(root: int) -> int:
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = deque([root])

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if match[a] < 0:
                    break
                a = parent[match[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[match[b]]

        def mark(v: int, b: int, child: int, in_blossom: list[bool]) -> None:
            while base[v] != b:
                in_blossom[base[v]] = in_blossom[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] >= 0 and parent[match[to]] >= 0):
                    cur = lca(v, to)
                    in_blossom = [False] * n
                    mark(v, cur, to, in_blossom)
                    mark(to, cur, v, in_blossom)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] < 0:
                    parent[to] = v
                    if match[to] < 0:
                        # augment along the alternating path ending at `to`
                        while to >= 0:
                            pv = parent[to]
                            nxt = match[pv]
                            match[to], match[pv] = pv, to
                            to = nxt
                        return 1
                    used[match[to]] = True
                    queue.append(match[to])
        return 0

    for v in range(n):
        if match[v] < 0:
            find_path(v)
    return match


def _bipartite(g: Graph, left: frozenset[int]) -> list[int]:
    """Kuhn's augmenting-path matching from the ``left`` side."""
    match = [-1] * g.n

    def augment(u: int, seen: set[int]) -> bool:
        for w in sorted(g.adj[u]):
            if w in seen:
                continue
            seen.add(w)
            if match[w] < 0 or augment(match[w], seen):
                match[w], match[u] = u, w
                return True
        return False

    for u in sorted(left):
        augment(u, set())
    return match


def maximum_matching(
    g: Graph, method: Literal["auto", "blossom", "bipartite"] = "auto"
) -> Matching:
    """Maximum-cardinality matching as a frozenset of ``(u, v)``, ``u < v``.

    ``auto`` uses the bipartite routine when ``g`` is bipartite and the
    blossom routine otherwise.
    """
    if method == "blossom":
        mate = _blossom(g)
    else:
        parts = bipartition(g)
        if parts is None:
            if method == "bipartite":
                raise ValueError("graph is not bipartite")
            mate = _blossom(g)
        else:
            mate = _bipartite(g, parts.color_a)
    return frozenset((v, w) for v, w in enumerate(mate) if 0 <= v < w)


def is_matching(g: Graph, edges) -> bool:
    used: set[int] = set()
    for u, v in edges:
        if not g.has_edge(u, v) or u in used or v in used:
            return False
        used.update((u, v))
    return True


def has_perfect_matching(g: Graph) -> bool:
    # n == 0: the empty matching covers every vertex
    if g.n % 2:
        return False
    if any(not a for a in g.adj):
        return False
    return 2 * len(maximum_matching(g)) == g.n


def _perfect_matching_through(g: Graph, u: int, v: int) -> Matching | None:
    rest, kept = without_vertices(g, (u, v))
    m = maximum_matching(rest)
    if 2 * len(m) != rest.n:
        return None
    return frozenset({(min(u, v), max(u, v))} | {tuple(sorted((kept[a], kept[b]))) for a, b in m})


def allowed_edges(g: Graph) -> frozenset[tuple[int, int]]:
    """Edges lying in at least one perfect matching."""
    if not has_perfect_matching(g):
        return frozenset()
    return frozenset(e for e in g.edges() if has_perfect_matching(without_vertices(g, e)[0]))


# ---------------------------------------------------------- predicates


def is_matching_covered(g: Graph) -> Certificate:
    prop = "matching-covered"
    if g.n < 2:
        return Certificate(prop, False, None, "trivial")
    if not is_connected(g):
        return Certificate(prop, False, None, "disconnected")
    pm = maximum_matching(g)
    if 2 * len(pm) != g.n:
        return Certificate(prop, False, None, "no-perfect-matching")
    for e in g.edges():
        if e in pm:
            continue
        if _perfect_matching_through(g, *e) is None:
            return Certificate(prop, False, ("edge", e), "edge-not-allowed")
    return Certificate(prop, True, ("matching", pm))


def is_minimal_matching_covered(g: Graph) -> Certificate:
    prop = "minimal-matching-covered"
    base = is_matching_covered(g)
    if not base:
        return Certificate(prop, False, base.witness, f"not-matching-covered:{base.note}")
    for e in g.edges():
        if is_matching_covered(without_edges(g, [e])):
            return Certificate(prop, False, ("edge", e), "removable-edge")
    return Certificate(prop, True)


def is_factor_critical(g: Graph) -> Certificate:
    prop = "factor-critical"
    if g.n % 2 == 0:
        return Certificate(prop, False, None, "even-order")
    if not is_connected(g):
        return Certificate(prop, False, None, "disconnected")
    for v in range(g.n):
        if not has_perfect_matching(without_vertices(g, (v,))[0]):
            return Certificate(prop, False, ("vertex", v), "vertex-deletion-unmatched")
    return Certificate(prop, True)


def is_minimal_factor_critical(g: Graph) -> Certificate:
    prop = "minimal-factor-critical"
    base = is_factor_critical(g)
    if not base:
        return Certificate(prop, False, base.witness, f"not-factor-critical:{base.note}")
    for e in g.edges():
        if is_factor_critical(without_edges(g, [e])):
            return Certificate(prop, False, ("edge", e), "removable-edge")
    return Certificate(prop, True)
