"""Extremal families, class enumerators and the spectral bound harness.

Two classes are enumerated up to isomorphism:

* minimal matching covered bipartite graphs, grown from even cycles by
  nontrivial odd ears joining nonadjacent vertices of opposite colour;
* minimal factor-critical graphs, whose 2-connected blocks are grown from
  odd cycles by nontrivial odd ears and then glued at cut vertices.

Each has a brute-force twin that scans labeled graphs with vectorised
perfect-matching tests, independent of the growth path and of the
blossom engine.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, permutations

import numpy as np

from .graph import Graph, bipartition, blocks, canonical_form, cycle_graph, parse_graph6, without_vertices
from .matching import is_minimal_factor_critical, is_minimal_matching_covered
from .spectral import rho_friendship, rho_p3star, spectral_radius

__all__ = [
    "EnumerationReport",
    "gen_p3star",
    "gen_friendship",
    "enumerate_minimal_mc_bipartite",
    "brute_minimal_mc_bipartite",
    "brute_mc_bipartite",
    "enumerate_minimal_factor_critical",
    "minimal_factor_critical_blocks",
    "brute_minimal_factor_critical",
    "verify_theorem_1",
    "verify_theorem_2",
    "BOUND_TOL",
]

log = logging.getLogger(__name__)

BOUND_TOL = 1e-9
MAX_BIPARTITE_N = 12
MAX_FC_N = 11
CLASS_BIPARTITE = "minimal-mc-bipartite"
CLASS_FC = "minimal-factor-critical"


@dataclass
class EnumerationReport:
    n: int
    class_name: str
    count: int
    max_rho: float
    argmax: list[str]
    bound: float
    bound_met: bool
    extremal_match: bool
    rhos: dict[str, float] = field(default_factory=dict, repr=False)

    @property
    def ok(self) -> bool:
        return self.bound_met and self.extremal_match

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "class": self.class_name,
            "count": self.count,
            "max_rho": self.max_rho,
            "argmax": list(self.argmax),
            "bound": self.bound,
            "bound_met": self.bound_met,
            "extremal_match": self.extremal_match,
        }


# ---------------------------------------------------------- generators


def gen_p3star(n: int) -> Graph:
    """Hubs 0 and 1 joined by (n-2)/2 internally disjoint paths of length 3."""
    if n < 6 or n % 2:
        raise ValueError("P3* needs an even order n >= 6")
    edges = []
    for i in range((n - 2) // 2):
        a, b = 2 + 2 * i, 3 + 2 * i
        edges += [(0, a), (a, b), (b, 1)]
    return Graph.from_edges(n, edges)


def gen_friendship(n: int) -> Graph:
    """Centre 0 joined to the (n-1)/2 disjoint edges (1,2), (3,4), ..."""
    if n < 3 or n % 2 == 0:
        raise ValueError("friendship graph needs an odd order n >= 3")
    edges = []
    for i in range(1, n, 2):
        edges += [(0, i), (0, i + 1), (i, i + 1)]
    return Graph.from_edges(n, edges)


# ------------------------------------------------------ ear growth


def _with_ear(g: Graph, a: int, b: int, length: int) -> Graph:
    path = [a] + list(range(g.n, g.n + length - 1)) + [b]
    return Graph.from_edges(g.n + length - 1, list(g.edges()) + list(zip(path, path[1:])))


def _expand(args: tuple[str, int, str]) -> list[str]:
    """Canonical forms of all one-ear extensions of a state, up to order ``limit``."""
    code, limit, kind = args
    g = parse_graph6(code)
    room = limit - g.n
    out = set()
    if kind == "bipartite":
        parts = bipartition(g)
        pairs = [(a, b) for a in sorted(parts.color_a) for b in sorted(parts.color_b) if not g.has_edge(a, b)]
    else:
        pairs = list(combinations(range(g.n), 2))
    for length in range(3, room + 2, 2):
        for a, b in pairs:
            out.add(canonical_form(_with_ear(g, a, b, length)))
    return sorted(out)


def _grow(seeds: list[Graph], limit: int, kind: str, jobs: int = 1) -> dict[int, set[str]]:
    """All states reachable from ``seeds`` by nontrivial odd ears, bucketed by order."""
    levels: dict[int, set[str]] = {}
    for s in seeds:
        levels.setdefault(s.n, set()).add(canonical_form(s))
    pool = ProcessPoolExecutor(jobs) if jobs > 1 else None
    try:
        for order in range(min(levels), limit - 1):
            frontier = sorted(levels.get(order, ()))
            if not frontier:
                continue
            tasks = [(c, limit, kind) for c in frontier]
            results = pool.map(_expand, tasks, chunksize=8) if pool else map(_expand, tasks)
            for children in results:
                for c in children:
                    levels.setdefault(ord(c[0]) - 63, set()).add(c)
            log.debug("order %d: %d states", order, len(frontier))
    finally:
        if pool:
            pool.shutdown()
    return levels


def enumerate_minimal_mc_bipartite(n: int, jobs: int = 1) -> set[str]:
    """Canonical graph6 of every minimal matching covered bipartite graph of order ``n``."""
    if n % 2 or not 2 <= n <= MAX_BIPARTITE_N:
        raise ValueError(f"n must be even with 2 <= n <= {MAX_BIPARTITE_N}")
    if n == 2:
        return {canonical_form(Graph.from_edges(2, [(0, 1)]))}
    seeds = [cycle_graph(k) for k in range(4, n + 1, 2)]
    levels = _grow(seeds, n, "bipartite", jobs)
    return {c for c in levels.get(n, ()) if is_minimal_matching_covered(parse_graph6(c))}


def minimal_factor_critical_blocks(limit: int, jobs: int = 1) -> dict[int, set[str]]:
    """2-connected minimal factor-critical graphs of each odd order up to ``limit``."""
    seeds = [cycle_graph(k) for k in range(3, limit + 1, 2)]
    levels = _grow(seeds, limit, "odd", jobs)
    return {
        k: {c for c in levels.get(k, ()) if is_minimal_factor_critical(parse_graph6(c))}
        for k in range(3, limit + 1, 2)
    }


def _glue(g: Graph, v: int, h: Graph, w: int) -> Graph:
    """Identify vertex ``v`` of ``g`` with vertex ``w`` of ``h``."""
    relabel = {}
    nxt = g.n
    for x in range(h.n):
        if x == w:
            relabel[x] = v
        else:
            relabel[x] = nxt
            nxt += 1
    edges = list(g.edges()) + [(relabel[a], relabel[b]) for a, b in h.edges()]
    return Graph.from_edges(nxt, edges)


def enumerate_minimal_factor_critical(n: int, jobs: int = 1) -> set[str]:
    """Canonical graph6 of every minimal factor-critical graph of order ``n``.

    A graph with several blocks has an end block; removing it leaves a
    smaller graph of the class. So the class at order ``k`` is the blocks of
    order ``k`` plus every gluing of a class member of order ``k - b + 1``
    with a block of order ``b``.
    """
    if n % 2 == 0 or not 3 <= n <= MAX_FC_N:
        raise ValueError(f"n must be odd with 3 <= n <= {MAX_FC_N}")
    block_sets = minimal_factor_critical_blocks(n, jobs)
    block_graphs = {k: [parse_graph6(c) for c in sorted(v)] for k, v in block_sets.items()}
    classes: dict[int, set[str]] = {}
    for k in range(3, n + 1, 2):
        found = set(block_sets[k])
        for b in range(3, k - 1, 2):
            rest = k - b + 1
            for code in sorted(classes.get(rest, ())):
                g = parse_graph6(code)
                for h in block_graphs[b]:
                    for v in range(g.n):
                        for w in range(h.n):
                            found.add(canonical_form(_glue(g, v, h, w)))
        classes[k] = found
    return {c for c in classes[n] if is_minimal_factor_critical(parse_graph6(c))}


# ------------------------------------------------------- brute oracles


def _connected_masks(nbr: list[np.ndarray], n: int) -> np.ndarray:
    """Vectorised BFS from vertex 0 over per-vertex neighbour bitmasks."""
    reach = np.ones_like(nbr[0])
    for _ in range(n):
        new = reach.copy()
        for v in range(n):
            new |= np.where((reach >> v) & 1 == 1, nbr[v], 0).astype(reach.dtype)
        if np.array_equal(new, reach):
            break
        reach = new
    return reach == (1 << n) - 1


def _perfect_matchings(vertices: list[int]) -> list[list[tuple[int, int]]]:
    if not vertices:
        return [[]]
    first, rest = vertices[0], vertices[1:]
    out = []
    for i, w in enumerate(rest):
        for pm in _perfect_matchings(rest[:i] + rest[i + 1 :]):
            out.append([(first, w)] + pm)
    return out


def _confirm(codes: set[str], predicate) -> set[str]:
    for c in codes:
        if not predicate(parse_graph6(c)):
            raise AssertionError(f"oracle and predicate disagree on {c}")
    return codes


def _bipartite_mc_masks(n: int) -> tuple[np.ndarray, np.ndarray, int]:
    """Matching-covered flags for every edge subset of K_{n/2,n/2}.

    Returns ``(masks, mc, h)``; bit ``i*h + j`` of a mask is the edge
    between left vertex ``i`` and right vertex ``h + j``.
    """
    h = n // 2
    nbits = h * h
    masks = np.arange(1 << nbits, dtype=np.uint32)
    bit = [((masks >> e) & 1).astype(bool) for e in range(nbits)]
    # edge (i, j) lies in a perfect matching iff some permutation through it survives
    allowed = [np.zeros(masks.shape, bool) for _ in range(nbits)]
    for sigma in permutations(range(h)):
        alive = np.ones(masks.shape, bool)
        for i in range(h):
            alive &= bit[i * h + sigma[i]]
        for i in range(h):
            allowed[i * h + sigma[i]] |= alive
    nbr = [np.zeros(masks.shape, np.uint32) for _ in range(n)]
    for i in range(h):
        for j in range(h):
            b = bit[i * h + j].astype(np.uint32)
            nbr[i] |= b << np.uint32(h + j)
            nbr[h + j] |= b << np.uint32(i)
    mc = _connected_masks(nbr, n)
    for e in range(nbits):
        mc &= ~bit[e] | allowed[e]
    return masks, mc, h


def _bipartite_mask_graph(mask: int, h: int) -> Graph:
    return Graph.from_edges(2 * h, [(i, h + j) for i in range(h) for j in range(h) if (mask >> (i * h + j)) & 1])


def brute_mc_bipartite(n: int) -> set[str]:
    """Every matching covered bipartite graph of order ``n <= 8``, minimal or not."""
    if n % 2 or not 2 <= n <= 8:
        raise ValueError("n must be even with 2 <= n <= 8")
    masks, mc, h = _bipartite_mc_masks(n)
    return {canonical_form(_bipartite_mask_graph(int(m), h)) for m in np.flatnonzero(mc)}


def brute_minimal_mc_bipartite(n: int) -> set[str]:
    """Exhaustive scan of labeled bipartite graphs of order ``n <= 8``.

    A graph with a perfect matching has equal colour classes, and every
    such graph is isomorphic to one with classes ``{0..n/2-1}`` and
    ``{n/2..n-1}``, so scanning that bipartition covers every class.
    """
    if n % 2 or not 2 <= n <= 8:
        raise ValueError("n must be even with 2 <= n <= 8")
    masks, mc, h = _bipartite_mc_masks(n)
    minimal = mc.copy()
    for e in range(h * h):
        present = ((masks >> e) & 1).astype(bool)
        minimal &= ~present | ~mc[masks ^ np.uint32(1 << e)]
    found = {canonical_form(_bipartite_mask_graph(int(m), h)) for m in np.flatnonzero(minimal)}
    return _confirm(found, is_minimal_matching_covered)


def brute_minimal_factor_critical(n: int) -> set[str]:
    """Exhaustive scan of all labeled graphs of odd order ``3 <= n <= 7``."""
    if n % 2 == 0 or not 3 <= n <= 7:
        raise ValueError("n must be odd with 3 <= n <= 7")
    pairs = list(combinations(range(n), 2))
    index = {p: e for e, p in enumerate(pairs)}
    masks = np.arange(1 << len(pairs), dtype=np.uint32)
    bit = [((masks >> e) & 1).astype(bool) for e in range(len(pairs))]
    fc = np.ones(masks.shape, bool)
    for v in range(n):
        rest = [u for u in range(n) if u != v]
        has_pm = np.zeros(masks.shape, bool)
        for pm in _perfect_matchings(rest):
            alive = np.ones(masks.shape, bool)
            for p in pm:
                alive &= bit[index[p]]
            has_pm |= alive
        fc &= has_pm
    nbr = [np.zeros(masks.shape, np.uint32) for _ in range(n)]
    for (a, b), e in index.items():
        x = bit[e].astype(np.uint32)
        nbr[a] |= x << np.uint32(b)
        nbr[b] |= x << np.uint32(a)
    fc &= _connected_masks(nbr, n)
    minimal = fc.copy()
    for e in range(len(pairs)):
        minimal &= ~bit[e] | ~fc[masks ^ np.uint32(1 << e)]
    found = set()
    for mask in np.flatnonzero(minimal):
        edges = [p for p, e in index.items() if (mask >> e) & 1]
        found.add(canonical_form(Graph.from_edges(n, edges)))
    return _confirm(found, is_minimal_factor_critical)


# ------------------------------------------------------------ harness


def _report(n: int, class_name: str, codes: set[str], bound: float, extremal: set[str]) -> EnumerationReport:
    rhos = {c: spectral_radius(parse_graph6(c)).rho for c in sorted(codes)}
    if not rhos:
        return EnumerationReport(n, class_name, 0, float("nan"), [], bound, False, False)
    max_rho = max(rhos.values())
    argmax = sorted(c for c, r in rhos.items() if r >= max_rho - BOUND_TOL)
    return EnumerationReport(
        n=n,
        class_name=class_name,
        count=len(codes),
        max_rho=max_rho,
        argmax=argmax,
        bound=bound,
        bound_met=max_rho <= bound + BOUND_TOL,
        extremal_match=set(argmax) == extremal,
        rhos=rhos,
    )


def verify_theorem_1(n: int, jobs: int = 1) -> EnumerationReport:
    """Maximum spectral radius over minimal matching covered bipartite graphs of order ``n``."""
    if n % 2 or not 2 <= n <= MAX_BIPARTITE_N:
        raise ValueError(f"n must be even with 2 <= n <= {MAX_BIPARTITE_N}")
    codes = enumerate_minimal_mc_bipartite(n, jobs)
    if n == 2:
        extremal = Graph.from_edges(2, [(0, 1)])
    elif n == 4:
        extremal = cycle_graph(4)
    else:
        extremal = gen_p3star(n)
    bound = 2.0 if n <= 4 else rho_p3star(n)
    return _report(n, CLASS_BIPARTITE, codes, bound, {canonical_form(extremal)})


def verify_theorem_2(n: int, jobs: int = 1) -> EnumerationReport:
    """Maximum spectral radius over minimal factor-critical graphs of order ``n``."""
    if n % 2 == 0 or not 3 <= n <= MAX_FC_N:
        raise ValueError(f"n must be odd with 3 <= n <= {MAX_FC_N}")
    codes = enumerate_minimal_factor_critical(n, jobs)
    return _report(n, CLASS_FC, codes, rho_friendship(n), {canonical_form(gen_friendship(n))})


def block_subgraphs(g: Graph) -> list[Graph]:
    """Each block of ``g`` as a standalone graph."""
    out = []
    for b in blocks(g):
        h, _ = without_vertices(g, set(range(g.n)) - set(b))
        out.append(h)
    return out
