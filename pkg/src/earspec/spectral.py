"""Adjacency spectral radius, Perron vectors and vertex orbits."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import Graph, GraphError, _individualize, _refine, components, is_connected, without_vertices

__all__ = [
    "SpectralResult",
    "SpectralError",
    "ConvergenceError",
    "spectral_radius",
    "graph_rho",
    "rho_p3star",
    "rho_friendship",
    "automorphism_orbits",
    "find_automorphism",
    "Dominance",
    "dominance_check",
]

MAX_ORBIT_ORDER = 12


class SpectralError(ValueError):
    pass


class ConvergenceError(SpectralError):
    def __init__(self, msg: str, residual: float, iterations: int):
        super().__init__(msg)
        self.residual = residual
        self.iterations = iterations


@dataclass(frozen=True)
class SpectralResult:
    rho: float
    perron: tuple[float, ...]
    iterations: int
    residual: float

    def to_json(self) -> dict:
        return {
            "rho": self.rho,
            "perron": list(self.perron),
            "iterations": self.iterations,
            "residual": self.residual,
        }


def spectral_radius(g: Graph, tol: float = 1e-12, max_iter: int = 10**6) -> SpectralResult:
    """Perron pair of a connected graph by power iteration on ``A + I``.

    The shift makes the Perron root strictly dominant even for bipartite
    graphs, and the all-ones start vector cannot be orthogonal to the
    Perron vector. Iteration stops once
    ``max_v |(Ax)_v - rho x_v| <= tol * max(1, rho)``.
    """
    if g.n < 1:
        raise SpectralError("spectral radius needs at least one vertex")
    if not is_connected(g):
        raise SpectralError("graph is disconnected")
    if g.n == 1:
        return SpectralResult(0.0, (1.0,), 0, 0.0)
    a = g.adjacency_matrix()
    x = np.full(g.n, 1.0 / math.sqrt(g.n))
    residual = math.inf
    for it in range(1, max_iter + 1):
        ax = a @ x
        rho = float(x @ ax)
        residual = float(np.max(np.abs(ax - rho * x)))
        if residual <= tol * max(1.0, rho):
            return SpectralResult(rho, tuple(float(v) for v in x), it, residual)
        y = ax + x
        x = y / np.linalg.norm(y)
    raise ConvergenceError(
        f"no convergence in {max_iter} iterations (residual {residual:.3e})", residual, max_iter
    )


def graph_rho(g: Graph, tol: float = 1e-12) -> float:
    """Spectral radius of any graph: the maximum over its components."""
    best = 0.0
    for comp in components(g):
        if len(comp) > 1:
            h, _ = without_vertices(g, set(range(g.n)) - set(comp))
            best = max(best, spectral_radius(h, tol).rho)
    return best


def rho_p3star(n: int) -> float:
    """Spectral radius of the union of (n-2)/2 length-3 paths on two hubs."""
    if n < 6 or n % 2:
        raise ValueError("n must be even and at least 6")
    return (1.0 + math.sqrt(2 * n - 3)) / 2.0


def rho_friendship(n: int) -> float:
    """Spectral radius of K1 joined with (n-1)/2 disjoint edges.

    From the equitable partition {centre}, {rest}: rho^2 - rho - (n-1) = 0.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError("n must be odd and at least 3")
    return (1.0 + math.sqrt(4 * n - 3)) / 2.0


# ------------------------------------------------------------ orbits


def _cells_match(ca: list[int], cb: list[int]) -> bool:
    return sorted(ca) == sorted(cb)


def _extend(g: Graph, ca: list[int], cb: list[int]) -> list[int] | None:
    ca, cb = _refine(g, ca), _refine(g, cb)
    if not _cells_match(ca, cb):
        return None
    sizes: dict[int, int] = {}
    for c in ca:
        sizes[c] = sizes.get(c, 0) + 1
    target = next((c for c in sorted(sizes) if sizes[c] > 1), None)
    if target is None:
        # discrete: colour classes pair vertices up
        where = {c: v for v, c in enumerate(cb)}
        perm = [where[ca[v]] for v in range(g.n)]
        ok = all(g.has_edge(perm[u], perm[v]) for u, v in g.edges())
        return perm if ok else None
    x = next(v for v in range(g.n) if ca[v] == target)
    for y in range(g.n):
        if cb[y] == target:
            found = _extend(g, _individualize(ca, x), _individualize(cb, y))
            if found is not None:
                return found
    return None


def find_automorphism(g: Graph, u: int, v: int) -> list[int] | None:
    """An automorphism mapping ``u`` to ``v`` (as an image list) or None."""
    start = [0] * g.n
    return _extend(g, _individualize(start, u), _individualize(start, v))


def automorphism_orbits(g: Graph) -> list[list[int]]:
    """Vertex orbits of the full automorphism group, sorted."""
    if g.n > MAX_ORBIT_ORDER:
        raise GraphError(f"orbit computation limited to n <= {MAX_ORBIT_ORDER}")
    parent = list(range(g.n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    colors = _refine(g, [0] * g.n)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if colors[u] != colors[v] or find(u) == find(v):
                continue
            perm = find_automorphism(g, u, v)
            if perm is not None:
                for a, b in enumerate(perm):
                    union(a, b)
    orbits: dict[int, list[int]] = {}
    for v in range(g.n):
        orbits.setdefault(find(v), []).append(v)
    return sorted(orbits.values())


# --------------------------------------------------------- dominance


@dataclass(frozen=True)
class Dominance:
    rho_sub: float
    rho_super: float
    strict_expected: bool
    holds: bool


def dominance_check(h: Graph, g: Graph, tol: float = 1e-9) -> Dominance:
    """Check rho(h) <= rho(g) for a spanning subgraph ``h`` of connected ``g``.

    When ``h`` misses an edge of ``g`` the inequality must be strict by
    more than ``tol``.
    """
    if h.n != g.n or not set(h.edges()) <= set(g.edges()):
        raise GraphError("first graph is not a spanning subgraph of the second")
    if not is_connected(g):
        raise SpectralError("supergraph must be connected")
    rh, rg = graph_rho(h), spectral_radius(g).rho
    strict = h.m < g.m
    holds = rh < rg - tol if strict else abs(rh - rg) <= tol
    return Dominance(rh, rg, strict, holds)
