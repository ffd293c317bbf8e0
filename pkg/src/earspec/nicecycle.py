"""Nice cycles, chords and the chord-free test for minimality."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph, bipartition, without_vertices
from .matching import Certificate, has_perfect_matching, is_matching_covered

__all__ = [
    "Cycle",
    "CycleList",
    "PreconditionError",
    "enumerate_cycles",
    "is_nice",
    "chords",
    "minimality_via_nice_cycles",
]

DEFAULT_MAX_CYCLES = 10**6


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class Cycle:
    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        vs = self.vertices
        if len(vs) < 3 or len(set(vs)) != len(vs):
            raise ValueError(f"not a simple cycle: {vs}")

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self) -> frozenset[tuple[int, int]]:
        vs = self.vertices
        return frozenset(
            (min(a, b), max(a, b)) for a, b in zip(vs, vs[1:] + vs[:1])
        )

    def check(self, g: Graph) -> None:
        for u, v in self.edges():
            if not g.has_edge(u, v):
                raise ValueError(f"cycle edge {u}-{v} missing from graph")


class CycleList(list):
    """List of cycles with an ``overflow`` flag set on truncation."""

    overflow: bool = False


def enumerate_cycles(g: Graph, max_count: int = DEFAULT_MAX_CYCLES) -> CycleList:
    """All simple cycles, each once.

    A cycle is reported from its smallest vertex, heading first toward the
    smaller of its two neighbours on the cycle.
    """
    out = CycleList()

    def extend(path: list[int], on_path: set[int]) -> bool:
        start, last = path[0], path[-1]
        for w in sorted(g.adj[last]):
            if w == start and len(path) >= 3 and path[1] < last:
                if len(out) >= max_count:
                    out.overflow = True
                    return False
                out.append(Cycle(tuple(path)))
            elif w > start and w not in on_path:
                path.append(w)
                on_path.add(w)
                ok = extend(path, on_path)
                path.pop()
                on_path.discard(w)
                if not ok:
                    return False
        return True

    for s in range(g.n):
        if not extend([s], {s}):
            break
    return out


def is_nice(g: Graph, h: Iterable[int]) -> bool:
    """Whether deleting the vertex set ``h`` leaves a perfect matching."""
    return has_perfect_matching(without_vertices(g, h)[0])


def chords(g: Graph, c: Cycle | Sequence[int]) -> frozenset[tuple[int, int]]:
    if not isinstance(c, Cycle):
        c = Cycle(tuple(c))
    c.check(g)
    on = set(c.vertices)
    own = c.edges()
    return frozenset(
        (u, v) for u in on for v in g.adj[u] if u < v and v in on and (u, v) not in own
    )


def minimality_via_nice_cycles(
    g: Graph, max_count: int = DEFAULT_MAX_CYCLES
) -> Certificate:
    """Minimality of a bipartite matching covered graph by nice-cycle chords.

    Raises :class:`PreconditionError` if ``g`` is not bipartite or not
    matching covered.
    """
    prop = "minimal-matching-covered"
    if bipartition(g) is None:
        raise PreconditionError("graph is not bipartite")
    if not is_matching_covered(g):
        raise PreconditionError("graph is not matching covered")
    cycles = enumerate_cycles(g, max_count)
    if cycles.overflow:
        raise PreconditionError(f"more than {max_count} cycles")
    for c in cycles:
        cs = chords(g, c)
        if cs and is_nice(g, c.vertices):
            return Certificate(prop, False, ("cycle+chord", (c.vertices, min(cs))), "chorded-nice-cycle")
    return Certificate(prop, True, None, "no-chorded-nice-cycle")
