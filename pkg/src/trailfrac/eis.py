"""Edge-increasing vertex sequences and the greedy construction.

A vertex sequence is edge-increasing when every vertex after the first has at
least one incident edge not incident to any earlier vertex. The greedy
procedure below always picks the vertex with the fewest remaining incident
edges; each pick removes at most two vertices from the working set, so when
every vertex starts with an incident edge the sequence reaches length at
least |V|/2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .graphs import Multigraph


@dataclass(frozen=True)
class EisSequence:
    """Greedy result: chosen vertices, one certificate fresh edge per vertex,
    and the number of working-set vertices eliminated by each step."""

    vertices: tuple[int, ...]
    fresh_edges: tuple[int, ...]
    eliminated_per_step: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)


def greedy_eis(g: Multigraph) -> EisSequence:
    """Build an edge-increasing sequence by repeatedly taking the vertex with the
    fewest remaining incident edges (ties: lowest index).

    The chosen vertex is deleted together with its incident edges, and vertices
    left with no edges are dropped. Vertices isolated in the input are skipped;
    for graphs in which every vertex has an incident edge the result has length
    at least |V|/2. The certificate fresh edge recorded for each vertex is the
    lowest-index edge still present when the vertex is picked.
    """
    remaining: dict[int, set[int]] = {}
    for i, (s, t) in enumerate(g.edges):
        remaining.setdefault(s, set()).add(i)
        remaining.setdefault(t, set()).add(i)

    vertices: list[int] = []
    fresh_edges: list[int] = []
    eliminated: list[int] = []
    while remaining:
        v = min(remaining, key=lambda u: (len(remaining[u]), u))
        dropped = remaining.pop(v)
        vertices.append(v)
        fresh_edges.append(min(dropped))
        removed = 1
        for e in dropped:
            s, t = g.edges[e]
            u = t if s == v else s
            live = remaining.get(u)
            if live is None:
                continue
            live.discard(e)
            if not live:
                del remaining[u]
                removed += 1
        eliminated.append(removed)
    return EisSequence(tuple(vertices), tuple(fresh_edges), tuple(eliminated))


def verify_eis(g: Multigraph, seq: Union[EisSequence, Iterable[int]]) -> bool:
    """Check the edge-increasing property for an arbitrary vertex sequence.

    Every vertex after the first must contribute an edge not incident to the
    prefix. Sequences with repeated vertices fail.
    """
    vertices = seq.vertices if isinstance(seq, EisSequence) else tuple(seq)
    for v in vertices:
        if not 0 <= v < g.vertex_count:
            raise ValueError(f"vertex {v} out of range for n={g.vertex_count}")
    if len(set(vertices)) != len(vertices):
        return False
    incident: dict[int, set[int]] = {v: set() for v in vertices}
    for i, (s, t) in enumerate(g.edges):
        if s in incident:
            incident[s].add(i)
        if t in incident:
            incident[t].add(i)
    prefix: set[int] = set()
    for i, v in enumerate(vertices):
        if i > 0 and incident[v] <= prefix:
            return False
        prefix |= incident[v]
    return True
