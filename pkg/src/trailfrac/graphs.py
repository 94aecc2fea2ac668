"""Directed multigraph core: edge lists, parsing, and degree primitives.

Vertices are dense integer indices ``0..n-1``. An edge is identified by its
position in the edge list, never by its endpoint pair, so parallel edges stay
distinguishable and edge subsets are sets of positions. Self-loops are
forbidden. All types here are immutable and all operations are pure, so
values can be shared freely across workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Union


class Edge(NamedTuple):
    source: int
    target: int


class GraphFormatError(ValueError):
    """An edge-list document that does not follow the text format."""


@dataclass(frozen=True)
class Multigraph:
    """Immutable directed multigraph with positional edge identity."""

    vertex_count: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        object.__setattr__(self, "edges", tuple(Edge(*e) for e in self.edges))
        n = self.vertex_count
        for i, (s, t) in enumerate(self.edges):
            if not (0 <= s < n) or not (0 <= t < n):
                raise ValueError(f"edge {i}: endpoint ({s}, {t}) out of range for n={n}")
            if s == t:
                raise ValueError(f"edge {i}: self-loop at vertex {s} is forbidden")

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.edges)


@dataclass(frozen=True)
class EdgeSubset:
    """A subset of edge positions of a width-``m`` edge list, stored as a bit mask.

    Bit ``i`` of ``mask`` is set iff edge ``i`` is a member.
    """

    mask: int
    width: int

    def __post_init__(self) -> None:
        if self.width < 0:
            raise ValueError("width must be nonnegative")
        if not 0 <= self.mask < (1 << self.width):
            raise ValueError(f"mask {self.mask:#x} does not fit in width {self.width}")

    @classmethod
    def from_indices(cls, indices: Iterable[int], width: int) -> EdgeSubset:
        mask = 0
        for i in indices:
            if not 0 <= i < width:
                raise ValueError(f"edge index {i} out of range for m={width}")
            bit = 1 << i
            if mask & bit:
                raise ValueError(f"duplicate edge index {i}")
            mask |= bit
        return cls(mask, width)

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.width) if self.mask >> i & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self):
        return iter(self.indices)

    def __contains__(self, i: int) -> bool:
        return 0 <= i < self.width and bool(self.mask >> i & 1)


SubsetLike = Union[EdgeSubset, Iterable[int]]


def subset_mask(g: Multigraph, subset: SubsetLike) -> int:
    """Normalize an edge subset (EdgeSubset or iterable of indices) to a bit mask."""
    if isinstance(subset, EdgeSubset):
        if subset.width != g.m:
            raise ValueError(f"subset width {subset.width} does not match edge count {g.m}")
        return subset.mask
    return EdgeSubset.from_indices(subset, g.m).mask


def parse_graph(text: str) -> Multigraph:
    """Parse the edge-list text format.

    Format: lines starting with ``#`` (and blank lines) are ignored; the first
    remaining line is the header ``n m``; exactly ``m`` lines ``src dst`` with
    0-based decimal vertex indices follow. Edge index = order of appearance.
    """
    lines = [ln for raw in text.splitlines() if (ln := raw.strip()) and not ln.startswith("#")]
    if not lines:
        raise GraphFormatError("missing header line 'n m'")
    header = lines[0].split()
    if len(header) != 2:
        raise GraphFormatError(f"malformed header {lines[0]!r}: expected 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise GraphFormatError(f"malformed header {lines[0]!r}: expected two integers") from None
    if n < 0 or m < 0:
        raise GraphFormatError(f"malformed header {lines[0]!r}: counts must be nonnegative")
    body = lines[1:]
    if len(body) != m:
        raise GraphFormatError(f"expected {m} edge lines, found {len(body)}")
    edges = []
    for k, ln in enumerate(body):
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"edge line {k}: malformed {ln!r}, expected 'src dst'")
        try:
            s, t = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"edge line {k}: malformed {ln!r}, expected two integers") from None
        if not (0 <= s < n) or not (0 <= t < n):
            raise GraphFormatError(f"edge line {k}: endpoint ({s}, {t}) out of range for n={n}")
        if s == t:
            raise GraphFormatError(f"edge line {k}: self-loop at vertex {s} is forbidden")
        edges.append(Edge(s, t))
    return Multigraph(n, tuple(edges))


def serialize_graph(g: Multigraph) -> str:
    """Render a graph in the edge-list text format; inverse of :func:`parse_graph`."""
    lines = [f"{g.vertex_count} {g.m}"]
    lines.extend(f"{e.source} {e.target}" for e in g.edges)
    return "\n".join(lines) + "\n"


class Degree(NamedTuple):
    in_degree: int
    out_degree: int
    total: int


@dataclass(frozen=True)
class DegreeProfile:
    """Per-vertex (in, out) degree pairs with respect to one edge subset."""

    pairs: tuple[tuple[int, int], ...]

    def total_in(self) -> int:
        return sum(p[0] for p in self.pairs)

    def total_out(self) -> int:
        return sum(p[1] for p in self.pairs)


def degree(g: Multigraph, v: int, subset: SubsetLike | None = None) -> Degree:
    """In-, out-, and total degree of ``v`` with respect to a subset (default: all edges)."""
    if not 0 <= v < g.vertex_count:
        raise ValueError(f"vertex {v} out of range for n={g.vertex_count}")
    mask = (1 << g.m) - 1 if subset is None else subset_mask(g, subset)
    ins = outs = 0
    for i, (s, t) in enumerate(g.edges):
        if mask >> i & 1:
            if t == v:
                ins += 1
            if s == v:
                outs += 1
    return Degree(ins, outs, ins + outs)


def degree_profile(g: Multigraph, subset: SubsetLike | None = None) -> DegreeProfile:
    mask = (1 << g.m) - 1 if subset is None else subset_mask(g, subset)
    ins = [0] * g.vertex_count
    outs = [0] * g.vertex_count
    for i, (s, t) in enumerate(g.edges):
        if mask >> i & 1:
            outs[s] += 1
            ins[t] += 1
    return DegreeProfile(tuple(zip(ins, outs)))


def imbalance_profile(g: Multigraph, subset: SubsetLike | None = None) -> tuple[int, ...]:
    """Per-vertex out-degree minus in-degree with respect to a subset; sums to zero."""
    profile = degree_profile(g, subset)
    return tuple(out - inn for inn, out in profile.pairs)


def incident_edges(g: Multigraph, vertices: Iterable[int]) -> EdgeSubset:
    """Edges with at least one endpoint in ``vertices``."""
    vs = set(vertices)
    for v in vs:
        if not 0 <= v < g.vertex_count:
            raise ValueError(f"vertex {v} out of range for n={g.vertex_count}")
    mask = 0
    for i, (s, t) in enumerate(g.edges):
        if s in vs or t in vs:
            mask |= 1 << i
    return EdgeSubset(mask, g.m)
