"""Trail decisions for edge subsets, with explicit witness orderings.

A nonempty edge subset is orderable as a trail iff its edges lie in one weak
component and the per-vertex imbalances (out minus in) are either all zero or
exactly one ``+1`` and one ``-1``. :func:`is_trail` applies that
characterization and constructs a witness; :func:`oracle_is_trail` is the
brute-force ground truth that tries every ordering, kept deliberately naive so
the fast path can be validated against it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

from .graphs import Multigraph, SubsetLike, subset_mask

ORACLE_MAX_EDGES = 8


class FailureReason(str, Enum):
    EMPTY_SUBSET = "empty_subset"
    DEGREE_IMBALANCE = "degree_imbalance"
    DISCONNECTED = "disconnected"


@dataclass(frozen=True)
class TrailVerdict:
    """Decision result: when positive, ``witness`` orders the subset into a trail."""

    is_trail: bool
    witness: tuple[int, ...] | None = None
    failure_reason: FailureReason | None = None


def _edge_arrays(g: Multigraph) -> tuple[list[int], list[int]]:
    return [e.source for e in g.edges], [e.target for e in g.edges]


def _mask_imbalances(src: list[int], dst: list[int], mask: int) -> dict[int, int]:
    """Out-minus-in imbalance for every vertex touched by the mask."""
    imb: dict[int, int] = {}
    mm = mask
    while mm:
        low = mm & -mm
        mm ^= low
        j = low.bit_length() - 1
        s, t = src[j], dst[j]
        imb[s] = imb.get(s, 0) + 1
        imb[t] = imb.get(t, 0) - 1
    return imb


def _balance_ok(imbalances: dict[int, int]) -> bool:
    plus = minus = 0
    for x in imbalances.values():
        if x == 0:
            continue
        if x == 1:
            plus += 1
        elif x == -1:
            minus += 1
        else:
            return False
    return (plus, minus) in ((0, 0), (1, 1))


def _mask_connected(src: list[int], dst: list[int], mask: int) -> bool:
    """True iff all edges in the mask lie in one weak component (nonempty mask)."""
    if mask == 0:
        return False
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    touched = merges = 0
    mm = mask
    while mm:
        low = mm & -mm
        mm ^= low
        j = low.bit_length() - 1
        for v in (src[j], dst[j]):
            if v not in parent:
                parent[v] = v
                touched += 1
        ra, rb = find(src[j]), find(dst[j])
        if ra != rb:
            parent[ra] = rb
            merges += 1
    return touched - merges == 1


def _mask_is_trail(src: list[int], dst: list[int], mask: int) -> bool:
    """Fast bitmask decision used by enumeration and sampling."""
    if mask == 0:
        return False
    if not _balance_ok(_mask_imbalances(src, dst, mask)):
        return False
    return _mask_connected(src, dst, mask)


def _hierholzer(src: list[int], dst: list[int], mask: int, imbalances: dict[int, int]) -> tuple[int, ...]:
    """Order a feasible mask into a trail, extending by lowest edge index first.

    Open trails start at the unique ``+1`` vertex; closed trails start at the
    source of the lowest-index member edge. The stack walk splices pending
    cycles so the full subset is consumed.
    """
    out: dict[int, list[int]] = {}
    mm = mask
    while mm:  # ascending bit order keeps adjacency lists index-sorted
        low = mm & -mm
        mm ^= low
        j = low.bit_length() - 1
        out.setdefault(src[j], []).append(j)

    start = None
    for v, x in imbalances.items():
        if x == 1:
            start = v
            break
    if start is None:
        start = src[(mask & -mask).bit_length() - 1]

    ptr = dict.fromkeys(out, 0)
    vertex_stack = [start]
    edge_stack: list[int] = []
    reversed_trail: list[int] = []
    while vertex_stack:
        v = vertex_stack[-1]
        lst = out.get(v)
        p = ptr.get(v, 0)
        if lst is not None and p < len(lst):
            ptr[v] = p + 1
            e = lst[p]
            edge_stack.append(e)
            vertex_stack.append(dst[e])
        else:
            vertex_stack.pop()
            if edge_stack:
                reversed_trail.append(edge_stack.pop())
    trail = tuple(reversed(reversed_trail))
    assert len(trail) == mask.bit_count(), "feasibility checks should guarantee a full traversal"
    return trail


def is_trail(g: Multigraph, subset: SubsetLike) -> TrailVerdict:
    """Decide whether the subset can be ordered as a trail; build a witness if so.

    A subset failing both conditions reports ``disconnected``: scattered edges
    are described by where they sit before how they point.
    """
    mask = subset_mask(g, subset)
    if mask == 0:
        return TrailVerdict(False, None, FailureReason.EMPTY_SUBSET)
    src, dst = _edge_arrays(g)
    if not _mask_connected(src, dst, mask):
        return TrailVerdict(False, None, FailureReason.DISCONNECTED)
    imbalances = _mask_imbalances(src, dst, mask)
    if not _balance_ok(imbalances):
        return TrailVerdict(False, None, FailureReason.DEGREE_IMBALANCE)
    return TrailVerdict(True, _hierholzer(src, dst, mask, imbalances), None)


def witness_trail(g: Multigraph, subset: SubsetLike) -> tuple[int, ...] | None:
    """A chaining edge ordering of the subset, or None when it is not a trail."""
    return is_trail(g, subset).witness


def oracle_is_trail(g: Multigraph, subset: SubsetLike) -> bool:
    """Ground-truth decision by trying all ``|T|!`` orderings.

    The empty subset has no edges to order and counts as not-a-trail, matching
    :func:`is_trail`. Guarded to ``|T| <= 8``.
    """
    mask = subset_mask(g, subset)
    indices = [i for i in range(g.m) if mask >> i & 1]
    k = len(indices)
    if k > ORACLE_MAX_EDGES:
        raise ValueError(f"subset too large for the permutation oracle (|T|={k} > {ORACLE_MAX_EDGES})")
    if k == 0:
        return False
    edges = g.edges
    for perm in itertools.permutations(indices):
        end = edges[perm[0]].target
        for e in perm[1:]:
            if edges[e].source != end:
                break
            end = edges[e].target
        else:
            return True
    return False


def necessary_balance_condition(g: Multigraph, subset: SubsetLike) -> bool:
    """Balance test every trail must pass: at most one vertex at +1, one at -1, none beyond."""
    mask = subset_mask(g, subset)
    src, dst = _edge_arrays(g)
    plus = minus = 0
    for x in _mask_imbalances(src, dst, mask).values():
        if x == 0:
            continue
        if x == 1:
            plus += 1
        elif x == -1:
            minus += 1
        else:
            return False
    return plus <= 1 and minus <= 1
