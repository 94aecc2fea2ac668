"""Shared test oracles and corpus builders.

The oracles here are deliberately self-contained (no imports from the
library's decision logic) so tests compare two independent routes.
"""

from __future__ import annotations

import itertools

from trailfrac import Multigraph, gen_cycle, gen_family, gen_path, gen_random_multigraph, gen_star


def perm_oracle(g: Multigraph, indices) -> bool:
    """Literal trail test: some ordering of the edges chains end to start.

    Independent reimplementation of the permutation oracle; empty subsets are
    not trails.
    """
    idx = list(indices)
    if not idx:
        return False
    for perm in itertools.permutations(idx):
        ok = True
        for a, b in zip(perm, perm[1:]):
            if g.edges[a].target != g.edges[b].source:
                ok = False
                break
        if ok:
            return True
    return False


def chains(g: Multigraph, order) -> bool:
    """Whether consecutive edges in the ordering satisfy target == next source."""
    order = list(order)
    return all(g.edges[a].target == g.edges[b].source for a, b in zip(order, order[1:]))


def brute_force_d(g: Multigraph) -> int:
    """d(G) by the permutation oracle over all subsets; practical for m <= 7."""
    m = g.m
    count = 0
    for mask in range(1, 1 << m):
        subset = [i for i in range(m) if mask >> i & 1]
        if perm_oracle(g, subset):
            count += 1
    return count


def all_subsets(m: int):
    for mask in range(1 << m):
        yield mask, [i for i in range(m) if mask >> i & 1]


def two_disjoint_two_cycles() -> Multigraph:
    return Multigraph(4, ((0, 1), (1, 0), (2, 3), (3, 2)))


def small_corpus() -> list[tuple[str, Multigraph]]:
    """>= 50 graphs with m <= 7: families, paths, cycles, stars, 32 random."""
    graphs: list[tuple[str, Multigraph]] = []
    for m in (2, 4, 6):
        graphs.append((f"family{m}", gen_family(m)))
    for k in range(1, 7):
        graphs.append((f"path{k}", gen_path(k)))
    for k in range(2, 7):
        graphs.append((f"cycle{k}", gen_cycle(k)))
    for k in range(1, 7):
        graphs.append((f"star{k}", gen_star(k)))
    seed = 1000
    for n in (2, 3, 4, 5):
        for m in (4, 5, 6, 7):
            for _ in range(2):
                graphs.append((f"random(n={n},m={m},seed={seed})", gen_random_multigraph(n, m, seed)))
                seed += 1
    return graphs
