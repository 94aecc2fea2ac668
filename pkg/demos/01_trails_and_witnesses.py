"""Deciding trail-representability of edge subsets, with witnesses.

A subset of edges of a directed multigraph is a trail when its edges can be
ordered so that each edge ends where the next one starts. This walks through
the decision on a few small graphs and cross-checks the fast decision against
the brute-force permutation oracle.
"""

from trailfrac import (
    Multigraph,
    gen_family,
    is_trail,
    necessary_balance_condition,
    oracle_is_trail,
    parse_graph,
    serialize_graph,
)

# A 2-edge path a -> b -> c, written in the edge-list text format.
path = parse_graph("3 2\n0 1\n1 2\n")
print("graph:")
print(serialize_graph(path))

verdict = is_trail(path, [0, 1])
print(f"subset {{0, 1}} is a trail: {verdict.is_trail}, witness {verdict.witness}")

# The two-vertex family: edges 0,1 point forward, edges 2,3 point back.
family = gen_family(4)
print("\ntwo-vertex family with 4 edges:")
for subset in ([0], [0, 2], [0, 1], [0, 1, 2], [0, 1, 2, 3]):
    verdict = is_trail(family, subset)
    reason = "" if verdict.is_trail else f" ({verdict.failure_reason.value})"
    witness = f", witness {list(verdict.witness)}" if verdict.is_trail else ""
    print(f"  subset {subset}: {'trail' if verdict.is_trail else 'not a trail'}{reason}{witness}")

# Balance is necessary but not sufficient: two vertex-disjoint 2-cycles have
# all imbalances zero yet cannot be chained into one trail.
cycles = Multigraph(4, ((0, 1), (1, 0), (2, 3), (3, 2)))
full = [0, 1, 2, 3]
print("\ntwo disjoint 2-cycles, all four edges:")
print(f"  balance condition: {necessary_balance_condition(cycles, full)}")
print(f"  is a trail:        {is_trail(cycles, full).is_trail} "
      f"({is_trail(cycles, full).failure_reason.value})")

# Every verdict here agrees with literally trying all |T|! orderings.
print("\ncross-check against the permutation oracle on every subset of the family graph:")
mismatches = 0
for mask in range(1 << family.m):
    subset = [i for i in range(family.m) if mask >> i & 1]
    if is_trail(family, subset).is_trail != oracle_is_trail(family, subset):
        mismatches += 1
print(f"  mismatches over {1 << family.m} subsets: {mismatches}")
