"""Greedy edge-increasing vertex sequences.

A vertex sequence is edge-increasing when every vertex after the first brings
at least one edge not incident to any earlier vertex. Greedily taking the
vertex with the fewest remaining incident edges removes at most two vertices
per step, so graphs without isolated vertices always yield a sequence of
length at least |V|/2.
"""

from trailfrac import gen_family, gen_random_multigraph, gen_star, greedy_eis, verify_eis


def show(name, g):
    seq = greedy_eis(g)
    non_isolated = len({v for e in g.edges for v in e})
    print(f"{name}: n={g.vertex_count} m={g.m}")
    print(f"  sequence   : {list(seq.vertices)}")
    print(f"  fresh edges: {list(seq.fresh_edges)}")
    print(f"  eliminated per step: {list(seq.eliminated_per_step)}")
    print(
        f"  length {seq.length} >= {non_isolated}/2 = {non_isolated / 2}: "
        f"{2 * seq.length >= non_isolated}, verifies: {verify_eis(g, seq)}\n"
    )


# Star: the leaves all tie at one incident edge, so they go first.
show("star with 4 leaves", gen_star(4))

# Two-vertex family: one pick removes every edge and both vertices.
show("two-vertex family, 4 edges", gen_family(4))

show("random multigraph", gen_random_multigraph(10, 18, seed=42))

# The guarantee holds across a batch of random graphs.
worst = 2.0
for seed in range(200):
    g = gen_random_multigraph(2 + seed % 20, 1 + (seed * 3) % 60, seed=seed)
    seq = greedy_eis(g)
    non_isolated = len({v for e in g.edges for v in e})
    assert verify_eis(g, seq)
    if non_isolated:
        worst = min(worst, seq.length / non_isolated)
print(f"200 random graphs: worst length / non-isolated ratio = {worst:.3f} (bound: 0.5)")
