# A small survey over random graphs.
#
# The three methods are run side by side. The oracle is exact; brute force and
# the closure are sound (never merge what the oracle splits) but can miss
# merges. Disagreements between the two heuristics are printed by seed.
from collections import Counter

from mwgraph.bruteforce import brute_force_partition
from mwgraph.generate import random_graph
from mwgraph.oracle import oracle_partition
from mwgraph.warshall import warshall_run

rng_seeds = range(60)
tally = Counter()
for seed in rng_seeds:
    g = random_graph(5, 2, seed=seed, edge_prob=0.6)
    o = oracle_partition(g).partition
    b = brute_force_partition(g).partition
    w = warshall_run(g).partition
    tally["brute force exact"] += b == o
    tally["closure exact"] += w == o
    tally["both sound"] += b.refines(o) and w.refines(o)
    if b != w:
        print(f"seed {seed}: brute force {b}  closure {w}  oracle {o}")

for k, v in tally.items():
    print(f"{k}: {v}/{len(rng_seeds)}")
