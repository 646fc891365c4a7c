# Watching the block closure converge on the five-vertex example.
#
# Vertices 1 and 4 end up in one cluster even though no single path between
# them carries the whole plane: path 1-2-4 locks e1, path 1-3-4 locks e2,
# and together they lock everything.
import numpy as np

from mwgraph.bruteforce import enumerate_simple_paths, pair_kernel, path_kernel
from mwgraph.graphfile import load_example
from mwgraph.oracle import oracle_partition
from mwgraph.warshall import warshall_run

np.set_printoptions(precision=4, suppress=True)
g = load_example("ex2")

for p in enumerate_simple_paths(g, 1, 4):
    print("-".join(map(str, p)), "kernel dim", path_kernel(g, p).dim)
print("pair kernel dim:", pair_kernel(g, 1, 4, early_stop=False).dim)

run = warshall_run(g)
for k, m in enumerate(run.history):
    print(f"\nstep {k} tags")
    print(m.tag_letters())

print("\nfinal M (step 4)")
print(run.history[4].dense())

print("\nwarshall:", run.partition)
print("oracle:  ", oracle_partition(g).partition)
