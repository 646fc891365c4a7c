# Where the path-based heuristics stop short.
#
# Vertices 1, 3 and 6 move together in every kernel vector of the Laplacian.
# Paths 1-3 and 1-2-3 leave complementary directions free, so 1 and 3 are
# joined by the heuristics too. Every path from 1 to 6 leaves e1 free, though,
# and only the cycle taken as a whole rules that direction out.
from mwgraph.bruteforce import pair_kernel, path_kernel
from mwgraph.graphfile import load_example
from mwgraph.report import compare

g = load_example("ex4")

print("ker(1-2-3) =", path_kernel(g, (1, 2, 3)).basis.ravel())
print("ker(1-3)   =", path_kernel(g, (1, 3)).basis.ravel())
print("pair (1,6) kernel basis:\n", pair_kernel(g, 1, 6, early_stop=False).basis)

cmp = compare(g)
for kind, p in cmp.partitions.items():
    print(f"{kind:12s} {p}")
for f in cmp.gaps + cmp.violations:
    print(f.kind, f.cluster, f.pieces)
