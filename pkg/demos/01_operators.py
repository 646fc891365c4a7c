# The two matrix "sums" behind everything else.
#
# A series sum is plain addition. A parallel sum is A (A+B)^+ B, the
# electrical formula for two conductances side by side. What matters for
# clustering is the kernel: series sums intersect kernels, parallel sums add
# them.
import numpy as np

from mwgraph.linalg import decision, make_psd, parallel_sum, series_sum
from mwgraph.subspace import kernel_of

a = make_psd(np.diag([1.0, 0.0]))
b = make_psd(np.diag([0.0, 1.0]))
j = make_psd([[1.0, -1.0], [-1.0, 1.0]])

print("A v B =\n", series_sum(a, b).entries)
print("A ^ B =\n", parallel_sum(a, b).entries)   # kernels e2 + e1 span the plane, so zero

# Two equal rank-one weights in parallel give half of either one
print("J ^ J =\n", parallel_sum(j, j).entries)

for name, m in [("A", a), ("B", b), ("J", j), ("A v J", series_sum(a, j)), ("A ^ J", parallel_sum(a, j))]:
    print(f"dim ker({name}) = {kernel_of(m).dim}")

# The decision operator forgets magnitudes and keeps only the kernel.
# A full-rank block becomes the identity, a zero block stays zero, and
# anything in between is returned unchanged with a General tag.
for m in (a, series_sum(a, b), make_psd(np.zeros((2, 2)))):
    out, tag = decision(m)
    print(tag.name, out.entries.tolist())
