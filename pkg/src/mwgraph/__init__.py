"""Connectivity and clustering of matrix-weighted graphs.

Three routes to the same question (which vertices are forced to agree by the
consensus Laplacian?): an exact kernel oracle, a brute-force path test, and a
Warshall-style closure over series and parallel sums of PSD matrices.
"""

from .blocks import BlockMatrix, block_decision, block_identity, block_vee, block_wedge
from .bruteforce import (brute_force_partition, enumerate_simple_paths, pair_kernel,
                         path_kernel, path_set)
from .errors import MwGraphError, PathBudgetExceeded
from .graph import MwGraph, build_graph, laplacian, topological_components
from .linalg import (DecisionTag, PsdMatrix, decision, make_psd, parallel_sum, pinv, rank_of,
                     series_sum)
from .oracle import oracle_partition
from .partition import Partition, Provenance
from .subspace import Subspace, intersect, kernel_of, subspace_sum
from .tolerance import DEFAULT_TOL, TolerancePolicy
from .warshall import warshall_partition, warshall_run

__version__ = "0.1.0"
