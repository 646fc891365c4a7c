"""Side-by-side comparison of the three clustering methods, and report formatting."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .bruteforce import DEFAULT_PATH_BUDGET, brute_force_partition
from .graph import MwGraph
from .oracle import oracle_partition
from .partition import Partition
from .tolerance import DEFAULT_TOL, TolerancePolicy
from .warshall import warshall_run


def sig6(x: float) -> float:
    """Round to 6 significant digits (and drop negative zero)."""
    return float(f"{x:.6g}") + 0.0


def to_json(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2)


@dataclass
class Finding:
    kind: str            # "SOUNDNESS VIOLATION" or "KNOWN GAP"
    cluster: tuple       # the cluster that is split or over-merged
    pieces: dict         # method name -> how that method carves the cluster

    def as_dict(self):
        return {"kind": self.kind, "cluster": list(self.cluster),
                "pieces": {k: [list(p) for p in v] for k, v in sorted(self.pieces.items())}}

    def __str__(self):
        parts = "; ".join(f"{k}: " + " ".join("{" + ",".join(map(str, p)) + "}" for p in v)
                          for k, v in sorted(self.pieces.items()))
        return f"{self.kind} {{{','.join(map(str, self.cluster))}}} ({parts})"


@dataclass
class Comparison:
    partitions: dict                     # method name -> Partition
    violations: list = field(default_factory=list)
    gaps: list = field(default_factory=list)

    def as_dict(self):
        return {
            "partitions": {k: p.as_lists() for k, p in self.partitions.items()},
            "soundness_violations": [f.as_dict() for f in self.violations],
            "known_gaps": [f.as_dict() for f in self.gaps],
        }


def _pieces(cluster, part: Partition):
    inside = set(cluster)
    return [c2 for c2 in (tuple(v for v in c if v in inside) for c in part.clusters) if c2]


def compare_partitions(oracle: Partition, heuristics: dict) -> Comparison:
    """Check heuristic partitions against the oracle.

    A SOUNDNESS VIOLATION is a heuristic cluster that straddles several oracle
    clusters. A KNOWN GAP is an oracle cluster that at least one heuristic
    splits; each is reported once, listing every heuristic that splits it.
    """
    out = Comparison({"oracle": oracle, **heuristics})
    for name, part in heuristics.items():
        for c in part.clusters:
            pieces = _pieces(c, oracle)
            if len(pieces) > 1:
                out.violations.append(Finding("SOUNDNESS VIOLATION", c, {name: pieces}))
    for c in oracle.clusters:
        split = {name: _pieces(c, part) for name, part in heuristics.items()}
        split = {k: v for k, v in split.items() if len(v) > 1}
        if split:
            out.gaps.append(Finding("KNOWN GAP", c, split))
    return out


def compare(g: MwGraph, tol: TolerancePolicy = DEFAULT_TOL,
            path_budget: int | None = DEFAULT_PATH_BUDGET) -> Comparison:
    return compare_partitions(
        oracle_partition(g, tol).partition,
        {"brute-force": brute_force_partition(g, True, path_budget, tol).partition,
         "warshall": warshall_run(g, tol).partition},
    )
