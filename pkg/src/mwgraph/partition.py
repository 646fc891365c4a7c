"""Vertex partitions and the cluster-merge pass shared by the heuristics."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable


class Provenance(enum.Enum):
    ORACLE = "oracle"
    BRUTE_FORCE = "brute-force"
    WARSHALL = "warshall"
    TOPOLOGY = "topology"


@dataclass(frozen=True)
class Partition:
    """Clusters of the vertex ids ``1..n``.

    Clusters are sorted internally and ordered by their smallest member, so
    two partitions of the same set compare equal regardless of provenance.
    """

    n: int
    clusters: tuple[tuple[int, ...], ...]
    provenance: Provenance = field(default=Provenance.ORACLE, compare=False)

    def __post_init__(self):
        norm = tuple(sorted((tuple(sorted(c)) for c in self.clusters if c), key=lambda c: c[0]))
        seen = [v for c in norm for v in c]
        if sorted(seen) != list(range(1, self.n + 1)):
            raise ValueError(f"clusters do not partition 1..{self.n}: {norm}")
        object.__setattr__(self, "clusters", norm)

    @classmethod
    def from_labels(cls, labels, provenance: Provenance) -> "Partition":
        """``labels[v - 1]`` is the cluster label of vertex ``v``."""
        groups: dict = {}
        for v, lab in enumerate(labels, start=1):
            groups.setdefault(lab, []).append(v)
        return cls(len(labels), tuple(tuple(g) for g in groups.values()), provenance)

    @property
    def is_connected(self) -> bool:
        return len(self.clusters) == 1

    def labels(self) -> list[int]:
        out = [0] * self.n
        for k, c in enumerate(self.clusters):
            for v in c:
                out[v - 1] = k
        return out

    def same_cluster(self, i: int, j: int) -> bool:
        lab = self.labels()
        return lab[i - 1] == lab[j - 1]

    def refines(self, other: "Partition") -> bool:
        """True if every cluster of ``self`` sits inside one cluster of ``other``."""
        lab = other.labels()
        return all(len({lab[v - 1] for v in c}) == 1 for c in self.clusters)

    def as_lists(self) -> list[list[int]]:
        return [list(c) for c in self.clusters]

    def __str__(self):
        return "{" + ", ".join("{" + ",".join(map(str, c)) + "}" for c in self.clusters) + "}"


def merge_passing_pairs(n: int, passes: Iterable[tuple[int, int]], provenance: Provenance) -> Partition:
    """Greedy pass over the passing pairs ``(i, j)``, taken in lexicographic order.

    For each passing pair, the cluster currently holding ``j`` is absorbed into
    the cluster currently holding ``i`` unless they already coincide.
    """
    owner = list(range(n + 1))
    members = {v: [v] for v in range(1, n + 1)}
    for i, j in sorted(passes):
        ci, cj = owner[i], owner[j]
        if ci == cj:
            continue
        for v in members[cj]:
            owner[v] = ci
        members[ci].extend(members.pop(cj))
    return Partition(n, tuple(tuple(m) for m in members.values()), provenance)
