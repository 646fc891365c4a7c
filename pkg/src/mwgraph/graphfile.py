"""JSON graph files: ``{"n": int, "d": int, "edges": [{"u": int, "v": int, "w": [[...]]}]}``."""

from __future__ import annotations

import json
import warnings
from importlib import resources
from pathlib import Path

import numpy as np

from .errors import GraphFileError
from .graph import MwGraph, build_graph
from .tolerance import DEFAULT_TOL, TolerancePolicy

ASYMMETRY_WARN = 1e-9
EXAMPLES = ("ex1", "ex2", "ex3", "ex4")


class AsymmetricWeightWarning(UserWarning):
    pass


def _int_field(obj, key, where):
    if key not in obj:
        raise GraphFileError(f"missing field {key!r}", where)
    val = obj[key]
    if isinstance(val, bool) or not isinstance(val, int):
        raise GraphFileError(f"{key!r} must be an integer, got {val!r}", where)
    return val


def _matrix(raw, d, where):
    if not isinstance(raw, list) or any(not isinstance(r, list) for r in raw):
        raise GraphFileError("weight must be a list of rows", where)
    if len(raw) != d or any(len(r) != d for r in raw):
        raise GraphFileError(f"weight must be {d}x{d}", where)
    for r in raw:
        for x in r:
            if isinstance(x, bool) or not isinstance(x, (int, float)):
                raise GraphFileError(f"non-numeric weight entry {x!r}", where)
    return np.array(raw, dtype=float)


def graph_from_dict(doc, tol: TolerancePolicy = DEFAULT_TOL) -> MwGraph:
    if not isinstance(doc, dict):
        raise GraphFileError("top level must be a JSON object")
    n = _int_field(doc, "n", "n")
    d = _int_field(doc, "d", "d")
    edges = doc.get("edges")
    if not isinstance(edges, list):
        raise GraphFileError("'edges' must be a list", "edges")
    triples = []
    for k, e in enumerate(edges):
        where = f"edges[{k}]"
        if not isinstance(e, dict):
            raise GraphFileError("edge must be an object", where)
        u = _int_field(e, "u", where)
        v = _int_field(e, "v", where)
        if "w" not in e:
            raise GraphFileError("missing field 'w'", where)
        w = _matrix(e["w"], d, f"{where}.w")
        if np.all(np.isfinite(w)):
            asym = float(np.max(np.abs(w - w.T), initial=0.0))
            if asym > ASYMMETRY_WARN:
                warnings.warn(f"{where} ({u},{v}): weight asymmetric by {asym:.3g}, symmetrized",
                              AsymmetricWeightWarning, stacklevel=2)
        triples.append((u, v, w))
    return build_graph(n, d, triples, tol)


def parse_graph(text: str, tol: TolerancePolicy = DEFAULT_TOL) -> MwGraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFileError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None
    return graph_from_dict(doc, tol)


def load_graph(path, tol: TolerancePolicy = DEFAULT_TOL) -> MwGraph:
    """Read a graph file; ``@ex1`` .. ``@ex4`` name the bundled examples."""
    path = str(path)
    if path.startswith("@"):
        path = str(example_path(path[1:]))
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise GraphFileError(exc.strerror or str(exc), path) from None
    return parse_graph(text, tol)


def graph_to_dict(g: MwGraph) -> dict:
    return {
        "n": g.n,
        "d": g.d,
        "edges": [{"u": e.u, "v": e.v, "w": e.weight.entries.tolist()} for e in g.edges],
    }


def dump_graph(g: MwGraph) -> str:
    return json.dumps(graph_to_dict(g), sort_keys=True)


def example_path(name: str) -> Path:
    name = name.removesuffix(".json")
    if name not in EXAMPLES:
        raise GraphFileError(f"unknown bundled example {name!r}; choose from {', '.join(EXAMPLES)}")
    return Path(str(resources.files("mwgraph") / "data" / f"{name}.json"))


def load_example(name: str, tol: TolerancePolicy = DEFAULT_TOL) -> MwGraph:
    return load_graph(example_path(name), tol)
