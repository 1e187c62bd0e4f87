"""PACE .gr / .td codecs and the JSON run report.

Files use 1-based vertex labels (colex rank + 1 for Kneser graphs).
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, is_dataclass
from fractions import Fraction
from pathlib import Path

from .combinatorics import fmt_exact
from .graph import Graph
from .tdecomp import TreeDecomposition


class FormatError(ValueError):
    pass


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        yield lineno, line.split()


def _ints(parts, lineno):
    try:
        return [int(x) for x in parts]
    except ValueError:
        raise FormatError(f"line {lineno}: expected integers, got {' '.join(parts)!r}") from None


def emit_gr(graph, comments=()) -> str:
    edges = graph.edges()
    lines = [f"c {c}" for c in comments]
    lines.append(f"p tw {graph.n} {len(edges)}")
    lines.extend(f"{u + 1} {v + 1}" for u, v in edges)
    return "\n".join(lines) + "\n"


def parse_gr(text: str) -> Graph:
    header = None
    edges = []
    for lineno, parts in _content_lines(text):
        if parts[0] == "p":
            if header is not None:
                raise FormatError(f"line {lineno}: duplicate header")
            if len(parts) != 4 or parts[1] != "tw":
                raise FormatError(f"line {lineno}: header must be 'p tw <n> <m>'")
            header = _ints(parts[2:], lineno)
            continue
        if header is None:
            raise FormatError(f"line {lineno}: edge before header")
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: edge line must have two vertices")
        u, v = _ints(parts, lineno)
        if not (1 <= u <= header[0] and 1 <= v <= header[0]) or u == v:
            raise FormatError(f"line {lineno}: bad edge {u} {v}")
        edges.append((u - 1, v - 1))
    if header is None:
        raise FormatError("missing 'p tw' header")
    n, m = header
    if len(edges) != m:
        raise FormatError(f"header declares {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)


def emit_td(td: TreeDecomposition, num_vertices: int, comments=()) -> str:
    lines = [f"c {c}" for c in comments]
    max_bag = max((len(b) for b in td.bags), default=0)
    lines.append(f"s td {td.num_nodes} {max_bag} {num_vertices}")
    for i, bag in enumerate(td.bags, 1):
        lines.append(" ".join(["b", str(i)] + [str(v + 1) for v in bag]))
    lines.extend(f"{i + 1} {j + 1}" for i, j in td.tree_edges)
    return "\n".join(lines) + "\n"


def parse_td(text: str) -> tuple[TreeDecomposition, int]:
    """Returns the decomposition and the declared vertex count."""
    header = None
    bags: dict[int, list[int]] = {}
    edges = []
    for lineno, parts in _content_lines(text):
        if parts[0] == "s":
            if header is not None:
                raise FormatError(f"line {lineno}: duplicate header")
            if len(parts) != 5 or parts[1] != "td":
                raise FormatError(f"line {lineno}: header must be 's td <bags> <max> <n>'")
            header = _ints(parts[2:], lineno)
            continue
        if header is None:
            raise FormatError(f"line {lineno}: content before header")
        if parts[0] == "b":
            vals = _ints(parts[1:], lineno)
            if not vals:
                raise FormatError(f"line {lineno}: bag line without id")
            bag_id, verts = vals[0], vals[1:]
            if not 1 <= bag_id <= header[0] or bag_id in bags:
                raise FormatError(f"line {lineno}: bad or duplicate bag id {bag_id}")
            if any(not 1 <= v <= header[2] for v in verts):
                raise FormatError(f"line {lineno}: vertex out of range")
            bags[bag_id] = [v - 1 for v in verts]
        else:
            if len(parts) != 2:
                raise FormatError(f"line {lineno}: tree edge must have two bag ids")
            i, j = _ints(parts, lineno)
            edges.append((i - 1, j - 1))
    if header is None:
        raise FormatError("missing 's td' header")
    num_bags, max_bag, n = header
    if len(bags) != num_bags:
        raise FormatError(f"header declares {num_bags} bags, found {len(bags)}")
    if max((len(b) for b in bags.values()), default=0) != max_bag:
        raise FormatError("declared max bag size does not match bags")
    td = TreeDecomposition(tuple(tuple(bags[i]) for i in range(1, num_bags + 1)), tuple(edges))
    return td, n


def read_gr(path) -> Graph:
    return parse_gr(Path(path).read_text())


def read_td(path) -> tuple[TreeDecomposition, int]:
    return parse_td(Path(path).read_text())


# -- JSON report ------------------------------------------------------------------

def to_jsonable(obj):
    """Exact serialization: ints and Fractions become strings, never floats."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, (int, Fraction)):
        return fmt_exact(obj)
    if isinstance(obj, float):
        raise TypeError("floats are not allowed in persisted reports")
    if is_dataclass(obj):
        return to_jsonable(asdict(obj))
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def build_report(version, command, params, checks, solver=None, timings=None) -> dict:
    return {
        "version": version,
        "command": list(command),
        "params": to_jsonable(params),
        "checks": [to_jsonable(c) for c in checks],
        "solver": to_jsonable(solver),
        "timings": {f"{k}_ms": str(int(v * 1000)) for k, v in (timings or {}).items()},
    }


def canonical_bytes(report: dict) -> bytes:
    """Report without the timings section, in a fixed byte layout."""
    body = {k: v for k, v in report.items() if k != "timings"}
    return json.dumps(body, sort_keys=True, separators=(",", ":")).encode()


def canonical_hash(report: dict) -> str:
    return hashlib.sha256(canonical_bytes(report)).hexdigest()


def dump_report(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=1) + "\n"
