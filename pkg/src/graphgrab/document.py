"""Graph documents: the on-disk and stdin/stdout format, plus DOT export.

A document is a JSON object written one top-level key per line::

    {"format": 1,
     "n": 4,
     "weights": ["1", "4", "2", "3"],
     "edges": [[0, 1], [1, 2], [2, 3]],
     "classes": null,
     "root": null,
     "meta": {"family": "path"}}

Weights are strings so that values like ``"0.1"`` or ``"7/3"`` parse exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .families import PartitionedGraph
from .graph import ContractError, WeightedGraph, mask_of, members

FORMAT_VERSION = 1
_KEYS = ("format", "n", "weights", "edges", "classes", "root", "meta")


def format_weight(w: Fraction) -> str:
    return str(w)


@dataclass
class GraphDocument:
    graph: WeightedGraph
    classes: list[int] | None = None
    root: int | None = None
    meta: dict = field(default_factory=dict)

    @classmethod
    def from_partitioned(cls, pg: PartitionedGraph, root: int | None = None, **meta) -> "GraphDocument":
        return cls(pg.graph, list(pg.classes), root, {**pg.meta, **meta})

    def to_dict(self) -> dict:
        return {
            "format": FORMAT_VERSION,
            "n": self.graph.n,
            "weights": [format_weight(w) for w in self.graph.weights],
            "edges": [list(e) for e in self.graph.edges()],
            "classes": None if self.classes is None else [members(c) for c in self.classes],
            "root": None if self.root is None else members(self.root),
            "meta": self.meta,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "GraphDocument":
        if d.get("format") != FORMAT_VERSION:
            raise ContractError(f"unsupported document format {d.get('format')!r}")
        try:
            n = int(d["n"])
            g = WeightedGraph.from_edges(n, [tuple(e) for e in d["edges"]], [str(w) for w in d["weights"]])
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            if isinstance(exc, ContractError):
                raise
            raise ContractError(f"malformed graph document: {exc}") from exc
        classes = d.get("classes")
        root = d.get("root")
        for vs in (classes or []) + ([root] if root else []):
            if any(not 0 <= v < n for v in vs):
                raise ContractError("document references a vertex outside the graph")
        return cls(
            g,
            None if classes is None else [mask_of(c) for c in classes],
            None if root is None else mask_of(root),
            dict(d.get("meta") or {}),
        )

    def dumps(self) -> str:
        d = self.to_dict()
        lines = [f"{json.dumps(k)}: {json.dumps(d[k], sort_keys=True)}" for k in _KEYS]
        return "{" + ",\n ".join(lines) + "}\n"

    @classmethod
    def loads(cls, text: str) -> "GraphDocument":
        try:
            d = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ContractError(f"document is not valid JSON: {exc}") from exc
        return cls.from_dict(d)

    def save(self, path: Path | str) -> None:
        Path(path).write_text(self.dumps())

    @classmethod
    def load(cls, path: Path | str) -> "GraphDocument":
        return cls.loads(Path(path).read_text())

    def __eq__(self, other):
        if not isinstance(other, GraphDocument):
            return NotImplemented
        return self.to_dict() == other.to_dict()


def to_dot(doc: GraphDocument, name: str = "G") -> str:
    """Graphviz text: weights as node labels, blow-up classes as clusters."""
    g = doc.graph
    root = doc.root or 0
    out = [f"graph {name} {{"]
    for i, c in enumerate(doc.classes or []):
        out.append(f"  subgraph cluster_{i} {{")
        out.append(f'    label="V{i}";')
        for v in members(c):
            out.append(f"    {v};")
        out.append("  }")
    for v in range(g.n):
        shape = ", shape=doublecircle" if root >> v & 1 else ""
        out.append(f'  {v} [label="{v}\\nw={format_weight(g.weights[v])}"{shape}];')
    for a, b in g.edges():
        out.append(f"  {a} -- {b};")
    out.append("}")
    return "\n".join(out) + "\n"
