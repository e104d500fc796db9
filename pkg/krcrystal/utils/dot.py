"""
Export a crystal graph to graphviz' dot.

Vertices are named by their row encoding and emitted in graph order; edges
follow their source vertex, sorted by label.
"""

from __future__ import annotations

import re
from collections import Counter
from typing import Callable, Hashable

import networkx as nx

_EDGE = re.compile(r'^\s*"(?P<src>[^"]*)"\s*->\s*"(?P<dst>[^"]*)"\s*\[label=(?P<label>\d+)\];\s*$')


def export_dot(graph: nx.MultiDiGraph, name: Callable[[Hashable], str], title: str = "crystal") -> str:
    lines = [f"digraph {title} {{"]
    order = {v: k for k, v in enumerate(graph.nodes)}
    for v in graph.nodes:
        lines.append(f'\t"{name(v)}";')
    for v in graph.nodes:
        out = sorted(graph.out_edges(v, keys=True), key=lambda edge: (edge[2], order[edge[1]]))
        for _, w, label in out:
            lines.append(f'\t"{name(v)}" -> "{name(w)}" [label={label}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_dot_edges(text: str) -> Counter[tuple[str, int, str]]:
    edges: Counter[tuple[str, int, str]] = Counter()
    for line in text.splitlines():
        match = _EDGE.match(line)
        if match:
            edges[(match["src"], int(match["label"]), match["dst"])] += 1
    return edges
