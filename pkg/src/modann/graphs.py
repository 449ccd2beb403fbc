"""Annihilating graphs of a module and their exports.

The full/semi/star graph has the corresponding hat set as vertices, and an
edge between distinct x, y exactly when [x:M][y:M]M = 0.  Vertices carry
their colon ideal and an essential flag; builds are deterministic, with
vertices in lexicographic order and edges sorted by index pair.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .classify import annihilator_sets, colon_table
from .modules import Element, InfiniteModuleError, Module, module_annihilator
from .rings import (
    Ideal,
    Ring,
    ZZ,
    display_gen,
    ideal_contains,
    ideal_product,
    is_essential_ideal,
    zero_ideal,
)

GRAPH_KINDS = ("full", "semi", "star")


@dataclass(frozen=True)
class AnnGraph:
    kind: str
    module: Module
    vertices: tuple[Element, ...]
    colons: tuple[Ideal, ...]
    essential: tuple[bool, ...]
    edges: tuple[tuple[int, int], ...]


def build_ann_graph(module: Module, kind: str) -> AnnGraph:
    if kind not in GRAPH_KINDS:
        raise ValueError(f"unknown graph kind {kind!r}")
    if not module.is_finite:
        raise InfiniteModuleError(
            f"{module} is infinite; use free_module_facts for the symbolic case")
    hat = annihilator_sets(module)[GRAPH_KINDS.index(kind)]
    table = colon_table(module)
    ann = module_annihilator(module)
    colons = tuple(table[v] for v in hat)
    essential = tuple(is_essential_ideal(c) for c in colons)
    edges = tuple(
        (i, j)
        for i in range(len(hat))
        for j in range(i + 1, len(hat))
        if ideal_contains(ann, ideal_product(colons[i], colons[j]))
    )
    return AnnGraph(kind, module, hat, colons, essential, edges)


def essential_vertices(graph: AnnGraph) -> tuple[Element, ...]:
    return tuple(v for v, ess in zip(graph.vertices, graph.essential) if ess)


@dataclass(frozen=True)
class GraphShape:
    is_complete: bool
    vertex_empty: bool
    edge_empty: bool
    bipartition: tuple[tuple[Element, ...], tuple[Element, ...]] | None

    @property
    def is_complete_bipartite(self) -> bool:
        return self.bipartition is not None


def graph_shape(graph: AnnGraph) -> GraphShape:
    n = len(graph.vertices)
    complete = len(graph.edges) == n * (n - 1) // 2
    return GraphShape(
        is_complete=complete,
        vertex_empty=n == 0,
        edge_empty=not graph.edges,
        bipartition=_bipartition(graph),
    )


def _bipartition(graph: AnnGraph) -> tuple[tuple[Element, ...], tuple[Element, ...]] | None:
    """Two nonempty parts with all cross edges and none inside, if they exist.

    In a complete bipartite graph the part of any vertex is exactly its set
    of non-neighbors (plus itself), so one neighborhood determines the split.
    """
    n = len(graph.vertices)
    if n < 2 or not graph.edges:
        return None
    nbrs = [set() for _ in range(n)]
    for i, j in graph.edges:
        nbrs[i].add(j)
        nbrs[j].add(i)
    part_b = nbrs[0]
    if not part_b:
        return None
    part_a = set(range(n)) - part_b
    for i in range(n):
        if nbrs[i] != (part_b if i in part_a else part_a):
            return None
    verts = graph.vertices
    return (tuple(verts[i] for i in sorted(part_a)),
            tuple(verts[i] for i in sorted(part_b)))


@dataclass(frozen=True)
class FreeModuleFacts:
    """Symbolic graph facts for the module Z^k, k >= 2.

    Every nonzero element has zero colon ideal, so all products of colon
    ideals annihilate the module: the full graph is complete on all nonzero
    elements, the semi graph has no vertices at all, and no vertex is
    essential because the zero ideal of Z is not essential.
    """

    free_rank: int
    full_vertices_all_nonzero: bool
    full_graph_complete: bool
    semi_vertex_set_empty: bool
    colon: Ideal
    colon_essential: bool
    has_essential_vertex: bool


def free_module_facts(free_rank: int) -> FreeModuleFacts:
    if free_rank < 2:
        raise ValueError(f"free rank {free_rank} has no symbolic graph facts")
    colon = zero_ideal(ZZ)
    return FreeModuleFacts(
        free_rank=free_rank,
        full_vertices_all_nonzero=True,
        full_graph_complete=True,
        semi_vertex_set_empty=True,
        colon=colon,
        colon_essential=is_essential_ideal(colon),
        has_essential_vertex=False,
    )


# -- exports -----------------------------------------------------------------

def _label(element: Element) -> str:
    return "(" + ",".join(str(c) for c in element) + ")"


def export_graph(graph: AnnGraph, fmt: str) -> str:
    if fmt == "dot":
        return _to_dot(graph)
    if fmt == "json":
        return _to_json(graph)
    raise ValueError(f"unknown export format {fmt!r}")


def _to_dot(graph: AnnGraph) -> str:
    lines = ["graph ann {"]
    for v, ess in zip(graph.vertices, graph.essential):
        style = ', style=filled' if ess else ""
        lines.append(f'  "{_label(v)}" [essential={str(ess).lower()}{style}];')
    for i, j in graph.edges:
        lines.append(f'  "{_label(graph.vertices[i])}" -- "{_label(graph.vertices[j])}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _to_json(graph: AnnGraph) -> str:
    payload = {
        "kind": graph.kind,
        "ring": str(graph.module.ring),
        "module": str(graph.module),
        "vertices": [
            {"element": list(v), "colon": str(display_gen(c)), "essential": e}
            for v, c, e in zip(graph.vertices, graph.colons, graph.essential)
        ],
        "edges": [list(edge) for edge in graph.edges],
    }
    return json.dumps(payload, indent=2) + "\n"
