"""Colon ideals, annihilator classes and annihilating graphs of finite
modules over Z and Z/n, with machine verification of the structural
theorems on instance corpora."""

from .classify import (
    Classification,
    annihilator_sets,
    classify_element,
    is_simple_module,
)
from .graphs import (
    AnnGraph,
    build_ann_graph,
    essential_vertices,
    export_graph,
    free_module_facts,
    graph_shape,
)
from .modules import (
    Module,
    colon_ideal,
    colon_ideal_brute,
    cyclic_submodule,
    module_annihilator,
    module_socle,
)
from .rings import (
    Ideal,
    Ring,
    ZZ,
    canonical_ideal,
    ideal_intersect,
    ideal_product,
    is_essential_ideal,
    is_regular_ring,
    jacobson_radical,
    ring_socle,
)
from .specs import parse_module, parse_ring
from .verify import TheoremReport, baer_is_injective, run_corpus

__all__ = [
    "AnnGraph", "Classification", "Ideal", "Module", "Ring", "TheoremReport",
    "ZZ", "annihilator_sets", "baer_is_injective", "build_ann_graph",
    "canonical_ideal", "classify_element", "colon_ideal", "colon_ideal_brute",
    "cyclic_submodule", "essential_vertices", "export_graph",
    "free_module_facts", "graph_shape", "ideal_intersect", "ideal_product",
    "is_essential_ideal", "is_regular_ring", "is_simple_module",
    "jacobson_radical", "module_annihilator", "module_socle", "parse_module",
    "parse_ring", "ring_socle", "run_corpus",
]
