"""The information-efficiency calculus over computation trees.

Tree construction, parsing and enumeration live in :mod:`.tree`; the
efficiency rules and their aggregation over trees live in :mod:`.delta`.
"""

from .delta import (
    Composition,
    Constant,
    DeltaReport,
    PrimRecursion,
    Primitive,
    Projection,
    SpectrumEntry,
    Successor,
    WorkedMethod,
    delta_add,
    delta_mul,
    delta_spectrum,
    flat_delta,
    primitive_delta,
    tree_delta,
    worked_methods,
)
from .tree import (
    CompTree,
    Leaf,
    Node,
    Tree,
    canonical_key,
    enumerate_trees,
    evaluate,
    leaves,
    parse_expression,
    render,
    unordered_tree_count,
)

__all__ = [
    "CompTree",
    "Composition",
    "Constant",
    "DeltaReport",
    "Leaf",
    "Node",
    "PrimRecursion",
    "Primitive",
    "Projection",
    "SpectrumEntry",
    "Successor",
    "Tree",
    "WorkedMethod",
    "canonical_key",
    "delta_add",
    "delta_mul",
    "delta_spectrum",
    "enumerate_trees",
    "evaluate",
    "flat_delta",
    "leaves",
    "parse_expression",
    "primitive_delta",
    "render",
    "tree_delta",
    "unordered_tree_count",
    "worked_methods",
]
