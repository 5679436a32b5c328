"""Galois-lattice mining of many-valued trait data.

The heavy lifting lives in the compiled ``_core`` module; this package
re-exports its public surface.
"""

from ._core import (
    BinaryContext,
    ConceptLattice,
    ConfigError,
    InputError,
    InternalError,
    ManyValuedContext,
    ResourceLimitError,
    Trait,
    association_rules,
    build_lattice,
    close_attrs,
    close_objects,
    derive_extent,
    derive_intent,
    dg_basis,
    disjunctive_scale,
    enumerate_concepts,
    enumerate_histogram_concepts,
    export_dot,
    flip_affinities,
    from_burmeister,
    group_affinities,
    implication_holds,
    implication_support,
    intersection_extent,
    intersection_intent,
    lattice_concepts,
    load_csv,
    load_csv_text,
    pattern_scale,
    render_histogram,
    render_implication,
    to_burmeister,
    union_extent,
    union_intent,
)

__version__ = "0.1.0"

__all__ = [
    "BinaryContext",
    "ConceptLattice",
    "ConfigError",
    "InputError",
    "InternalError",
    "ManyValuedContext",
    "ResourceLimitError",
    "Trait",
    "association_rules",
    "build_lattice",
    "close_attrs",
    "close_objects",
    "derive_extent",
    "derive_intent",
    "dg_basis",
    "disjunctive_scale",
    "enumerate_concepts",
    "enumerate_histogram_concepts",
    "export_dot",
    "flip_affinities",
    "from_burmeister",
    "group_affinities",
    "implication_holds",
    "implication_support",
    "intersection_extent",
    "intersection_intent",
    "lattice_concepts",
    "load_csv",
    "load_csv_text",
    "pattern_scale",
    "render_histogram",
    "render_implication",
    "to_burmeister",
    "union_extent",
    "union_intent",
]
