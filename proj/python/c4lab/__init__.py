"""Graph-structure toolkit: induced-C4 counting, homogeneity partitions,
anti-matching edits, farness certificates, and the removal pipelines.

The heavy lifting lives in the compiled _core module; this package re-exports
it and adds a couple of small conveniences.
"""

from c4lab._core import (
    Graph,
    Rational,
    Rng,
    blowup_edges,
    build_blowup,
    c4_pipeline_json,
    chordal_pipeline_json,
    count_induced_c4,
    count_induced_cl,
    edit_distance_bounds,
    find_induced_c4,
    gen_graph,
    is_chordal,
    max_clique_size,
    parse_graph,
    run_cli_json,
    serialize_graph,
)

__all__ = [
    "Graph",
    "Rational",
    "Rng",
    "blowup_edges",
    "build_blowup",
    "c4_pipeline_json",
    "chordal_pipeline_json",
    "count_induced_c4",
    "count_induced_cl",
    "edit_distance_bounds",
    "find_induced_c4",
    "gen_graph",
    "is_chordal",
    "max_clique_size",
    "parse_graph",
    "run_cli_json",
    "serialize_graph",
]
