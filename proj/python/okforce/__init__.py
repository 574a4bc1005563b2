"""Oriented k-forcing: exact solvers, bounds, constructions and checks."""

from ._core import (
    Graph,
    Inapplicable,
    LimitError,
    OrientedGraph,
    ParameterError,
    PreconditionError,
    alternating_orientation,
    balanced_orientation,
    clique_number,
    closure,
    closure_set,
    extremal_bound_report,
    forcing_bound_report,
    forcing_chains,
    forcing_number,
    format_dg,
    format_ug,
    forward_orientation,
    generate,
    greedy_forcing_set,
    independence_number,
    induced_kary_cover_number,
    induced_matching_number,
    is_forcing_set,
    is_reachable,
    is_strongly_reachable,
    matching_number,
    max_oriented_forcing_number,
    min_oriented_forcing_number,
    min_reaching_set,
    orient_away_from,
    parse_dg,
    parse_ug,
    path_cover_number,
    random_orientation,
    tree_cover_number,
    verify,
)


def mof(graph, k=1):
    return min_oriented_forcing_number(graph, k)["value"]


def MOF(graph, k=1):  # noqa: N802
    return max_oriented_forcing_number(graph, k)["value"]


__all__ = [name for name in dir() if not name.startswith("_")]
