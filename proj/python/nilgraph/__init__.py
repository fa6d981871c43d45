"""Finite semigroups, Malcev nilpotency and non-nilpotent graphs."""

import json

from ._core import (
    Error,
    NotAssociative,
    OrderTooLarge,
    ParseError,
    Semigroup,
    count_semigroups,
    fixture,
    fixture_names,
    graph_dot,
    graph_edges,
    is_neumann_taylor,
    is_nilpotent,
    is_positively_engel,
    nilpotency_class,
    semigroups,
)
from ._core import analyze_json as _analyze_json

__all__ = [
    "Error",
    "NotAssociative",
    "OrderTooLarge",
    "ParseError",
    "Semigroup",
    "analyze",
    "count_semigroups",
    "fixture",
    "fixture_names",
    "graph_dot",
    "graph_edges",
    "is_neumann_taylor",
    "is_nilpotent",
    "is_positively_engel",
    "nilpotency_class",
    "semigroups",
]


def analyze(semigroup):
    """The same report as `nilgraph analyze`, as a dict."""
    return json.loads(_analyze_json(semigroup))
