"""Weyl groupoids of semi-Cartan graphs, their nil-Hecke algebras and Bruhat orders."""

from ._weylgpd import (
    Graph,
    WeylGroupoid,
    builtin,
    builtin_names,
    parse_graph,
    run_cli,
    verify,
)

__all__ = [
    "Graph",
    "WeylGroupoid",
    "builtin",
    "builtin_names",
    "parse_graph",
    "run_cli",
    "verify",
]
