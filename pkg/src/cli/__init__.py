"""
Command line front end and the text formats it reads

The subcommand dispatcher lives in ``src.cli.commands``; it is not re-exported here
so that library modules can use the parsers without importing the whole front end.
"""

from src.cli.parser import (
    parse_cf,
    parse_field,
    parse_field_elem,
    parse_matrix,
    parse_point,
    parse_poly,
    parse_triple,
    parse_vertex,
    parse_word,
    tokenize,
)

__all__ = [
    "tokenize",
    "parse_field",
    "parse_field_elem",
    "parse_poly",
    "parse_point",
    "parse_triple",
    "parse_matrix",
    "parse_vertex",
    "parse_word",
    "parse_cf",
]
