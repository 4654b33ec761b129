"""Coloring systems: origin-anchored colorings of the quadrant.

Systems are ``ColoringSystem(colors, origin, horizontal, vertical)`` with
relations given as lists of ``(c, d)`` pairs. Verdicts, witnesses and census
summaries come back as plain dicts in the same layout as the JSON files the
``colsys`` command writes.
"""

from ._colsys import (
    ColoringSystem,
    InputError,
    build_chain,
    canonical_form,
    census,
    check,
    classify,
    diag_index,
    diag_tile,
    enumerate,
    example_system,
    example_triangle,
    extendable_colors,
    find_periodic_witness,
    is_isomorphic,
    is_prefix,
    length_profile,
    max_accept_length,
    render,
    system_at,
    system_count,
    system_index,
)

__all__ = [
    "ColoringSystem",
    "InputError",
    "build_chain",
    "canonical_form",
    "census",
    "check",
    "classify",
    "diag_index",
    "diag_tile",
    "enumerate",
    "example_system",
    "example_triangle",
    "extendable_colors",
    "find_periodic_witness",
    "is_isomorphic",
    "is_prefix",
    "length_profile",
    "max_accept_length",
    "render",
    "system_at",
    "system_count",
    "system_index",
]
