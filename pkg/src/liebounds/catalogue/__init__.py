"""Real and complex simple group families: specs, restricted roots, stored invariants."""

from .groupspec import FAMILY_PARAMS, GroupSpec, make_spec, parse_group_spec
from .store import (
    FAMILY_ORDER,
    Catalogue,
    GroupDescriptor,
    default_catalogue,
    describe,
    load_catalogue,
    parse_catalogue,
    tabulated_invariant,
)

__all__ = [
    "FAMILY_ORDER",
    "FAMILY_PARAMS",
    "Catalogue",
    "GroupDescriptor",
    "GroupSpec",
    "default_catalogue",
    "describe",
    "load_catalogue",
    "make_spec",
    "parse_catalogue",
    "parse_group_spec",
    "tabulated_invariant",
]
