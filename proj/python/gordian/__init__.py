"""Exact certification of superbridge-index bounds for polygonal knots.

Thin Python facade over the exact-arithmetic C++ core.  Polygons,
certificates, diagrams, and generator sets are passed around in the same
text formats the command-line tool and the bundled fixtures use.
"""

from ._core import (
    bridge_count,
    conclude,
    find_certificate,
    find_direction,
    fox_determinant,
    hom_search,
    project,
    reproduce,
    verify_certificate,
    witness_search,
)

__all__ = [
    "bridge_count",
    "conclude",
    "find_certificate",
    "find_direction",
    "fox_determinant",
    "hom_search",
    "project",
    "reproduce",
    "verify_certificate",
    "witness_search",
]
