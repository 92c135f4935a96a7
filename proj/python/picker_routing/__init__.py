"""Single-picker routing in rectangular warehouses.

Instances and tours are JSON documents, the same ones the ``picker`` command
reads and writes.
"""

from ._picker import (
    CapExceeded,
    InvalidArgument,
    ParseError,
    brute_force,
    generate,
    held_karp,
    normalize_instance,
    reduce,
    render_svg,
    solve,
    verify,
)

__all__ = [
    "CapExceeded",
    "InvalidArgument",
    "ParseError",
    "brute_force",
    "generate",
    "held_karp",
    "normalize_instance",
    "reduce",
    "render_svg",
    "solve",
    "verify",
]
