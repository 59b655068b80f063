"""Twin-width solver suite.

Exact dynamic programming over contraction sequences, greedy and
hill-climbing heuristics, an independent verifier, and a brute-force oracle,
all over the PACE 2023 exchange formats.
"""

from ._twinwidth import (
    ParseError,
    ResourceError,
    VerifyError,
    oracle_twinwidth,
    parse_instance,
    render_sequence,
    solve_exact,
    solve_heuristic,
    verify_sequence,
)

__all__ = [
    "ParseError",
    "ResourceError",
    "VerifyError",
    "oracle_twinwidth",
    "parse_instance",
    "render_sequence",
    "solve_exact",
    "solve_heuristic",
    "verify_sequence",
]
