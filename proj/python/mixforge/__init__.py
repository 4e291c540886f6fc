"""Balanced-word grammar derivations, lattice loop decompositions and the
verification complex, backed by the C++ core."""

try:
    from ._mixforge import *  # noqa: F401,F403
    from ._mixforge import __doc__ as _core_doc  # noqa: F401
except ImportError:  # pragma: no cover - development tree without installed ext
    from _mixforge import *  # noqa: F401,F403

__all__ = [
    "displacement",
    "in_on",
    "inverse_letter",
    "enumerate_on",
    "to_path",
    "self_intersections",
    "is_embedded",
    "simplify_loop",
    "winding_number",
    "link_cycle_degree",
    "render_svg",
    "derive",
    "derive3",
    "find_split",
    "find_alternating_split3",
    "verify_tree",
    "enumerate_derivable",
    "verify_dd_zero",
    "homology",
    "link_graph",
    "complex_json",
    "zero_scan",
]
