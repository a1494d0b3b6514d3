"""Exact flag-algebra toolkit: Turan-density certificates for graph problems.

Thin Python layer over the C++ core. All rationals cross the boundary as
"num/den" strings; parse them with fractions.Fraction when you need
arithmetic on the Python side.
"""

import os

from ._core import (  # noqa: F401
    ArgumentError,
    Graph,
    ParseError,
    SizeError,
    averaging_identity_check,
    blow_up,
    blow_up_uniform,
    char_poly,
    contains_forbidden,
    count_induced_copies,
    density_trend,
    emit_sdp,
    enumerate_flags,
    enumerate_free_graphs,
    erdos_check,
    expression_report,
    flag_density,
    induced_density,
    induced_subgraph,
    max_density_bound,
    named_graph,
    pair_density_table,
    parse_graph6,
    psd_check,
    quadratic_form,
    round_solution,
    subgraph_distribution,
    blowup_reduction_demo,
    verify_certificate,
    write_graph6,
)


def bundled_certificate_path() -> str:
    """Path of the bundled certificate proving the induced-C5 bound 24/625."""
    return os.path.join(os.path.dirname(__file__), "data", "erdos-pentagon.cert.json")
