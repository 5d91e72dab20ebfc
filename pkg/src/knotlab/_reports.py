"""Report dictionaries shared by the CLI and the service."""

from __future__ import annotations

from .diagram import Diagram, emit_pd, gauss_code, trace
from .errors import BudgetExceededError
from .invariants import (
    jones_polynomial,
    kauffman_bracket,
    linking_matrix,
    signs_and_writhe,
    tricolor_count,
)


def diagram_report(d: Diagram) -> dict:
    report = trace(d)
    return {
        "pd": emit_pd(d),
        "crossing_count": d.crossing_count,
        "edge_count": d.edge_count,
        "free_loops": d.free_loops,
        "component_count": report.component_count,
        "faces": report.faces,
        "arc_count": report.arcs.arc_count,
        "arc_of_edge": {
            str(e): a for e, a in sorted(report.arcs.arc_of_edge.items())
        },
        "free_loop_arcs": list(report.arcs.free_loop_arcs),
        "gauss_code": gauss_code(d),
    }


def invariants_report(d: Diagram, budget: int) -> dict:
    """Everything cheap always; bracket and Jones go null over budget."""
    report = trace(d)
    sign_data = signs_and_writhe(d)
    tri = tricolor_count(d)
    out = {
        "pd": emit_pd(d),
        "crossing_count": d.crossing_count,
        "component_count": report.component_count,
        "writhe": sign_data.writhe,
        "signs": list(sign_data.sign_of_crossing),
        "tricolor": {
            "count": tri.count,
            "tricolorable": tri.tricolorable,
            "witness": None
            if tri.witness is None
            else {str(arc): c for arc, c in sorted(tri.witness.items())},
        },
        "linking": [
            [a, b, lk] for (a, b), lk in sorted(linking_matrix(d).items())
        ],
    }
    try:
        out["bracket"] = kauffman_bracket(d, budget).to_wire()
        out["jones"] = jones_polynomial(d, budget).to_wire()
        out["budget_exceeded"] = False
    except BudgetExceededError:
        out["bracket"] = None
        out["jones"] = None
        out["budget_exceeded"] = True
    return out
