"""Diagram invariants and interval bounds on how far a link is from alternating."""

from .bracket import jones_polynomial, jones_span, kauffman_bracket
from .diagram import (
    BraidWord,
    Crossing,
    PlanarDiagram,
    braid_closure,
    connected_sum,
    crossing_change,
    dealternating_number_diagram,
    from_pd,
    is_alternating,
    minimal_dealternating_set,
    mirror,
    parse_braid,
    parse_diagram,
    parse_pd,
    writhe,
)
from .errors import AltDistError
from .families import (
    known_values,
    modified_torus_braid,
    toroidal_alternating_check,
    torus_braid,
    whitehead_double,
)
from .intervals import Interval
from .khovanov import hfk_whitehead_dims, hfk_width, kh_delta_width, khovanov_f2
from .polynomial import LaurentPolynomial
from .report import DistanceReport, check_consistency, compute_report
from .signature import goeritz_signature, torus_signature_closed, torus_signature_recursive
from .tangles import Tangle, pretzel
from .turaev import tangle_extend, turaev_genus_diagram
from .warping import warping_span_diagram

__version__ = "0.1.0"

__all__ = [
    "AltDistError", "BraidWord", "Crossing", "DistanceReport", "Interval",
    "LaurentPolynomial", "PlanarDiagram", "Tangle", "braid_closure",
    "check_consistency", "compute_report", "connected_sum", "crossing_change",
    "dealternating_number_diagram", "from_pd", "goeritz_signature",
    "hfk_whitehead_dims", "hfk_width", "is_alternating", "jones_polynomial",
    "jones_span", "kauffman_bracket", "kh_delta_width", "khovanov_f2",
    "known_values", "minimal_dealternating_set", "mirror", "modified_torus_braid",
    "parse_braid", "parse_diagram", "parse_pd", "pretzel", "tangle_extend",
    "toroidal_alternating_check", "torus_braid", "torus_signature_closed",
    "torus_signature_recursive", "turaev_genus_diagram", "warping_span_diagram",
    "whitehead_double", "writhe",
]
