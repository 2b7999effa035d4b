"""Invariants of framed string links.

Diagrams are passed as tangle text (``"strands 2; x1+ x1+"``) or tangle JSON;
ambient surgery presentations as JSON text.
"""

import json

from ._strlink import (
    InputError,
    PreconditionError,
    ResourceLimitError,
    StrlinkError,
    builtin,
    clasp_pass_equivalent,
    conway_coefficients,
    mj_relabel,
    mu3,
    normalize_json,
    normalize_tangle,
    tau_json,
    v2,
    vassiliev_json,
    y2_equivalent,
)

__all__ = [
    "InputError",
    "PreconditionError",
    "ResourceLimitError",
    "StrlinkError",
    "builtin",
    "clasp_pass_equivalent",
    "conway_coefficients",
    "mj_relabel",
    "mu3",
    "normalize",
    "normalize_tangle",
    "tau",
    "v2",
    "vassiliev_vector",
    "y2_equivalent",
]


def tau(tangle, ambient=None, magnus_cap=3, crossing_cap=20):
    """tau invariants as a dict with keys mu3, sl2, arf, rochlin."""
    return json.loads(tau_json(tangle, ambient, magnus_cap, crossing_cap))


def vassiliev_vector(tangle, magnus_cap=3, crossing_cap=20):
    return json.loads(vassiliev_json(tangle, magnus_cap, crossing_cap))


def normalize(expr, n):
    """Normal form of an A_1(P_n) element; zero parts are omitted."""
    return json.loads(normalize_json(expr, n))
