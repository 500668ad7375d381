"""Binomial edge ideals of corona products: cutsets, closed-form invariants,
diameter gadgets and CAS script export."""

import json

from ._bei import (
    BeiError,
    CutsetReport,
    Graph,
    accessibility_witness_chain,
    check_cutset_structure,
    cli,
    complete_graph,
    component_count,
    connected_graphs,
    corona,
    cycle_graph,
    decompose_cutset,
    diameter,
    dimension_oracle,
    emit_cas_script,
    enumerate_cutsets,
    from_graph6,
    gadget_d2,
    gadget_d3,
    is_accessible,
    is_cutset,
    is_unmixed,
    l_corona,
    named_graph,
    parse_edge_list,
    path_graph,
    star_graph,
    to_dot,
    to_edge_list,
    verify_reduction,
)
from . import _bei

__all__ = [name for name in dir(_bei) if not name.startswith("_")] + [
    "base_invariants",
    "invariants",
    "scan",
]


def base_invariants(g, bound=0):
    """Closed-form or oracle data of a pendant graph, as a dict."""
    return json.loads(_bei._base_invariants_json(g, bound))


def invariants(family, n=0, ell=0, pendant=None, base=None, b_graph=None, r_extremal=None, bound=0):
    """Invariant report for a corona family.

    Exactly one of `pendant` (a Graph) and `base` (a dict of user-supplied
    invariants) must be given.
    """
    base_json = json.dumps(base) if base is not None else None
    return json.loads(
        _bei._invariants_json(family, n, ell, pendant, base_json, b_graph, r_extremal, bound)
    )


def scan(corpus, diameters=(), max_n=None, jobs=0):
    """Scan graph6 lines; returns (records, errors) as lists of dicts."""
    if not isinstance(corpus, str):
        corpus = "\n".join(corpus)
    out, err = _bei._scan(corpus, list(diameters), max_n, jobs)
    records = [json.loads(line) for line in out.splitlines()]
    errors = [json.loads(line) for line in err.splitlines()]
    return records, errors
