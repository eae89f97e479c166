"""Debug-mode invariant assertions for the decomposition algorithms.

All checks run with counters paused and, where strong connectivity is
involved, validate against the explicit SCC oracle rather than the
symbolic machinery under test.  Enabled through the ``debug`` flag of
the algorithms (``--debug-invariants`` on the command line).
"""

from __future__ import annotations

from . import oracle
from .errors import InvariantViolation
from .model import bad_vertices

__all__ = [
    "check_candidate",
    "check_disjoint",
    "check_no_random_escape",
    "check_good_component",
    "check_accepted_mec",
    "check_good_end_component",
    "check_start_cover",
]


def check_candidate(mgr, cand):
    with mgr.counters_paused():
        for label, witness in (("lost_in", cand.lost_in), ("lost_out", cand.lost_out)):
            if not mgr.is_empty(mgr.difference(witness, cand.vertices)):
                raise InvariantViolation(f"{label} is not a subset of the candidate")


def check_disjoint(mgr, sets):
    """The maintained candidate and accepted sets must be pairwise disjoint."""
    with mgr.counters_paused():
        seen = mgr.empty()
        for svs in sets:
            if not mgr.is_empty(mgr.intersect(seen, svs)):
                raise InvariantViolation("maintained sets are not pairwise disjoint")
            seen = mgr.union(seen, svs)


def check_no_random_escape(mgr, svs):
    """No random vertex of `svs` may have an edge leaving `svs`."""
    with mgr.counters_paused():
        escapes = mgr.intersect(
            mgr.intersect(svs, mgr.v_random), mgr.pre(mgr.complement(svs))
        )
        if not mgr.is_empty(escapes):
            raise InvariantViolation(
                f"random vertices with outgoing edges: {mgr.to_ids(escapes)}"
            )


def _check_connected_with_edge(mgr, model, svs, what):
    with mgr.counters_paused():
        ids = mgr.to_ids(svs)
        if not ids:
            raise InvariantViolation(f"accepted {what} is empty")
        if len(oracle.tarjan_scc(model, ids)) != 1:
            raise InvariantViolation(f"accepted {what} is not strongly connected")
        member = set(ids)
        if not any(u in member and v in member for u, v in model.edges):
            raise InvariantViolation(f"accepted {what} has no edge")


def check_good_component(mgr, model, svs, psets):
    """Accepted good component: strongly connected, has an edge, no bad vertices."""
    _check_connected_with_edge(mgr, model, svs, "good component")
    with mgr.counters_paused():
        if not mgr.is_empty(bad_vertices(mgr, svs, psets)):
            raise InvariantViolation("accepted good component has bad vertices")


def check_accepted_mec(mgr, model, svs):
    """Accepted end-component: strongly connected, has an edge, closed for random."""
    _check_connected_with_edge(mgr, model, svs, "end-component")
    check_no_random_escape(mgr, svs)


def check_good_end_component(mgr, model, svs, psets):
    check_accepted_mec(mgr, model, svs)
    with mgr.counters_paused():
        if not mgr.is_empty(bad_vertices(mgr, svs, psets)):
            raise InvariantViolation("accepted good end-component has bad vertices")


def check_start_cover(mgr, model, svs, lost_in, lost_out):
    """Start-vertex sufficiency, certified against the explicit SCCs.

    Nonempty lost-in sets must hit every top SCC of the induced subgraph,
    nonempty lost-out sets every bottom SCC; with both empty the subgraph
    must be strongly connected.  Same contract as the symbolic check run
    inside the lock-step search, but validated independently.
    """
    with mgr.counters_paused():
        svs_ids = mgr.to_ids(svs)
        in_ids = set(mgr.to_ids(lost_in))
        out_ids = set(mgr.to_ids(lost_out))
    inside = set(svs_ids)
    parts = oracle.tarjan_scc(model, svs_ids)
    if not in_ids and not out_ids:
        if len(parts) != 1:
            raise InvariantViolation(
                "no lost-edge witnesses but the candidate is not strongly connected"
            )
        return
    adj = model.out_adjacency()
    radj = model.in_adjacency()
    for comp in parts:
        members = set(comp)
        if in_ids:
            top = not any(
                u in inside and u not in members for v in comp for u in radj[v]
            )
            if top and not (members & in_ids):
                raise InvariantViolation(f"top SCC {comp} not covered by lost-in")
        if out_ids:
            bottom = not any(
                w in inside and w not in members for v in comp for w in adj[v]
            )
            if bottom and not (members & out_ids):
                raise InvariantViolation(f"bottom SCC {comp} not covered by lost-out")
