"""Symbolic SCC decomposition and the round-robin lock-step search.

`all_sccs` implements the skeleton-based decomposition: each recursion
step computes the forward set of a pivot while recording its layers,
extracts a shortest "spine" path through the layers, peels off the
pivot's SCC by a backward closure inside the forward set, and recurses on
the two remaining parts.  Re-using the spine remainder as the next pivot
is what keeps the total number of one-step operations linear in the
number of vertices.  A plain forward/backward variant is kept behind a
flag for differential testing.

`lock_step_search` interleaves backward searches from vertices that lost
incoming edges with forward searches from vertices that lost outgoing
edges, one step per search per round, stopping at the first search that
closes.  Under the start-vertex sufficiency invariant the closed set is a
top or bottom SCC of the induced subgraph, found within a number of steps
proportional to the number of searches times the size of the smaller side
of the split.
"""

from __future__ import annotations

from .errors import UsageError, InvariantViolation

__all__ = ["all_sccs", "lock_step_search", "check_start_vertices"]


def all_sccs(mgr, svs, variant="skeleton"):
    """SCC partition of the subgraph induced by `svs`.

    Returns vertex sets ordered by ascending minimum vertex id.  The
    default variant takes O(|svs|) symbolic steps.
    """
    if variant == "skeleton":
        parts = _sccs_skeleton(mgr, svs)
    elif variant == "fwbw":
        parts = _sccs_fwbw(mgr, svs)
    else:
        raise UsageError(f"unknown SCC variant {variant!r}")
    with mgr.counters_paused():
        parts.sort(key=mgr.min_vertex)
    return parts


def _sccs_skeleton(mgr, svs):
    out = []
    empty = mgr.empty()
    work = [(svs, empty, empty)]
    while work:
        vset, spine, node = work.pop()
        if mgr.is_empty(vset):
            continue
        if mgr.is_empty(node):
            node = mgr.singleton(mgr.pick(vset))

        # Forward set of the pivot, one layer per step.
        layers = []
        fw = empty
        layer = node
        while not mgr.is_empty(layer):
            layers.append(layer)
            fw = mgr.union(fw, layer)
            layer = mgr.difference(mgr.intersect(mgr.post(layer), vset), fw)

        # Spine: a shortest path from the pivot to a deepest vertex.
        tip = mgr.singleton(mgr.pick(layers[-1]))
        new_spine = tip
        hop = tip
        for prev in reversed(layers[:-1]):
            hop = mgr.singleton(mgr.pick(mgr.intersect(mgr.pre(hop), prev)))
            new_spine = mgr.union(new_spine, hop)

        # The pivot's SCC: backward closure inside the forward set.
        comp = node
        front = node
        while True:
            new = mgr.difference(mgr.intersect(mgr.pre(front), fw), comp)
            if mgr.is_empty(new):
                break
            comp = mgr.union(comp, new)
            front = new
        out.append(comp)

        # Outside the forward set the old spine minus the SCC remains a
        # path; its endpoint is the unique predecessor of the removed
        # suffix (the spine is a shortest path, so there is no shortcut).
        rest = mgr.difference(vset, fw)
        spine_rest = mgr.difference(spine, comp)
        if mgr.is_empty(spine_rest):
            node_rest = empty
        else:
            node_rest = mgr.intersect(
                mgr.pre(mgr.intersect(comp, spine)), spine_rest
            )
        work.append((rest, spine_rest, node_rest))
        work.append(
            (
                mgr.difference(fw, comp),
                mgr.difference(new_spine, comp),
                mgr.difference(tip, comp),
            )
        )
    return out


def _sccs_fwbw(mgr, svs):
    out = []
    work = [svs]
    while work:
        vset = work.pop()
        if mgr.is_empty(vset):
            continue
        pivot = mgr.singleton(mgr.pick(vset))
        fw = pivot
        front = pivot
        while True:
            new = mgr.difference(mgr.intersect(mgr.post(front), vset), fw)
            if mgr.is_empty(new):
                break
            fw = mgr.union(fw, new)
            front = new
        bw = pivot
        front = pivot
        while True:
            new = mgr.difference(mgr.intersect(mgr.pre(front), vset), bw)
            if mgr.is_empty(new):
                break
            bw = mgr.union(bw, new)
            front = new
        comp = mgr.intersect(fw, bw)
        out.append(comp)
        work.append(mgr.difference(fw, comp))
        work.append(mgr.difference(bw, comp))
        work.append(mgr.difference(vset, mgr.union(fw, bw)))
    return out


def check_start_vertices(mgr, svs, lost_in, lost_out):
    """Debug assertion of the start-vertex sufficiency invariant.

    Each side is checked independently: when `lost_in` is nonempty it must
    contain a vertex of every top SCC of the induced subgraph, and when
    `lost_out` is nonempty a vertex of every bottom SCC.  When both are
    empty the subgraph must be strongly connected.
    """
    with mgr.counters_paused():
        parts = all_sccs(mgr, svs)
        if mgr.is_empty(lost_in) and mgr.is_empty(lost_out):
            if len(parts) != 1:
                raise InvariantViolation(
                    "empty start sets but the subgraph is not strongly connected"
                )
            return
        check_in = not mgr.is_empty(lost_in)
        check_out = not mgr.is_empty(lost_out)
        for comp in parts:
            others = mgr.difference(svs, comp)
            if check_in and mgr.is_empty(mgr.intersect(mgr.pre(comp), others)):
                if mgr.is_empty(mgr.intersect(comp, lost_in)):
                    raise InvariantViolation(
                        f"top SCC {mgr.to_ids(comp)} has no lost-incoming witness"
                    )
            if check_out and mgr.is_empty(mgr.intersect(mgr.post(comp), others)):
                if mgr.is_empty(mgr.intersect(comp, lost_out)):
                    raise InvariantViolation(
                        f"bottom SCC {mgr.to_ids(comp)} has no lost-outgoing witness"
                    )


def lock_step_search(mgr, svs, lost_in, lost_out, debug=False, trace=None):
    """Find a top or bottom SCC of the subgraph on `svs` by lock-step search.

    Backward searches start from every vertex of `lost_in`, forward
    searches from every vertex of `lost_out`.  Per round each live search
    advances one step; a search whose set comes to contain a second live
    start vertex of its own kind is dropped (it either shares its SCC
    with that vertex or cannot be extremal).  The first search that
    stops growing returns its set, together with the pruned start sets.

    `trace`, when given a list, receives one record per round with the
    live search counts and the one-step operation deltas of the round.
    """
    if mgr.is_empty(lost_in) and mgr.is_empty(lost_out):
        raise UsageError("lock-step search needs at least one start vertex")
    if debug:
        check_start_vertices(mgr, svs, lost_in, lost_out)

    # Separate state per search kind: a vertex may start both a backward
    # and a forward search.
    h_acc, h_front = {}, {}
    for v in mgr.to_ids(lost_in):
        h_acc[v] = h_front[v] = mgr.singleton(v)
    t_acc, t_front = {}, {}
    for v in mgr.to_ids(lost_out):
        t_acc[v] = t_front[v] = mgr.singleton(v)

    h_alive = lost_in
    t_alive = lost_out

    def result(comp, pruned_in, pruned_out):
        if debug:
            _check_extremal(mgr, svs, comp)
        return comp, pruned_in, pruned_out

    while True:
        before = mgr.snapshot_counters()
        h_round = mgr.to_ids(h_alive)
        t_round = mgr.to_ids(t_alive)
        if trace is not None:
            record = {"live_in": len(h_round), "live_out": len(t_round)}
            trace.append(record)

        h_pruned = h_alive
        t_pruned = t_alive
        returned = None
        for h in h_round:
            grow = mgr.intersect(mgr.pre(h_front[h]), svs)
            new = mgr.difference(grow, h_acc[h])
            cand = h_acc[h] if mgr.is_empty(new) else mgr.union(h_acc[h], new)
            if mgr.cardinality(mgr.intersect(cand, h_pruned)) > 1:
                h_pruned = mgr.difference(h_pruned, mgr.singleton(h))
            elif mgr.is_empty(new):
                returned = result(h_acc[h], h_pruned, t_alive)
                break
            else:
                h_acc[h] = cand
                h_front[h] = new
        if returned is None:
            for t in t_round:
                grow = mgr.intersect(mgr.post(t_front[t]), svs)
                new = mgr.difference(grow, t_acc[t])
                cand = t_acc[t] if mgr.is_empty(new) else mgr.union(t_acc[t], new)
                if mgr.cardinality(mgr.intersect(cand, t_pruned)) > 1:
                    t_pruned = mgr.difference(t_pruned, mgr.singleton(t))
                elif mgr.is_empty(new):
                    returned = result(t_acc[t], h_pruned, t_pruned)
                    break
                else:
                    t_acc[t] = cand
                    t_front[t] = new
        if trace is not None:
            delta = mgr.snapshot_counters() - before
            record["pre_ops"] = delta.pre_ops
            record["post_ops"] = delta.post_ops
        if returned is not None:
            return returned
        h_alive = h_pruned
        t_alive = t_pruned


def _check_extremal(mgr, svs, comp):
    with mgr.counters_paused():
        if len(all_sccs(mgr, comp)) != 1:
            raise InvariantViolation(
                f"lock-step result {mgr.to_ids(comp)} is not strongly connected"
            )
        others = mgr.difference(svs, comp)
        incoming = mgr.intersect(mgr.pre(comp), others)
        outgoing = mgr.intersect(mgr.post(comp), others)
        if not (mgr.is_empty(incoming) or mgr.is_empty(outgoing)):
            raise InvariantViolation(
                f"lock-step result {mgr.to_ids(comp)} is neither a top nor "
                "a bottom SCC"
            )
