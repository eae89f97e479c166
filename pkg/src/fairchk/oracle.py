"""Explicit reference implementations used as ground truth in tests.

Everything here works on plain adjacency lists and Python sets, shares no
code with the symbolic layer, and favors obvious correctness over speed.
Intended for desk-scale inputs (tests cap these at n <= 64).
"""

from __future__ import annotations

__all__ = [
    "tarjan_scc",
    "explicit_attractor",
    "explicit_almost_sure_reach",
    "explicit_mec",
    "explicit_streett_graph",
    "explicit_streett_mdp",
]


def tarjan_scc(model, subset=None) -> list:
    """SCC partition of the subgraph induced by `subset` (default: all).

    Iterative Tarjan; components are returned sorted by minimum vertex,
    vertices sorted within each component.
    """
    if subset is None:
        subset = range(model.n)
    inside = set(subset)
    adj = model.out_adjacency()
    index = {}
    lowlink = {}
    on_stack = set()
    stack = []
    counter = [0]
    components = []

    def strongconnect(root):
        work = [(root, iter([w for w in adj[root] if w in inside]))]
        index[root] = lowlink[root] = counter[0]
        counter[0] += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = lowlink[w] = counter[0]
                    counter[0] += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter([x for x in adj[w] if x in inside])))
                    advanced = True
                    break
                if w in on_stack:
                    lowlink[v] = min(lowlink[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[v])
            if lowlink[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                components.append(sorted(comp))

    for v in sorted(inside):
        if v not in index:
            strongconnect(v)
    components.sort(key=lambda comp: comp[0])
    return components


def _reach_backward(adj_in, inside, targets):
    reached = set(targets) & inside
    frontier = list(reached)
    while frontier:
        v = frontier.pop()
        for u in adj_in[v]:
            if u in inside and u not in reached:
                reached.add(u)
                frontier.append(u)
    return reached


def explicit_attractor(model, inside, targets) -> set:
    """Random attractor of `targets` within the subgraph on `inside`.

    Fixpoint of adding random vertices with a successor in the attractor
    and player-1 vertices all of whose successors inside `inside` are in
    the attractor (vacuously, player-1 vertices with no such successor).
    """
    inside = set(inside)
    adj = model.out_adjacency()
    attr = set(targets) & inside
    changed = True
    while changed:
        changed = False
        for v in inside - attr:
            succ = [w for w in adj[v] if w in inside]
            if v in model.random_vertices:
                pull = any(w in attr for w in succ)
            else:
                pull = all(w in attr for w in succ)
            if pull:
                attr.add(v)
                changed = True
    return attr


def explicit_almost_sure_reach(model, targets) -> set:
    """Vertices from which the targets are reached with probability one.

    Iterated pruning: drop the region that cannot reach the targets, then
    its random attractor, until stable.  Target vertices count as won on
    arrival, so they are never pruned (equivalently, targets are treated
    as absorbing).
    """
    targets = set(targets)
    adj = model.out_adjacency()
    adj_in = model.in_adjacency()
    cur = set(range(model.n))
    while True:
        reaching = _reach_backward(adj_in, cur, targets & cur)
        dead = cur - reaching
        if not dead:
            return cur
        attr = set(dead)
        changed = True
        while changed:
            changed = False
            for v in cur - attr:
                if v in targets:
                    continue
                if v in model.random_vertices:
                    pull = any(w in attr or w not in cur for w in adj[v])
                else:
                    pull = all(w in attr or w not in cur for w in adj[v])
                if pull:
                    attr.add(v)
                    changed = True
        cur -= attr


def _has_internal_edge(model, subset):
    subset = set(subset)
    return any(u in subset and v in subset for u, v in model.edges)


def explicit_mec(model, universe=None) -> list:
    """Maximal end-component decomposition, sorted by minimum vertex."""
    if universe is None:
        universe = range(model.n)
    adj = model.out_adjacency()
    mecs = []
    work = [set(c) for c in tarjan_scc(model, universe)]
    while work:
        part = work.pop()
        if not part:
            continue
        rout = {
            v
            for v in part & model.random_vertices
            if any(w not in part for w in adj[v])
        }
        if rout:
            rest = part - explicit_attractor(model, part, rout)
            work.extend(set(c) for c in tarjan_scc(model, rest))
        elif _has_internal_edge(model, part):
            mecs.append(sorted(part))
    mecs.sort(key=lambda comp: comp[0])
    return mecs


def _bad(pairs, subset):
    subset = set(subset)
    bad = set()
    for left, right in pairs.pairs:
        if not right & subset:
            bad |= left & subset
    return bad


def explicit_streett_graph(model, pairs) -> list:
    """Winning set of a graph for the strong-fairness objective."""
    adj_in = model.in_adjacency()
    good = []
    work = [set(c) for c in tarjan_scc(model)]
    while work:
        part = work.pop()
        bad = _bad(pairs, part)
        if bad:
            work.extend(set(c) for c in tarjan_scc(model, part - bad))
        elif _has_internal_edge(model, part):
            good.append(part)
    target = set().union(*good) if good else set()
    return sorted(_reach_backward(adj_in, set(range(model.n)), target))


def explicit_streett_mdp(model, pairs) -> list:
    """Almost-sure winning set of an MDP for the strong-fairness objective."""
    good = []
    work = [set(c) for c in explicit_mec(model)]
    while work:
        part = work.pop()
        bad = _bad(pairs, part)
        if bad:
            rest = part - explicit_attractor(model, part, bad)
            work.extend(set(c) for c in explicit_mec(model, rest))
        else:
            good.append(part)
    target = set().union(*good) if good else set()
    return sorted(explicit_almost_sure_reach(model, target))
