"""Backend-abstract symbolic vertex-set layer with exact operation accounting.

All algorithm modules access the transition structure exclusively through
:class:`SymbolicManager`, which supports the classic one-step operators
(predecessor, successor, controllable predecessor for random players),
set algebra, cardinality and vertex picking.  Every call increments a
counter in :class:`StepCounters`; the counters are the cost model in which
all step bounds of the algorithms are stated and measured.

Two interchangeable backends implement the same semantics:

- ``bitset``: vertex sets are Python integers used as bit masks and the
  edge relation is a pair of adjacency mask tables.  Fast and transparent;
  the reference backend for tests.
- ``obdd``: vertex sets are reduced ordered binary decision diagrams over
  the binary encoding of vertex ids (see :mod:`fairchk.obdd`).

Both backends are exact; a property of the package is that identical call
sequences produce identical sets and identical counters on either backend.
"""

from __future__ import annotations

import dataclasses
from contextlib import contextmanager

from .errors import UsageError

__all__ = ["StepCounters", "VertexSet", "SymbolicManager"]


@dataclasses.dataclass
class StepCounters:
    """Monotone counters for the symbolic operations of one manager.

    ``pre_ops + post_ops`` is the headline step count used in benchmark
    comparisons; controllable-predecessor steps and the cheaper set-level
    operations are tracked separately and never folded into it.
    """

    pre_ops: int = 0
    post_ops: int = 0
    cpre_ops: int = 0
    set_ops: int = 0
    cardinality_ops: int = 0
    pick_ops: int = 0

    @property
    def headline(self) -> int:
        return self.pre_ops + self.post_ops

    @property
    def headline_with_cpre(self) -> int:
        """Headline count with each controllable predecessor expanded.

        One such step costs two predecessor operations plus two set
        operations when expressed through the plain operators; only the
        predecessor part is added here.
        """
        return self.pre_ops + self.post_ops + 2 * self.cpre_ops

    def copy(self) -> "StepCounters":
        return dataclasses.replace(self)

    def __sub__(self, other: "StepCounters") -> "StepCounters":
        return StepCounters(
            self.pre_ops - other.pre_ops,
            self.post_ops - other.post_ops,
            self.cpre_ops - other.cpre_ops,
            self.set_ops - other.set_ops,
            self.cardinality_ops - other.cardinality_ops,
            self.pick_ops - other.pick_ops,
        )

    def as_dict(self) -> dict:
        return dataclasses.asdict(self)


class VertexSet:
    """Opaque handle to a set of vertices owned by one manager.

    Handles are immutable; all algebra goes through the owning manager so
    that it can be counted.  Equality compares the underlying sets (both
    backends use canonical representations, so this is cheap and is not a
    counted operation).
    """

    __slots__ = ("mgr", "h")

    def __init__(self, mgr: "SymbolicManager", h):
        self.mgr = mgr
        self.h = h

    def __eq__(self, other):
        return (
            isinstance(other, VertexSet)
            and self.mgr is other.mgr
            and self.h == other.h
        )

    def __hash__(self):
        return hash((id(self.mgr), self.h))

    def __repr__(self):
        ids = self.mgr.to_ids(self)
        if len(ids) > 12:
            shown = ", ".join(map(str, ids[:12]))
            return f"VertexSet{{{shown}, ... ({len(ids)} total)}}"
        return "VertexSet{" + ", ".join(map(str, ids)) + "}"


class _BitsetBackend:
    """Vertex sets as integer bit masks, adjacency as mask tables."""

    name = "bitset"

    def __init__(self, n, edges, random_vertices):
        self.n = n
        self.full = (1 << n) - 1
        out = [0] * n
        inc = [0] * n
        for u, v in edges:
            out[u] |= 1 << v
            inc[v] |= 1 << u
        self.out_masks = out
        self.in_masks = inc
        vr = 0
        for v in random_vertices:
            vr |= 1 << v
        self.vr_mask = vr

    def empty(self):
        return 0

    def universe(self):
        return self.full

    def from_ids(self, ids):
        h = 0
        for v in ids:
            h |= 1 << v
        return h

    def to_ids(self, h):
        out = []
        while h:
            b = h & -h
            out.append(b.bit_length() - 1)
            h ^= b
        return out

    def pre(self, z):
        acc = 0
        masks = self.in_masks
        while z:
            b = z & -z
            acc |= masks[b.bit_length() - 1]
            z ^= b
        return acc

    def post(self, z):
        acc = 0
        masks = self.out_masks
        while z:
            b = z & -z
            acc |= masks[b.bit_length() - 1]
            z ^= b
        return acc

    def cpre_random(self, z, s):
        # Direct per-vertex evaluation; deliberately not routed through
        # pre() so tests can cross-check the two routes.
        acc = 0
        vr = self.vr_mask
        out = self.out_masks
        not_z = ~z
        t = s
        while t:
            b = t & -t
            t ^= b
            o = out[b.bit_length() - 1] & s
            if b & vr:
                if o & z:
                    acc |= b
            elif not (o & not_z):
                # All successors inside s lie in z (vacuously true when
                # the vertex has no successor inside s).
                acc |= b
        return acc

    def union(self, a, b):
        return a | b

    def intersect(self, a, b):
        return a & b

    def difference(self, a, b):
        return a & ~b

    def complement(self, a):
        return self.full & ~a

    def card(self, h):
        return h.bit_count()

    def min_vertex(self, h):
        return (h & -h).bit_length() - 1

    def is_empty(self, h):
        return h == 0


class SymbolicManager:
    """Owner of the symbolic transition structure of one model.

    Holds the vertex universe, the edge relation, the player partition
    (player-1 versus random vertices) and the step counters.  Construct
    with :meth:`from_model`; every vertex of the model must have at least
    one outgoing edge so that plays never get stuck.

    A manager and its handles belong to one thread of control.  Run
    independent inputs on independent managers for parallelism.
    """

    def __init__(self, n, edges, random_vertices, backend="bitset"):
        if n <= 0:
            raise UsageError("vertex count must be positive")
        outdeg = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise UsageError(f"edge ({u}, {v}) out of range for n={n}")
            outdeg[u] += 1
        sinks = [v for v in range(n) if outdeg[v] == 0]
        if sinks:
            raise UsageError(f"vertex {sinks[0]} has no outgoing edge")
        for v in random_vertices:
            if not 0 <= v < n:
                raise UsageError(f"random vertex {v} out of range")
        if backend == "bitset":
            self._b = _BitsetBackend(n, edges, random_vertices)
        elif backend == "obdd":
            from .obdd import ObddBackend

            self._b = ObddBackend(n, edges, random_vertices)
        else:
            raise UsageError(f"unknown backend {backend!r}")
        self.n = n
        self.backend = backend
        self.counters = StepCounters()
        self._paused = 0
        self.universe = VertexSet(self, self._b.universe())
        self.v_random = VertexSet(self, self._b.from_ids(sorted(random_vertices)))
        self.v_player1 = VertexSet(
            self, self._b.difference(self.universe.h, self.v_random.h)
        )

    @classmethod
    def from_model(cls, model, backend="bitset"):
        return cls(model.n, model.edges, model.random_vertices, backend=backend)

    # -- bookkeeping ---------------------------------------------------

    def _h(self, z: VertexSet):
        if not isinstance(z, VertexSet) or z.mgr is not self:
            raise UsageError("vertex set belongs to a different manager")
        return z.h

    def _wrap(self, h) -> VertexSet:
        return VertexSet(self, h)

    @contextmanager
    def counters_paused(self):
        """Suspend counting, e.g. for debug assertions and bookkeeping."""
        self._paused += 1
        try:
            yield
        finally:
            self._paused -= 1

    def snapshot_counters(self) -> StepCounters:
        return self.counters.copy()

    # -- uncounted constructors and queries ------------------------------

    def empty(self) -> VertexSet:
        return self._wrap(self._b.empty())

    def from_ids(self, ids) -> VertexSet:
        for v in ids:
            if not 0 <= v < self.n:
                raise UsageError(f"vertex {v} out of range")
        return self._wrap(self._b.from_ids(ids))

    def singleton(self, v: int) -> VertexSet:
        return self.from_ids([v])

    def to_ids(self, z: VertexSet) -> list:
        return self._b.to_ids(self._h(z))

    def is_empty(self, z: VertexSet) -> bool:
        return self._b.is_empty(self._h(z))

    def contains(self, z: VertexSet, v: int) -> bool:
        return not self._b.is_empty(
            self._b.intersect(self._h(z), self._b.from_ids([v]))
        )

    def min_vertex(self, z: VertexSet) -> int:
        """Smallest id in `z`, for deterministic bookkeeping (uncounted)."""
        if self._b.is_empty(self._h(z)):
            raise UsageError("min_vertex of empty set")
        return self._b.min_vertex(self._h(z))

    # -- counted symbolic operations --------------------------------------

    def pre(self, z: VertexSet) -> VertexSet:
        """One-step predecessors: vertices with a successor in `z`."""
        h = self._h(z)
        if not self._paused:
            self.counters.pre_ops += 1
        return self._wrap(self._b.pre(h))

    def post(self, z: VertexSet) -> VertexSet:
        """One-step successors: vertices with a predecessor in `z`."""
        h = self._h(z)
        if not self._paused:
            self.counters.post_ops += 1
        return self._wrap(self._b.post(h))

    def cpre_random(self, z: VertexSet, within: VertexSet | None = None) -> VertexSet:
        """Controllable predecessor for the random player.

        Player-1 vertices all of whose successors lie in `z`, plus random
        vertices with at least one successor in `z`.  With `within`, edges
        and membership are restricted to the induced subgraph; a player-1
        vertex with no successor inside `within` qualifies vacuously.
        """
        h = self._h(z)
        s = self._b.universe() if within is None else self._h(within)
        if not self._paused:
            self.counters.cpre_ops += 1
        return self._wrap(self._b.cpre_random(h, s))

    def union(self, a: VertexSet, b: VertexSet) -> VertexSet:
        ha, hb = self._h(a), self._h(b)
        if not self._paused:
            self.counters.set_ops += 1
        return self._wrap(self._b.union(ha, hb))

    def intersect(self, a: VertexSet, b: VertexSet) -> VertexSet:
        ha, hb = self._h(a), self._h(b)
        if not self._paused:
            self.counters.set_ops += 1
        return self._wrap(self._b.intersect(ha, hb))

    def difference(self, a: VertexSet, b: VertexSet) -> VertexSet:
        ha, hb = self._h(a), self._h(b)
        if not self._paused:
            self.counters.set_ops += 1
        return self._wrap(self._b.difference(ha, hb))

    def complement(self, a: VertexSet) -> VertexSet:
        ha = self._h(a)
        if not self._paused:
            self.counters.set_ops += 1
        return self._wrap(self._b.complement(ha))

    def cardinality(self, z: VertexSet) -> int:
        h = self._h(z)
        if not self._paused:
            self.counters.cardinality_ops += 1
        return self._b.card(h)

    def pick(self, z: VertexSet) -> int:
        """An arbitrary vertex of `z`; deterministically the minimum id."""
        h = self._h(z)
        if self._b.is_empty(h):
            raise UsageError("pick from empty set")
        if not self._paused:
            self.counters.pick_ops += 1
        return self._b.min_vertex(h)
