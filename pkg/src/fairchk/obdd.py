"""Reduced ordered BDD backend for the symbolic vertex-set layer.

Vertex ids are encoded in ``b = ceil(log2 n)`` bits, most significant bit
first.  Current-state and next-state variables are interleaved: the bit
``i`` of the current vertex sits at BDD level ``2*i`` and the same bit of
the successor vertex at level ``2*i + 1``.  Vertex sets are BDDs over the
current-state levels only; the edge relation is a BDD over both rails.

The engine is a plain unique-table/apply-cache construction (hash-consed
nodes, memoized binary operations, quantification and level shifting).
No dynamic reordering and no garbage collection: managers live for one
algorithm run on desk-scale inputs, so the node table simply grows.
"""

from __future__ import annotations

__all__ = ["ObddBackend"]

_FALSE = 0
_TRUE = 1


class _Bdd:
    """Minimal ROBDD engine over a fixed number of levels."""

    def __init__(self, num_levels):
        self.num_levels = num_levels
        # node id -> (level, low, high); terminals get a level past the end
        self.level = [num_levels, num_levels]
        self.low = [0, 1]
        self.high = [0, 1]
        self._unique = {}
        self._cache = {}

    def mk(self, level, lo, hi):
        if lo == hi:
            return lo
        key = (level, lo, hi)
        node = self._unique.get(key)
        if node is None:
            node = len(self.level)
            self.level.append(level)
            self.low.append(lo)
            self.high.append(hi)
            self._unique[key] = node
        return node

    # -- binary operations -------------------------------------------------

    def apply(self, op, a, b):
        # op: 'and' | 'or' | 'diff'
        if op == "and":
            if a == _FALSE or b == _FALSE:
                return _FALSE
            if a == _TRUE:
                return b
            if b == _TRUE:
                return a
            if a == b:
                return a
        elif op == "or":
            if a == _TRUE or b == _TRUE:
                return _TRUE
            if a == _FALSE:
                return b
            if b == _FALSE:
                return a
            if a == b:
                return a
        else:  # diff
            if a == _FALSE or b == _TRUE or a == b:
                return _FALSE
            if b == _FALSE:
                return a
        key = (op, a, b)
        r = self._cache.get(key)
        if r is not None:
            return r
        la, lb = self.level[a], self.level[b]
        top = la if la < lb else lb
        a0, a1 = (self.low[a], self.high[a]) if la == top else (a, a)
        b0, b1 = (self.low[b], self.high[b]) if lb == top else (b, b)
        r = self.mk(top, self.apply(op, a0, b0), self.apply(op, a1, b1))
        self._cache[key] = r
        return r

    # -- quantification and renaming ---------------------------------------

    def exists(self, a, parity):
        """Existentially quantify all levels with ``level % 2 == parity``."""
        if a <= _TRUE:
            return a
        key = ("ex", parity, a)
        r = self._cache.get(key)
        if r is not None:
            return r
        lvl = self.level[a]
        lo = self.exists(self.low[a], parity)
        hi = self.exists(self.high[a], parity)
        if lvl % 2 == parity:
            r = self.apply("or", lo, hi)
        else:
            r = self.mk(lvl, lo, hi)
        self._cache[key] = r
        return r

    def shift(self, a, delta):
        """Rebuild `a` with every level moved by `delta` (+1 or -1).

        Valid because the interleaved order keeps relative level order
        intact when a rail-pure BDD hops to the other rail.
        """
        if a <= _TRUE:
            return a
        key = ("sh", delta, a)
        r = self._cache.get(key)
        if r is not None:
            return r
        r = self.mk(
            self.level[a] + delta,
            self.shift(self.low[a], delta),
            self.shift(self.high[a], delta),
        )
        self._cache[key] = r
        return r


class ObddBackend:
    """Decision-diagram implementation of the vertex-set operations."""

    name = "obdd"

    def __init__(self, n, edges, random_vertices):
        self.n = n
        self.bits = max(1, (n - 1).bit_length())
        self.dd = _Bdd(2 * self.bits)
        self._domain = self._set_from_sorted(sorted(range(n)), 0)
        out = [[] for _ in range(n)]
        for u, v in edges:
            out[u].append(v)
        for succ in out:
            succ.sort()
        self._edge_rel = self._build_relation(out, 0, n)
        self.vr = self._set_from_sorted(sorted(set(random_vertices)), 0)
        self.v1 = self.dd.apply("diff", self._domain, self.vr)

    # -- construction helpers ----------------------------------------------

    def _set_from_sorted(self, ids, bit):
        """BDD (over current-state levels) of a sorted id list."""
        if not ids:
            return _FALSE
        if bit == self.bits:
            return _TRUE
        weight = 1 << (self.bits - 1 - bit)
        split = 0
        while split < len(ids) and not ids[split] & weight:
            split += 1
        lo = self._set_from_sorted([i for i in ids[:split]], bit + 1)
        hi = self._set_from_sorted([i & ~weight for i in ids[split:]], bit + 1)
        return self.dd.mk(2 * bit, lo, hi)

    def _minterm(self, u):
        node = _TRUE
        for bit in range(self.bits - 1, -1, -1):
            if u & (1 << (self.bits - 1 - bit)):
                node = self.dd.mk(2 * bit, _FALSE, node)
            else:
                node = self.dd.mk(2 * bit, node, _FALSE)
        return node

    def _build_relation(self, out, lo_u, hi_u):
        """Balanced OR-fold of per-vertex (current-minterm AND successors)."""
        if hi_u - lo_u == 1:
            succ = self.dd.shift(self._set_from_sorted(out[lo_u], 0), 1)
            return self.dd.apply("and", self._minterm(lo_u), succ)
        mid = (lo_u + hi_u) // 2
        return self.dd.apply(
            "or",
            self._build_relation(out, lo_u, mid),
            self._build_relation(out, mid, hi_u),
        )

    # -- set-operation interface --------------------------------------------

    def empty(self):
        return _FALSE

    def universe(self):
        return self._domain

    def from_ids(self, ids):
        return self._set_from_sorted(sorted(set(ids)), 0)

    def to_ids(self, h):
        out = []
        self._collect(h, 0, 0, out)
        return out

    def _collect(self, node, bit, prefix, out):
        if node == _FALSE:
            return
        if bit == self.bits:
            out.append(prefix)
            return
        weight = 1 << (self.bits - 1 - bit)
        if node != _TRUE and self.dd.level[node] == 2 * bit:
            self._collect(self.dd.low[node], bit + 1, prefix, out)
            self._collect(self.dd.high[node], bit + 1, prefix | weight, out)
        else:
            self._collect(node, bit + 1, prefix, out)
            self._collect(node, bit + 1, prefix | weight, out)

    def pre(self, z):
        zy = self.dd.shift(z, 1)
        conj = self.dd.apply("and", self._edge_rel, zy)
        return self.dd.exists(conj, 1)

    def post(self, z):
        conj = self.dd.apply("and", self._edge_rel, z)
        img = self.dd.exists(conj, 0)
        return self.dd.shift(img, -1)

    def cpre_random(self, z, s):
        dd = self.dd
        escape = self.pre(dd.apply("diff", s, z))
        forced = dd.apply("diff", dd.apply("and", s, self.v1), escape)
        lured = dd.apply(
            "and", dd.apply("and", s, self.vr), self.pre(dd.apply("and", z, s))
        )
        return dd.apply("or", forced, lured)

    def union(self, a, b):
        return self.dd.apply("or", a, b)

    def intersect(self, a, b):
        return self.dd.apply("and", a, b)

    def difference(self, a, b):
        return self.dd.apply("diff", a, b)

    def complement(self, a):
        return self.dd.apply("diff", self._domain, a)

    def card(self, h):
        return self._count(h, 0)

    def _count(self, node, bit):
        if bit == self.bits:
            return 1 if node == _TRUE else 0
        if node == _FALSE:
            return 0
        if node != _TRUE and self.dd.level[node] == 2 * bit:
            return self._count(self.dd.low[node], bit + 1) + self._count(
                self.dd.high[node], bit + 1
            )
        return 2 * self._count(node, bit + 1)

    def min_vertex(self, h):
        # MSB-first ordering makes the greedy 0-preferring walk minimal.
        node = h
        value = 0
        for bit in range(self.bits):
            if node != _FALSE and node != _TRUE and self.dd.level[node] == 2 * bit:
                if self.dd.low[node] != _FALSE:
                    node = self.dd.low[node]
                else:
                    value |= 1 << (self.bits - 1 - bit)
                    node = self.dd.high[node]
        return value

    def is_empty(self, h):
        return h == _FALSE
