"""SCC decomposition and lock-step search."""

import random

import pytest

from fairchk import UsageError, all_sccs, lock_step_search
from fairchk.oracle import tarjan_scc

from conftest import mgr_for
from helpers import lockstep_instance, scc_instance, top_bottom_sccs


class TestAllSccs:
    def test_two_components(self, f2, backend):
        mgr = mgr_for(f2, backend)
        parts = all_sccs(mgr, mgr.universe)
        assert [mgr.to_ids(p) for p in parts] == [[0, 1], [2, 3]]

    def test_single_cycle(self, f1, backend):
        mgr = mgr_for(f1, backend)
        assert [mgr.to_ids(p) for p in all_sccs(mgr, mgr.universe)] == [[0, 1, 2]]

    def test_trivial_components_in_subgraph(self, f2, backend):
        mgr = mgr_for(f2, backend)
        parts = all_sccs(mgr, mgr.from_ids([1, 2]))
        assert [mgr.to_ids(p) for p in parts] == [[1], [2]]

    def test_empty_subgraph(self, f1):
        mgr = mgr_for(f1)
        assert all_sccs(mgr, mgr.empty()) == []

    @pytest.mark.parametrize("variant", ["skeleton", "fwbw"])
    def test_matches_tarjan_on_random_graphs(self, variant):
        for seed in range(400):
            model = scc_instance(seed, n_max=32)
            mgr = mgr_for(model)
            parts = all_sccs(mgr, mgr.universe, variant=variant)
            assert [mgr.to_ids(p) for p in parts] == tarjan_scc(model), seed

    def test_matches_tarjan_on_random_subgraphs(self):
        for seed in range(200):
            model = scc_instance(seed, n_max=24)
            rng = random.Random(seed ^ 0x5CC)
            svs = sorted(rng.sample(range(model.n), rng.randint(1, model.n)))
            mgr = mgr_for(model)
            parts = all_sccs(mgr, mgr.from_ids(svs))
            assert [mgr.to_ids(p) for p in parts] == tarjan_scc(model, svs), seed

    def test_variants_agree(self):
        for seed in range(150):
            model = scc_instance(seed, n_max=24)
            mgr = mgr_for(model)
            a = [mgr.to_ids(p) for p in all_sccs(mgr, mgr.universe)]
            b = [mgr.to_ids(p) for p in all_sccs(mgr, mgr.universe, variant="fwbw")]
            assert a == b, seed

    def test_linear_step_budget(self):
        # Frozen regression constant; the skeleton variant stays below it
        # on random graphs and on adversarial path/cycle shapes.
        for seed in range(200):
            model = scc_instance(seed)
            mgr = mgr_for(model)
            all_sccs(mgr, mgr.universe)
            assert mgr.snapshot_counters().headline <= 6 * model.n, seed

    def test_linear_step_budget_on_adversarial_shapes(self):
        from fairchk.model import Model

        n = 512
        shapes = {
            "path": tuple((i, i + 1) for i in range(n - 1)) + ((n - 1, n - 1),),
            "cycle": tuple((i, (i + 1) % n) for i in range(n)),
            "two-cycle chain": tuple(
                edge
                for c in range(n // 2)
                for edge in [(2 * c, 2 * c + 1), (2 * c + 1, 2 * c)]
                + ([(2 * c + 1, 2 * c + 2)] if c + 1 < n // 2 else [])
            ),
        }
        for name, edges in shapes.items():
            model = Model("graph", n, edges, frozenset()).validate()
            mgr = mgr_for(model)
            parts = all_sccs(mgr, mgr.universe)
            assert [mgr.to_ids(p) for p in parts] == tarjan_scc(model), name
            assert mgr.snapshot_counters().headline <= 6 * n, name


class TestLockStep:
    def test_backward_search_wins(self, f2):
        # Top component found by the search from vertex 0; the forward
        # search from 2 is still running when it closes.
        mgr = mgr_for(f2)
        comp, lost_in, lost_out = lock_step_search(
            mgr, mgr.universe, mgr.from_ids([0]), mgr.from_ids([2])
        )
        assert mgr.to_ids(comp) == [0, 1]
        assert mgr.to_ids(lost_in) == [0]
        assert mgr.to_ids(lost_out) == [2]

    def test_strongly_connected_returns_everything(self, f1):
        mgr = mgr_for(f1)
        comp, _, _ = lock_step_search(mgr, mgr.universe, mgr.from_ids([0]), mgr.empty())
        assert comp == mgr.universe

    def test_collision_prunes_exactly_one(self, f2):
        mgr = mgr_for(f2)
        comp, lost_in, lost_out = lock_step_search(
            mgr, mgr.universe, mgr.empty(), mgr.from_ids([2, 3])
        )
        assert mgr.to_ids(comp) == [2, 3]
        assert mgr.to_ids(lost_out) == [3]

    def test_no_start_vertices_rejected(self, f1):
        mgr = mgr_for(f1)
        with pytest.raises(UsageError):
            lock_step_search(mgr, mgr.universe, mgr.empty(), mgr.empty())

    def test_rounds_alternate_one_step_per_live_search(self):
        for seed in range(120):
            model, svs_ids, in_ids, out_ids = lockstep_instance(seed)
            if not in_ids and not out_ids:
                continue
            mgr = mgr_for(model)
            trace = []
            lock_step_search(
                mgr,
                mgr.from_ids(svs_ids),
                mgr.from_ids(in_ids),
                mgr.from_ids(out_ids),
                trace=trace,
            )
            for record in trace:
                assert record["pre_ops"] <= record["live_in"]
                assert record["post_ops"] <= record["live_out"]

    def test_returns_extremal_component(self):
        for seed in range(400):
            model, svs_ids, in_ids, out_ids = lockstep_instance(seed)
            if not in_ids and not out_ids:
                continue
            mgr = mgr_for(model)
            comp, _, _ = lock_step_search(
                mgr,
                mgr.from_ids(svs_ids),
                mgr.from_ids(in_ids),
                mgr.from_ids(out_ids),
                debug=True,
            )
            cids = mgr.to_ids(comp)
            tops, bottoms = top_bottom_sccs(model, svs_ids)
            assert cids in tops or cids in bottoms, seed

    def test_step_budget_with_frozen_constant(self):
        # ops <= 2 * (|in|+|out|) * min(|C|, |rest|) + 2, with the |C| form
        # when the whole subgraph is returned.
        for seed in range(400):
            model, svs_ids, in_ids, out_ids = lockstep_instance(seed)
            if not in_ids and not out_ids:
                continue
            mgr = mgr_for(model)
            before = mgr.snapshot_counters()
            comp, _, _ = lock_step_search(
                mgr,
                mgr.from_ids(svs_ids),
                mgr.from_ids(in_ids),
                mgr.from_ids(out_ids),
            )
            delta = mgr.snapshot_counters() - before
            size = mgr.cardinality(comp)
            rest = len(svs_ids) - size
            witnesses = len(in_ids) + len(out_ids)
            core = witnesses * (min(size, rest) if rest else size)
            assert delta.headline <= 2 * core + 2, seed

    def test_same_vertex_on_both_sides(self):
        # A vertex may seed a backward and a forward search independently.
        for seed in range(60):
            model, svs_ids, in_ids, out_ids = lockstep_instance(seed)
            shared = sorted(set(in_ids) | set(out_ids))
            if not shared:
                continue
            mgr = mgr_for(model)
            comp, _, _ = lock_step_search(
                mgr,
                mgr.from_ids(svs_ids),
                mgr.from_ids(shared),
                mgr.from_ids(shared),
                debug=True,
            )
            assert not mgr.is_empty(comp)
