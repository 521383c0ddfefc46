"""Search kernels against exhaustive subset-enumeration oracles."""

import random

import pytest
from oracles import naive_max_clique_mask as naive_max_clique
from oracles import naive_max_conflict_bounded

from beyondplanar import _kernels_py
from beyondplanar import _native


def random_graph(v, p, seed):
    rng = random.Random(seed)
    adj = [0] * v
    for i in range(v):
        for j in range(i + 1, v):
            if rng.random() < p:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


KERNELS = [_kernels_py] if _native.IMPLEMENTATION == "python" else [_kernels_py, _native]


@pytest.fixture(params=KERNELS, ids=lambda m: m.IMPLEMENTATION)
def kernel(request):
    return request.param


class TestMaxClique:
    def test_empty_graph(self, kernel):
        size, members, proven, _ = kernel.max_clique([])
        assert (size, members, proven) == (0, [], True)

    def test_single_vertex(self, kernel):
        size, members, proven, _ = kernel.max_clique([0])
        assert (size, members, proven) == (1, [0], True)

    def test_triangle_plus_isolated_vertex(self, kernel):
        # vertices 0,1,2 mutually adjacent; 3 isolated
        adj = [0b0110, 0b0101, 0b0011, 0b0000]
        size, members, proven, _ = kernel.max_clique(adj)
        assert size == 3 and sorted(members) == [0, 1, 2] and proven

    @pytest.mark.parametrize("seed", range(12))
    def test_matches_naive_on_random_graphs(self, kernel, seed):
        v = 6 + seed % 9  # 6..14 vertices
        adj = random_graph(v, 0.2 + 0.06 * seed, seed)
        want, _ = naive_max_clique(adj)
        size, members, proven, _ = kernel.max_clique(adj)
        assert proven and size == want
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                assert adj[members[a]] >> members[b] & 1

    @pytest.mark.parametrize("v", [63, 64, 65, 100, 140])
    def test_implementations_agree_beyond_64_vertices(self, v):
        # Masks wider than one machine word exercise the compiled kernel's
        # multi-word bitsets; both implementations must agree exactly.
        adj = random_graph(v, 0.25, v)
        pure = _kernels_py.max_clique(adj)
        active = _native.max_clique(adj)
        assert pure[:3] == active[:3]
        size, members, proven, _ = active
        assert proven and len(members) == size
        for a in range(size):
            for b in range(a + 1, size):
                assert adj[members[a]] >> members[b] & 1

    def test_floor_size_hides_small_cliques(self, kernel):
        adj = random_graph(10, 0.3, 42)
        want, _ = naive_max_clique(adj)
        size, members, proven, _ = kernel.max_clique(adj, floor_size=want)
        assert proven and size == want and members == []
        size, members, proven, _ = kernel.max_clique(adj, floor_size=want - 1)
        assert proven and size == want and len(members) == want

    def test_target_stops_early(self, kernel):
        adj = random_graph(14, 0.8, 7)
        size, members, proven, _ = kernel.max_clique(adj, target=3)
        assert proven and size >= 3 and len(members) == size

    def test_budget_truncation_is_flagged(self, kernel):
        adj = random_graph(16, 0.7, 3)
        size, _, proven, nodes = kernel.max_clique(adj, budget=5)
        assert not proven and nodes <= 5

    def test_rejects_self_adjacency(self, kernel):
        with pytest.raises(ValueError):
            kernel.max_clique([1])

    def test_rejects_out_of_range_bits(self, kernel):
        with pytest.raises(ValueError):
            kernel.max_clique([2, 1 | 4])


class TestMaxConflictBoundedSet:
    def test_no_conflicts_takes_everything(self, kernel):
        size, members, proven, _ = kernel.max_conflict_bounded_set([0] * 5, 0)
        assert proven and size == 5 and members == [0, 1, 2, 3, 4]

    def test_k0_is_independent_set(self, kernel):
        # 5-cycle of conflicts: max independent set has 2 members.
        conflicts = [0] * 5
        for a, b in [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]:
            conflicts[a] |= 1 << b
            conflicts[b] |= 1 << a
        size, _, proven, _ = kernel.max_conflict_bounded_set(conflicts, 0)
        assert proven and size == 2

    def test_k1_on_cycle(self, kernel):
        conflicts = [0] * 5
        for a, b in [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]:
            conflicts[a] |= 1 << b
            conflicts[b] |= 1 << a
        size, _, proven, _ = kernel.max_conflict_bounded_set(conflicts, 1)
        assert proven and size == naive_max_conflict_bounded(conflicts, 1) == 3

    @pytest.mark.parametrize("seed", range(10))
    @pytest.mark.parametrize("k", [0, 1, 2, 3])
    def test_matches_naive_on_random_graphs(self, kernel, seed, k):
        d = 7 + seed % 6  # 7..12 indices
        conflicts = random_graph(d, 0.25 + 0.05 * seed, 100 + seed)
        want = naive_max_conflict_bounded(conflicts, k)
        size, members, proven, _ = kernel.max_conflict_bounded_set(conflicts, k)
        assert proven and size == want
        chosen = 0
        for i in members:
            chosen |= 1 << i
        for i in members:
            assert (conflicts[i] & chosen).bit_count() <= k

    def test_cap_allows_early_stop(self, kernel):
        conflicts = [0] * 8
        size, _, proven, _ = kernel.max_conflict_bounded_set(conflicts, 0, cap=8)
        assert proven and size == 8

    def test_sound_cap_does_not_change_answer(self, kernel):
        conflicts = random_graph(10, 0.4, 11)
        want = naive_max_conflict_bounded(conflicts, 1)
        size, _, proven, _ = kernel.max_conflict_bounded_set(conflicts, 1, cap=want)
        assert proven and size == want

    def test_forced_mask_is_respected(self, kernel):
        conflicts = random_graph(9, 0.4, 13)
        for forced in (1, 1 << 4, (1 << 2) | (1 << 7)):
            size, members, proven, _ = kernel.max_conflict_bounded_set(conflicts, 2, forced_mask=forced)
            assert proven
            if size >= 0:
                chosen = 0
                for i in members:
                    chosen |= 1 << i
                assert chosen & forced == forced

    def test_infeasible_forced_set_returns_minus_one(self, kernel):
        # 0 and 1 conflict; k=0 forbids choosing both, so forcing both fails.
        conflicts = [0b10, 0b01]
        size, members, proven, _ = kernel.max_conflict_bounded_set(conflicts, 0, forced_mask=0b11)
        assert proven and size == -1 and members == []

    def test_budget_truncation_is_flagged(self, kernel):
        conflicts = random_graph(16, 0.5, 5)
        _, _, proven, nodes = kernel.max_conflict_bounded_set(conflicts, 2, budget=10)
        assert not proven and nodes <= 10
