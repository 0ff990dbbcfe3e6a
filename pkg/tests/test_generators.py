import pytest

from fourblocks import (
    CyclePattern,
    Digraph,
    Family,
    GenSpec,
    InfeasibleSpec,
    Rng,
    find_cycle_subdivision,
    format_digraph,
    generate,
    is_strongly_connected,
    verify_subdivision,
)

import naive


class TestRng:
    def test_deterministic(self):
        a, b = Rng(42), Rng(42)
        assert [a.next_u64() for _ in range(5)] == [b.next_u64() for _ in range(5)]

    def test_known_splitmix_values(self):
        # first outputs of splitmix64 seeded with 0
        r = Rng(0)
        assert r.next_u64() == 0xE220A8397B1DCDAF
        assert r.next_u64() == 0x6E789E6AA1B965F4

    def test_shuffle_is_permutation(self):
        r = Rng(9)
        xs = list(range(20))
        r.shuffle(xs)
        assert sorted(xs) == list(range(20))


class TestDeterminism:
    @pytest.mark.parametrize(
        "spec",
        [
            GenSpec(Family.DIRECTED_CYCLE, 6),
            GenSpec(Family.TRANSITIVE_TOURNAMENT, 5),
            GenSpec(Family.RANDOM_STRONG, 9, 14, 123),
            GenSpec(Family.RANDOM_HAMILTONIAN, 8, 12, 99),
            GenSpec(Family.PLANTED_SUBDIVISION, 11, 16, 5, CyclePattern((2, 1, 2, 1))),
            GenSpec(Family.ANCESTOR_DIGRAPH, 8, 12, 44),
        ],
    )
    def test_byte_identical(self, spec):
        assert format_digraph(generate(spec)) == format_digraph(generate(spec))


class TestFamilies:
    def test_directed_cycle(self):
        d = generate(GenSpec(Family.DIRECTED_CYCLE, 5))
        assert len(d.arcs) == 5
        assert is_strongly_connected(d)
        assert d.max_out_degree() == 1

    def test_tournament_contains_pattern(self):
        d = generate(GenSpec(Family.TRANSITIVE_TOURNAMENT, 4))
        assert naive.has_cycle_subdivision(d, (1, 1, 1, 1))
        assert find_cycle_subdivision(d, CyclePattern((1, 1, 1, 1))) is not None

    def test_random_strong_is_strong(self):
        for seed in range(40):
            n = 2 + seed % 14
            m = min(n + seed % (n + 3), n * (n - 1))
            d = generate(GenSpec(Family.RANDOM_STRONG, n, m, seed))
            assert is_strongly_connected(d)

    def test_random_hamiltonian_is_strong_with_cycle(self):
        from fourblocks import find_hamiltonian_cycle

        for seed in range(20):
            d = generate(GenSpec(Family.RANDOM_HAMILTONIAN, 7, 10, seed))
            assert is_strongly_connected(d)
            assert find_hamiltonian_cycle(d) is not None

    def test_planted_witness_survives_noise(self):
        for seed in range(25):
            pattern = CyclePattern((2, 1, 2, 1))
            d = generate(GenSpec(Family.PLANTED_SUBDIVISION, 12, 20, seed, pattern))
            assert is_strongly_connected(d)
            w = find_cycle_subdivision(d, pattern)
            assert w is not None
            assert verify_subdivision(d, w, pattern).ok

    def test_planted_seed7_example(self):
        pattern = CyclePattern((2, 1, 2, 1))
        d = generate(GenSpec(Family.PLANTED_SUBDIVISION, 12, 12, 7, pattern))
        assert find_cycle_subdivision(d, pattern) is not None

    def test_ancestor_digraph_arcs_point_to_ancestors(self):
        for seed in range(20):
            d = generate(GenSpec(Family.ANCESTOR_DIGRAPH, 9, 14, seed))
            # rebuild parent pointers from the unique in-arc of tree shape:
            # every non-tree arc must close back onto the walk to the root
            from fourblocks import spanning_out_tree, is_ancestor

            t = spanning_out_tree(d, 0)
            for u, v in d.arcs:
                assert is_ancestor(t, u, v) or is_ancestor(t, v, u)


class TestInfeasible:
    def test_cycle_needs_two_vertices(self):
        with pytest.raises(InfeasibleSpec):
            generate(GenSpec(Family.DIRECTED_CYCLE, 1))

    def test_hamiltonian_needs_m_at_least_n(self):
        with pytest.raises(InfeasibleSpec):
            generate(GenSpec(Family.RANDOM_HAMILTONIAN, 6, 5, 0))

    def test_strong_needs_skeleton(self):
        with pytest.raises(InfeasibleSpec):
            generate(GenSpec(Family.RANDOM_STRONG, 6, 3, 0))

    def test_planted_needs_pattern(self):
        with pytest.raises(InfeasibleSpec):
            generate(GenSpec(Family.PLANTED_SUBDIVISION, 10, 12, 0))

    def test_planted_needs_room(self):
        with pytest.raises(InfeasibleSpec):
            generate(GenSpec(Family.PLANTED_SUBDIVISION, 5, 8, 0, CyclePattern((2, 1, 2, 1))))

    def test_m_range(self):
        with pytest.raises(InfeasibleSpec):
            generate(GenSpec(Family.DIRECTED_CYCLE, 4, 20))
