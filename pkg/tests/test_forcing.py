import random

import pytest

from kforcing import (
    Graph,
    GraphError,
    NotKConnectedError,
    check_spread,
    closure,
    closure_async,
    components,
    degree_profile,
    disjoint_union,
    greedy_k_forcing_upper,
    is_k_forcing_set,
    k_forcing_number,
    mask_from,
    min_forcing_connected_complement,
    vertices_from,
)
from kforcing.families import complete, complete_bipartite, cycle, path
from kforcing.smallgraphs import random_graph


def forcing_number_oracle(g: Graph, k: int) -> int:
    """Brute force: scan every subset with the asynchronous closure.

    Independent of the production path on both axes: enumeration order
    (plain mask scan, not Gosper) and scheduling (one forcer at a time).
    """
    best = g.n
    for mask in range(1 << g.n):
        if mask.bit_count() < best and closure_async(g, mask, k) == g.full_mask:
            best = mask.bit_count()
    return best


PETERSEN = Graph.from_edges(
    10,
    [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
     (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
     (0, 5), (1, 6), (2, 7), (3, 8), (4, 9)],
)


def test_closure_everything_colored_means_zero_rounds():
    for g in (cycle(6), complete(4), path(3)):
        tr = closure(g, g.full_mask, 2)
        assert tr.rounds == () and tr.final == g.full_mask


def test_closure_stalls_on_regular_graph_single_vertex():
    tr = closure(cycle(6), mask_from([0]), 1)
    assert tr.final == mask_from([0])
    assert tr.rounds == ()


def test_closure_path_end_to_end():
    tr = closure(path(5), mask_from([0]), 1)
    assert tr.final == path(5).full_mask
    assert len(tr.rounds) == 4
    assert tr.newly_forced == (2, 4, 8, 16)


def test_closure_complete_one_round():
    tr = closure(complete(5), mask_from([0, 1]), 3)
    assert tr.final == complete(5).full_mask
    assert len(tr.rounds) == 1


def test_closure_validates_inputs():
    with pytest.raises(ValueError):
        closure(path(3), 0, 0)
    with pytest.raises(GraphError):
        closure(path(3), 1 << 5, 1)


def test_trace_respects_rule(connected_upto_6):
    for g in connected_upto_6:
        dmax = degree_profile(g)[0]
        for k in range(1, dmax + 1):
            for v in range(g.n):
                tr = closure(g, 1 << v, k)
                colored = tr.initial
                seen_new = 0
                for rnd in tr.rounds:
                    new = 0
                    for forcer, forced in rnd:
                        assert colored & (1 << forcer)
                        uncolored = g.adj[forcer] & ~colored
                        assert forced == uncolored
                        assert 1 <= forced.bit_count() <= k
                        new |= forced
                    assert new & seen_new == 0  # forced in at most one round
                    seen_new |= new
                    colored |= new
                assert colored == tr.final
                assert tr.final & tr.initial == tr.initial


def test_is_k_forcing_set_cycle_cases():
    g = cycle(6)
    assert is_k_forcing_set(g, mask_from([0, 1]), 1)
    assert not is_k_forcing_set(g, mask_from([0, 3]), 1)
    assert closure(g, mask_from([0, 3]), 1).final == mask_from([0, 3])
    assert is_k_forcing_set(g, g.full_mask, 1)


def test_complete_graph_closed_form():
    for n in range(2, 9):
        for k in range(1, n + 1):
            assert k_forcing_number(complete(n), k).value == max(n - k, 1)


def test_k33_with_k2():
    assert k_forcing_number(complete_bipartite(3, 3), 2).value == 2


def test_petersen_against_oracle():
    assert forcing_number_oracle(PETERSEN, 1) == 5
    res = k_forcing_number(PETERSEN, 1)
    assert res.value == 5
    assert is_k_forcing_set(PETERSEN, res.witness, 1)


def test_max_degree_and_dichotomy(connected_upto_6):
    for g in connected_upto_6:
        if g.n < 2:
            continue
        dmax = degree_profile(g)[0]
        assert k_forcing_number(g, dmax).value == 1
        if dmax >= 2:
            regular = len({g.degree(v) for v in range(g.n)}) == 1
            assert k_forcing_number(g, dmax - 1).value == (2 if regular else 1)


def test_matches_oracle_on_small_corpus(connected_upto_6):
    for g in connected_upto_6:
        if g.n > 5:
            continue
        dmax = degree_profile(g)[0]
        for k in range(1, dmax + 1):
            assert k_forcing_number(g, k).value == forcing_number_oracle(g, k)


def test_witness_is_colex_first():
    for g in (cycle(6), PETERSEN, complete_bipartite(2, 3)):
        res = k_forcing_number(g, 1)
        better = [
            m
            for m in range(res.witness)
            if m.bit_count() == res.value and is_k_forcing_set(g, m, 1)
        ]
        assert not better


def test_collect_all_minimum():
    res = k_forcing_number(cycle(4), 1, collect_all_minimum=True)
    assert res.value == 2
    # adjacent pairs around the square force; diagonals do not
    assert set(res.all_minimum) == {
        mask_from(p) for p in [(0, 1), (1, 2), (2, 3), (0, 3)]
    }
    assert res.witness == res.all_minimum[0]
    for m in res.all_minimum:
        assert is_k_forcing_set(cycle(4), m, 1)


def test_monotonicity_in_k(connected_upto_6):
    for g in connected_upto_6:
        dmax = degree_profile(g)[0]
        values = [k_forcing_number(g, k).value for k in range(1, dmax + 2)]
        assert all(a >= b for a, b in zip(values, values[1:]))


def test_component_additivity_explicit():
    g = disjoint_union(complete(4), cycle(5), path(3))
    for k in (1, 2):
        parts = sum(
            k_forcing_number(g.induced_subgraph(comp), k).value
            for comp in components(g)
        )
        assert k_forcing_number(g, k).value == parts


def test_lower_bound_min_degree(connected_upto_6):
    for g in connected_upto_6:
        if g.n < 2:
            continue
        dmin = degree_profile(g)[1]
        for k in (1, 2):
            assert k_forcing_number(g, k).value >= dmin - k + 1


def test_f1_equals_n_minus_1_only_for_complete(connected_upto_6):
    for g in connected_upto_6:
        if g.n >= 2 and k_forcing_number(g, 1).value == g.n - 1:
            assert g.m == g.n * (g.n - 1) // 2


def test_superset_closure_monotonicity():
    rng = random.Random(7)
    for _ in range(120):
        g = random_graph(rng.randint(2, 8), rng.choice([0.25, 0.5, 0.75]), rng)
        s = rng.getrandbits(g.n)
        extra = rng.getrandbits(g.n)
        t = s | extra
        for k in (1, 2):
            fs = closure(g, s, k).final
            ft = closure(g, t, k).final
            assert fs & ~ft == 0


def test_confluence_spot_checks():
    for g in (cycle(6), PETERSEN, complete_bipartite(3, 3)):
        for k in (1, 2, 3):
            for v in range(g.n):
                assert closure(g, 1 << v, k).final == closure_async(g, 1 << v, k)


def test_greedy_examples():
    assert greedy_k_forcing_upper(path(4), 1)[0] == 1
    for n in (4, 5, 6):
        for k in range(1, n):
            assert greedy_k_forcing_upper(complete(n), k)[0] == n - k
    for g in (path(5), cycle(7), complete_bipartite(2, 4)):
        dmax = degree_profile(g)[0]
        assert greedy_k_forcing_upper(g, dmax)[0] == 1


def test_greedy_witness_always_verifies(connected_upto_6):
    for g in connected_upto_6:
        dmax = degree_profile(g)[0]
        for k in range(1, dmax + 1):
            value, witness = greedy_k_forcing_upper(g, k)
            assert witness.bit_count() == value
            assert is_k_forcing_set(g, witness, k)
            assert value >= k_forcing_number(g, k).value


def test_spread_examples():
    g = cycle(6)
    assert k_forcing_number(g, 1).value == 2
    assert k_forcing_number(g.delete_edge(0, 1), 1).value == 1
    assert check_spread(g)
    k4 = complete(4)
    assert k_forcing_number(k4.delete_vertex(0), 1).value == 2
    assert check_spread(k4)
    with pytest.raises(GraphError):
        check_spread(complete(1))


def test_min_forcing_connected_complement_examples():
    mask, value = min_forcing_connected_complement(complete(4), 1)
    assert value == 3
    mask, value = min_forcing_connected_complement(cycle(5), 1)
    assert value == 2
    assert vertices_from(mask) == (0, 1)
    g = cycle(5)
    assert g.is_connected_within(g.full_mask & ~mask)
    with pytest.raises(NotKConnectedError):
        min_forcing_connected_complement(path(4), 2)


def min_forcing_cc_oracle(g: Graph, k: int) -> int:
    """Set-based scan over itertools combinations, smallest size first."""
    from itertools import combinations

    adj = {v: set(g.neighbors(v)) for v in range(g.n)}

    def connected(sub):
        sub = set(sub)
        if len(sub) <= 1:
            return True
        seen = {min(sub)}
        frontier = set(seen)
        while frontier:
            frontier = {u for v in frontier for u in adj[v] & sub} - seen
            seen |= frontier
        return seen == sub

    for c in range(1, g.n + 1):
        for combo in combinations(range(g.n), c):
            rest = set(range(g.n)) - set(combo)
            if not connected(rest):
                continue
            if closure_async(g, mask_from(combo), k) == g.full_mask:
                return c
    raise AssertionError("unreachable")


def test_connected_complement_matches_oracle(connected_upto_6):
    from kforcing import vertex_k_connected

    for g in connected_upto_6:
        if g.n > 5:
            continue
        for k in (1, 2):
            if not vertex_k_connected(g, k):
                continue
            _, value = min_forcing_connected_complement(g, k)
            assert value == min_forcing_cc_oracle(g, k)


def test_connected_complement_yields_connected_dominating_set(connected_upto_6):
    from kforcing import vertex_k_connected

    for g in connected_upto_6[:60]:
        for k in (1, 2):
            if not vertex_k_connected(g, k):
                continue
            mask, _ = min_forcing_connected_complement(g, k)
            rest = g.full_mask & ~mask
            assert rest  # the minimum never needs all n vertices
            assert g.is_connected_within(rest)
            outside = vertices_from(g.full_mask & ~rest)
            assert all((g.adj[v] & rest).bit_count() >= k for v in outside)


def test_isolated_vertices_must_be_chosen():
    g = disjoint_union(path(3), Graph(2, (0, 0)))
    res = k_forcing_number(g, 1)
    assert res.value == 3
    assert res.witness & mask_from([3, 4]) == mask_from([3, 4])
