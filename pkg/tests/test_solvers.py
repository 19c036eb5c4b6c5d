from __future__ import annotations

import itertools
from random import Random

import pytest

from forcing_lab.digraph import Digraph
from forcing_lab.errors import ResourceLimitError
from forcing_lab.corpus import random_digraph
from forcing_lab.families import cycle, de_bruijn
from forcing_lab.solvers import (
    SearchLimits,
    min_power_dominating,
    min_zero_forcing,
)


def _naive_zf_final(g: Digraph, start: set[int]) -> set[int]:
    colored = set(start)
    loop_rule = g.has_loops
    while True:
        new = set()
        for u in range(g.n):
            if not loop_rule and u not in colored:
                continue
            uncolored = [w for w in g.out_neighborhood(u) if w not in colored]
            if len(uncolored) == 1:
                new.add(uncolored[0])
        if new <= colored:
            return colored
        colored |= new


def _naive_pd_final(g: Digraph, start: set[int]) -> set[int]:
    dominated = set(start)
    for s in start:
        dominated |= g.out_neighborhood(s)
    return _naive_zf_final(g, dominated) | set(start)


def _naive_minimum(g: Digraph, final) -> tuple[int, frozenset[int]]:
    everything = set(range(g.n))
    for size in range(1, g.n + 1):
        for combo in itertools.combinations(range(g.n), size):
            if final(g, set(combo)) == everything:
                return size, frozenset(combo)
    raise AssertionError("the full vertex set always works")


def test_frozen_de_bruijn_values_and_witnesses():
    g = de_bruijn(2, 2)
    zf = min_zero_forcing(g)
    assert (zf.number, sorted(zf.witness)) == (2, [0, 2])
    pd = min_power_dominating(g)
    assert (pd.number, sorted(pd.witness)) == (1, [1])

    h = de_bruijn(2, 3)
    assert sorted(min_zero_forcing(h).witness) == [0, 2, 4, 6]
    assert sorted(min_power_dominating(h).witness) == [1, 6]

    assert min_zero_forcing(de_bruijn(3, 2)).number == 6
    assert min_power_dominating(de_bruijn(3, 2)).number == 2


def test_cycle_needs_one_seed():
    result = min_zero_forcing(cycle(7))
    assert (result.number, sorted(result.witness)) == (1, [0])


def test_star_is_power_dominated_by_center():
    star = Digraph(4, [(0, 1), (0, 2), (0, 3)])
    result = min_power_dominating(star)
    assert (result.number, sorted(result.witness)) == (1, [0])
    assert min_zero_forcing(star).number == 3


def test_solver_matches_naive_oracle():
    rng = Random(60223)
    for i in range(30):
        g = random_digraph(
            rng,
            rng.randrange(1, 6),
            arc_probability=0.4,
            loop_probability=0.25 if i % 2 else 0.0,
        )
        expected = _naive_minimum(g, _naive_zf_final)
        got = min_zero_forcing(g)
        assert (got.number, got.witness) == expected
        expected = _naive_minimum(g, _naive_pd_final)
        got = min_power_dominating(g)
        assert (got.number, got.witness) == expected


def _disjoint_union(g: Digraph, h: Digraph) -> Digraph:
    arcs = list(g.arcs) + [(u + g.n, v + g.n) for u, v in h.arcs]
    return Digraph(g.n + h.n, arcs)


def test_additivity_over_weak_components_loop_free():
    rng = Random(31415)
    for _ in range(10):
        g = random_digraph(
            rng, rng.randrange(1, 5), arc_probability=0.4, loop_probability=0.0
        )
        h = random_digraph(
            rng, rng.randrange(1, 5), arc_probability=0.4, loop_probability=0.0
        )
        union = _disjoint_union(g, h)
        assert (
            min_zero_forcing(union).number
            == min_zero_forcing(g).number + min_zero_forcing(h).number
        )


def test_additivity_with_loops_when_components_need_seeds():
    # under the loop rule additivity needs every component to be unable
    # to close from nothing; de Bruijn digraphs qualify
    g = de_bruijn(2, 2)
    union = _disjoint_union(g, g)
    assert min_zero_forcing(union).number == 4
    assert min_power_dominating(union).number == 2


def test_loop_rule_can_defeat_additivity_of_the_nonempty_convention():
    # a single looped vertex closes from the empty set, so two copies
    # share one seed; this is why the guard in the previous test exists
    loop = Digraph(1, [(0, 0)])
    union = _disjoint_union(loop, loop)
    assert min_zero_forcing(union).number == 1


def test_wrapped_butterfly_power_domination_degree_three():
    # the claimed closed form 2(d-1) also matches brute force at d = 3
    from forcing_lab.families import wrapped_butterfly

    assert min_power_dominating(wrapped_butterfly(3, 2)).number == 4


def test_certified_lower_bound_skips_small_sizes():
    g = de_bruijn(2, 3)
    free = min_zero_forcing(g)
    bounded = min_zero_forcing(g, lower_bound=4)
    assert bounded.number == free.number == 4
    assert bounded.witness == free.witness
    assert bounded.subsets_tested < free.subsets_tested


def test_seeded_critical_bound_preserves_answers():
    rng = Random(5150)
    for i in range(12):
        g = random_digraph(
            rng,
            rng.randrange(2, 6),
            arc_probability=0.45,
            loop_probability=0.3 if i % 3 == 0 else 0.0,
        )
        plain = min_zero_forcing(g)
        seeded = min_zero_forcing(g, seed_critical=True)
        assert (plain.number, plain.witness) == (seeded.number, seeded.witness)


def test_known_zero_forcing_prunes_power_domination():
    g = de_bruijn(3, 2)
    plain = min_power_dominating(g)
    primed = min_power_dominating(g, known_zero_forcing=6)
    sharp = min_power_dominating(g, known_zero_forcing=6, line_digraph_bound=True)
    assert plain.number == primed.number == sharp.number == 2
    assert plain.witness == primed.witness == sharp.witness
    assert sharp.subsets_tested <= primed.subsets_tested <= plain.subsets_tested


def test_order_limit():
    with pytest.raises(ResourceLimitError):
        min_zero_forcing(de_bruijn(2, 3), limits=SearchLimits(max_n=4))


def test_subset_budget():
    with pytest.raises(ResourceLimitError):
        min_zero_forcing(de_bruijn(2, 3), limits=SearchLimits(max_subsets=3))


def test_wall_clock_budget():
    # the clock is polled every 2048 subsets, so the instance must be
    # large enough for the scan to reach that count
    from forcing_lab.families import wrapped_butterfly

    with pytest.raises(ResourceLimitError):
        min_zero_forcing(
            wrapped_butterfly(3, 2), limits=SearchLimits(max_seconds=0.0)
        )


def test_budgets_do_not_truncate_answers_silently():
    # a budget generous enough to finish returns the exact optimum
    g = de_bruijn(2, 2)
    result = min_zero_forcing(g, limits=SearchLimits(max_subsets=100))
    assert result.number == 2
