from __future__ import annotations

from random import Random

import pytest

from forcing_lab.constructions import (
    CycleFactorization,
    OneFactor,
    construct_pds_L,
    construct_pds_L2,
    construct_zfs_line,
    cycle_factorization,
    find_disjoint_outneighborhood_set,
    in_degree_one_cycles,
    one_factor,
)
from forcing_lab.corpus import random_digraph_min_degrees, random_regular_digraph
from forcing_lab.digraph import Digraph
from forcing_lab.errors import DomainError, ResourceLimitError
from forcing_lab.families import (
    complete_with_loops,
    complete_without_loops,
    conjunction,
    cycle,
    de_bruijn,
)
from forcing_lab.lines import iterated_line
from forcing_lab.propagation import is_power_dominating_set, is_zero_forcing_set

# out-degree 2 everywhere, but vertices 0 and 1 have in-degree 1 and form
# a 2-cycle, so every 1-factor contains that cycle and none is good
_NO_GOOD_FACTOR = Digraph(
    4,
    [(0, 1), (0, 2), (1, 0), (1, 3), (2, 2), (2, 3), (3, 2), (3, 3)],
)


def test_one_factor_validation():
    g = complete_with_loops(3)
    with pytest.raises(DomainError):
        OneFactor(g, (0, 0, 1))  # not a permutation
    h = cycle(3)
    with pytest.raises(DomainError):
        OneFactor(h, (1, 2, 0))  # arcs (1,0),(2,1),(0,2) missing from C3


def test_one_factor_cycles_and_arcs():
    factor = OneFactor(complete_with_loops(3), (2, 1, 0))
    assert factor.arcs() == frozenset({(2, 0), (1, 1), (0, 2)})
    assert factor.cycles() == [[0, 2], [1]]
    assert factor.is_good()


def test_in_degree_one_cycles():
    assert in_degree_one_cycles(cycle(5)) == [[0, 1, 2, 3, 4]]
    assert in_degree_one_cycles(de_bruijn(2, 2)) == []
    # 0 and 1 form a 2-cycle of in-degree-1 vertices
    assert in_degree_one_cycles(_NO_GOOD_FACTOR) == [[0, 1]]


def test_one_factor_of_cycle_is_the_cycle():
    factor = one_factor(cycle(5))
    assert factor is not None
    assert factor.f == (4, 0, 1, 2, 3)
    assert factor.cycles() == [[0, 1, 2, 3, 4]]


def test_one_factor_frozen_complete_case():
    factor = one_factor(complete_with_loops(3))
    assert factor is not None and factor.f == (2, 1, 0)


def test_one_factor_none_when_no_perfect_matching():
    assert one_factor(Digraph(3, [(0, 1), (1, 2)])) is None


def test_one_factor_good_requirement():
    assert one_factor(cycle(5), require_good=True) is None
    good = one_factor(de_bruijn(2, 2), require_good=True)
    assert good is not None and good.is_good()


def test_one_factor_enumeration_limit():
    # both factors of this digraph are bad, so a limit of 1 gives up early
    with pytest.raises(ResourceLimitError):
        one_factor(_NO_GOOD_FACTOR, require_good=True, enumeration_limit=1)
    assert one_factor(_NO_GOOD_FACTOR, require_good=True) is None


def test_cycle_factorization_frozen_complete_case():
    factorization = cycle_factorization(complete_with_loops(3))
    assert [factor.f for factor in factorization.factors] == [
        (2, 1, 0),
        (0, 2, 1),
        (1, 0, 2),
    ]


def test_cycle_factorization_partitions_arcs():
    g = de_bruijn(2, 3)
    factorization = cycle_factorization(g)
    assert len(factorization.factors) == 2
    covered: set[tuple[int, int]] = set()
    for factor in factorization.factors:
        arcs = factor.arcs()
        assert not (covered & arcs)
        covered |= arcs
    assert covered == g.arcs


def test_cycle_factorization_of_cycle():
    factorization = cycle_factorization(cycle(4))
    assert len(factorization.factors) == 1


def test_cycle_factorization_rejects_irregular():
    with pytest.raises(DomainError):
        cycle_factorization(Digraph(3, [(0, 1), (1, 2)]))


def test_factorization_record_validation():
    g = complete_with_loops(2)
    factor = OneFactor(g, (0, 1))
    with pytest.raises(DomainError):
        CycleFactorization(g, (factor,))  # one factor cannot cover degree 2


def test_construct_zfs_line_frozen_case():
    witness = construct_zfs_line(complete_with_loops(3))
    assert len(witness.vertices) == 6
    assert witness.labels() == ["0-1", "0-2", "1-1", "1-2", "2-1", "2-2"]
    assert witness.trace.covers_all


def test_construct_zfs_line_on_loop_free_complete():
    witness = construct_zfs_line(complete_without_loops(3))
    assert len(witness.vertices) == 3
    assert is_zero_forcing_set(witness.line.graph, witness.vertices)


def test_construct_zfs_line_random_corpus():
    rng = Random(71)
    for _ in range(20):
        g = random_digraph_min_degrees(rng, 5, min_out=2, min_in=1)
        witness = construct_zfs_line(g)
        assert len(witness.vertices) == g.arc_count - g.n
        assert is_zero_forcing_set(witness.line.graph, witness.vertices)


def test_construct_zfs_line_degree_preconditions():
    with pytest.raises(DomainError):
        construct_zfs_line(cycle(5))  # out-degree 1
    source = Digraph(
        4, [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1), (3, 0), (3, 1)]
    )
    with pytest.raises(DomainError):
        construct_zfs_line(source)  # vertex 3 has in-degree 0


def test_construct_pds_l2_sizes():
    assert len(construct_pds_L2(complete_without_loops(4)).vertices) == 8
    assert len(construct_pds_L2(complete_with_loops(3)).vertices) == 6


def test_construct_pds_l2_witness_dominates_square_iterate():
    g = de_bruijn(2, 2)
    witness = construct_pds_L2(g)
    assert len(witness.vertices) == g.arc_count - g.n
    square = iterated_line(g, 2).graph
    assert witness.line.graph == square
    assert is_power_dominating_set(square, witness.vertices)


def test_construct_pds_l2_accepts_explicit_factor():
    g = de_bruijn(2, 2)
    factor = one_factor(g, require_good=True)
    assert factor is not None
    witness = construct_pds_L2(g, factor)
    assert is_power_dominating_set(witness.line.graph, witness.vertices)


def test_construct_pds_l2_rejects_foreign_factor():
    factor = one_factor(complete_with_loops(3))
    with pytest.raises(DomainError):
        construct_pds_L2(de_bruijn(2, 2), factor)


def test_construct_pds_l2_needs_a_good_factor():
    with pytest.raises(DomainError):
        construct_pds_L2(_NO_GOOD_FACTOR)


def test_find_disjoint_outneighborhood_set():
    assert find_disjoint_outneighborhood_set(de_bruijn(2, 2), 2) == frozenset({0, 3})
    assert find_disjoint_outneighborhood_set(complete_with_loops(3), 1) == frozenset(
        {0}
    )
    base = conjunction(complete_with_loops(2), cycle(2))
    assert find_disjoint_outneighborhood_set(base, 2) is None


def test_find_disjoint_outneighborhood_set_preconditions():
    with pytest.raises(DomainError):
        find_disjoint_outneighborhood_set(cycle(4), 1)
    with pytest.raises(DomainError):
        find_disjoint_outneighborhood_set(de_bruijn(2, 2), 0)


def test_construct_pds_l_frozen_cases():
    witness = construct_pds_L(complete_with_loops(3), {0})
    assert len(witness.vertices) == 2
    assert is_power_dominating_set(witness.line.graph, witness.vertices)
    witness = construct_pds_L(de_bruijn(2, 2), {0, 3})
    assert len(witness.vertices) == 2
    assert is_power_dominating_set(witness.line.graph, witness.vertices)


def test_construct_pds_l_rejects_bad_set():
    with pytest.raises(DomainError):
        construct_pds_L(de_bruijn(2, 2), {0, 1})


def test_construct_pds_l_random_regular():
    rng = Random(92)
    found = 0
    for _ in range(10):
        g = random_regular_digraph(rng, 5, 2)
        s = find_disjoint_outneighborhood_set(g, 2)
        if s is None:
            continue
        witness = construct_pds_L(g, s)
        assert len(witness.vertices) == g.n - len(s)
        assert is_power_dominating_set(witness.line.graph, witness.vertices)
        found += 1
    assert found > 0


def test_line_witness_json_shape():
    doc = construct_zfs_line(complete_with_loops(3)).to_json_dict()
    assert doc["line_order"] == 9
    assert doc["size"] == 6
    assert doc["witness"] == sorted(doc["witness"])
    assert len(doc["witness_labels"]) == 6
