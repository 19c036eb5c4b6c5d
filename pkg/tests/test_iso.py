from __future__ import annotations

from random import Random

from hypothesis import given, settings
from hypothesis import strategies as st

from forcing_lab.digraph import Digraph
from forcing_lab.families import cycle, de_bruijn, kautz
from forcing_lab.iso import are_isomorphic
from forcing_lab.lines import line_digraph


def _apply(g: Digraph, phi: list[int]) -> Digraph:
    return Digraph(g.n, [(phi[u], phi[v]) for u, v in g.arcs])


def _is_valid_mapping(g: Digraph, h: Digraph, phi: tuple[int, ...]) -> bool:
    if sorted(phi) != list(range(g.n)):
        return False
    return {(phi[u], phi[v]) for u, v in g.arcs} == h.arcs


def _random_digraphs() -> st.SearchStrategy[Digraph]:
    def build(n: int, picks: list[bool]) -> Digraph:
        pairs = [(u, v) for u in range(n) for v in range(n)]
        arcs = [pair for pair, keep in zip(pairs, picks) if keep]
        return Digraph(n, arcs)

    return st.integers(min_value=1, max_value=6).flatmap(
        lambda n: st.builds(
            build,
            st.just(n),
            st.lists(st.booleans(), min_size=n * n, max_size=n * n),
        )
    )


def test_identity_mapping_is_lex_least():
    g = cycle(5)
    assert are_isomorphic(g, g) == (0, 1, 2, 3, 4)


def test_relabelled_digraph_recovered():
    rng = Random(7)
    g = de_bruijn(2, 3)
    for _ in range(10):
        phi = list(range(g.n))
        rng.shuffle(phi)
        h = _apply(g, phi)
        found = are_isomorphic(g, h)
        assert found is not None
        assert _is_valid_mapping(g, h, found)


def test_order_mismatch():
    assert are_isomorphic(cycle(3), cycle(4)) is None


def test_arc_count_mismatch():
    assert are_isomorphic(Digraph(3, [(0, 1)]), Digraph(3, [(0, 1), (1, 2)])) is None


def test_same_degrees_not_isomorphic():
    # C6 versus two triangles: both 1-regular
    c6 = cycle(6)
    two_triangles = Digraph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    assert are_isomorphic(c6, two_triangles) is None


def test_loop_moves_with_the_mapping():
    a = Digraph(2, [(0, 0), (0, 1)])
    b = Digraph(2, [(1, 0), (1, 1)])
    assert are_isomorphic(a, b) == (1, 0)
    # same degree sequences up to order, but the loop sits elsewhere
    c = Digraph(2, [(0, 1), (1, 1)])
    assert are_isomorphic(a, c) is None


def test_line_digraph_iso_de_bruijn():
    found = are_isomorphic(line_digraph(de_bruijn(2, 2)).graph, de_bruijn(2, 3))
    assert found is not None


def test_medium_kautz_instance():
    g = kautz(3, 3)
    h = _apply(g, [(7 * v + 3) % g.n for v in range(g.n)])
    found = are_isomorphic(g, h)
    assert found is not None
    assert _is_valid_mapping(g, h, found)


@settings(max_examples=40, deadline=None)
@given(_random_digraphs(), st.randoms(use_true_random=False))
def test_random_relabelling_found(g: Digraph, rng):
    phi = list(range(g.n))
    rng.shuffle(phi)
    h = _apply(g, phi)
    found = are_isomorphic(g, h)
    assert found is not None
    assert _is_valid_mapping(g, h, found)


@settings(max_examples=40, deadline=None)
@given(_random_digraphs())
def test_arc_flip_breaks_isomorphism_or_not_reported_wrongly(g: Digraph):
    # removing one arc from a digraph with arcs can never stay isomorphic
    if g.arc_count == 0:
        return
    arc = min(g.arcs)
    h = Digraph(g.n, g.arcs - {arc})
    assert are_isomorphic(g, h) is None
