"""Constructive witnesses: zero forcing sets of line digraphs, 1-factors
and cycle factorizations, and power dominating sets of line iterates.

Each construction follows a constructive existence proof and then verifies
its own output with the propagation engine before returning it.  A failed
verification raises ``AssertionError``: under the documented hypotheses
the constructions are proven to work, so a failure is an internal bug,
never a property of the input.  Hypothesis violations raise
:class:`DomainError` instead.

All tie-breaks (choice of excluded out-neighbor, choice of in-neighbor,
matching augmentation order, factor enumeration order) resolve to the
least vertex id, making every witness reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

from .digraph import Digraph, check_vertex_set
from .errors import DomainError, ResourceLimitError
from .lines import LineLabeledDigraph, iterated_line, line_digraph
from .propagation import PropagationTrace, pd_closure, zf_closure


@dataclass(frozen=True)
class OneFactor:
    """A spanning 1-regular sub-digraph, stored as the permutation ``f``
    with ``f[v]`` the factor in-neighbor of ``v`` (so the factor arcs are
    exactly ``(f[v], v)``)."""

    host: Digraph
    f: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.f) != self.host.n:
            raise DomainError("factor permutation length must equal the order")
        if sorted(self.f) != list(range(self.host.n)):
            raise DomainError("factor map is not a permutation")
        for v, u in enumerate(self.f):
            if (u, v) not in self.host.arcs:
                raise DomainError(f"factor arc ({u}, {v}) is not a host arc")

    def arcs(self) -> frozenset[tuple[int, int]]:
        return frozenset((u, v) for v, u in enumerate(self.f))

    def cycles(self) -> list[list[int]]:
        """Factor cycles in arc order, each starting at its least vertex,
        listed by least vertex ascending."""
        successor = [0] * self.host.n
        for v, u in enumerate(self.f):
            successor[u] = v
        seen = [False] * self.host.n
        cycles = []
        for start in range(self.host.n):
            if seen[start]:
                continue
            cycle = []
            v = start
            while not seen[v]:
                seen[v] = True
                cycle.append(v)
                v = successor[v]
            cycles.append(cycle)
        return cycles

    def is_good(self) -> bool:
        """Every factor cycle contains a vertex of host in-degree > 1."""
        return all(
            any(self.host.in_degree(v) > 1 for v in cycle)
            for cycle in self.cycles()
        )


@dataclass(frozen=True)
class CycleFactorization:
    """A partition of the arcs of a ``d``-regular digraph into ``d`` factors."""

    host: Digraph
    factors: tuple[OneFactor, ...]

    def __post_init__(self) -> None:
        d = self.host.is_regular()
        if d is None:
            raise DomainError("cycle factorization requires a regular digraph")
        if len(self.factors) != d:
            raise DomainError(f"expected {d} factors, got {len(self.factors)}")
        covered: set[tuple[int, int]] = set()
        for factor in self.factors:
            if factor.host != self.host:
                raise DomainError("factor belongs to a different digraph")
            arcs = factor.arcs()
            if covered & arcs:
                raise DomainError("factor arc sets are not disjoint")
            covered |= arcs
        if covered != self.host.arcs:
            raise DomainError("factors do not cover every arc")


def in_degree_one_cycles(g: Digraph) -> list[list[int]]:
    """All cycles whose every vertex has in-degree exactly 1.

    Within ``{v : d^-(v) = 1}`` each vertex has a unique in-arc, so these
    cycles are the cycles of a partial function and are pairwise disjoint.
    Each cycle is returned in arc order starting at its least vertex.
    """
    eligible = {v for v in range(g.n) if g.in_degree(v) == 1}
    predecessor = {v: next(iter(g.in_neighborhood(v))) for v in eligible}
    state = {v: 0 for v in eligible}  # 0 unvisited, 1 in progress, 2 done
    cycles = []
    for start in sorted(eligible):
        if state[start]:
            continue
        path = []
        v = start
        while v in eligible and state[v] == 0:
            state[v] = 1
            path.append(v)
            v = predecessor[v]
        if v in eligible and state[v] == 1:
            # Walked back onto the current chain: the tail from v is a cycle.
            cycle = path[path.index(v) :]
            cycle.reverse()  # predecessor order reversed = arc order
            least = cycle.index(min(cycle))
            cycles.append(cycle[least:] + cycle[:least])
        for w in path:
            state[w] = 2
    cycles.sort(key=lambda c: c[0])
    seen: set[int] = set()
    for cycle in cycles:
        for v in cycle:
            if v in seen:
                raise AssertionError("vertex on two in-degree-one cycles")
            seen.add(v)
    return cycles


def _perfect_matching(g: Digraph) -> list[int] | None:
    """Augmenting-path perfect matching tails -> heads; ``result[v]`` is the
    tail matched to head ``v``.  Deterministic: least ids first."""
    match_head = [-1] * g.n
    neighbors = [sorted(g.out_neighborhood(u)) for u in range(g.n)]

    def augment(u: int, visited: set[int]) -> bool:
        for v in neighbors[u]:
            if v in visited:
                continue
            visited.add(v)
            if match_head[v] == -1 or augment(match_head[v], visited):
                match_head[v] = u
                return True
        return False

    for u in range(g.n):
        if not augment(u, set()):
            return None
    return match_head


def _all_factor_maps(g: Digraph) -> Iterator[list[int]]:
    """Every perfect matching as an ``f`` array, in lexicographic order of
    the tail -> head assignment."""
    neighbors = [sorted(g.out_neighborhood(u)) for u in range(g.n)]
    match_head = [-1] * g.n

    def rec(u: int) -> Iterator[list[int]]:
        if u == g.n:
            yield list(match_head)
            return
        for v in neighbors[u]:
            if match_head[v] == -1:
                match_head[v] = u
                yield from rec(u + 1)
                match_head[v] = -1

    return rec(0)


def one_factor(
    g: Digraph, *, require_good: bool = False, enumeration_limit: int = 10
) -> OneFactor | None:
    """A 1-factor of ``g``, or None when none exists.

    With ``require_good`` the factor must have a vertex of in-degree > 1 on
    every cycle.  When the minimum in-degree is at least 2 any factor
    qualifies; otherwise, if the first factor fails, all factors are
    enumerated, which is only attempted up to ``enumeration_limit``
    vertices (beyond that the answer is unknown and a
    :class:`ResourceLimitError` is raised rather than guessing).
    """
    match = _perfect_matching(g)
    if match is None:
        return None
    factor = OneFactor(host=g, f=tuple(match))
    if not require_good:
        return factor
    if g.degrees().min_in >= 2 or factor.is_good():
        return factor
    if g.n > enumeration_limit:
        raise ResourceLimitError(
            f"good-factor search by enumeration is limited to "
            f"{enumeration_limit} vertices (got {g.n})"
        )
    for f in _all_factor_maps(g):
        candidate = OneFactor(host=g, f=tuple(f))
        if candidate.is_good():
            return candidate
    return None


def cycle_factorization(g: Digraph) -> CycleFactorization:
    """Partition the arcs of a ``d``-regular digraph into ``d`` 1-factors.

    Each factor is a perfect matching of the remaining arcs; deleting it
    leaves a regular digraph of one smaller degree, so the next matching
    always exists.
    """
    d = g.is_regular()
    if d is None:
        raise DomainError("cycle factorization requires a regular digraph")
    factors = []
    remaining = g
    for _ in range(d):
        match = _perfect_matching(remaining)
        if match is None:
            raise AssertionError("regular digraph lost its perfect matching")
        factor = OneFactor(host=g, f=tuple(match))
        factors.append(factor)
        remaining = Digraph(g.n, remaining.arcs - factor.arcs())
    return CycleFactorization(host=g, factors=tuple(factors))


@dataclass(frozen=True)
class LineWitness:
    """A vertex set over a line iterate, plus the verifying trace."""

    line: LineLabeledDigraph
    vertices: frozenset[int]
    trace: PropagationTrace

    def labels(self) -> list[str]:
        strings = self.line.label_strings()
        return [strings[v] for v in sorted(self.vertices)]

    def to_json_dict(self) -> dict[str, object]:
        return {
            "line_order": self.line.graph.n,
            "size": len(self.vertices),
            "witness": sorted(self.vertices),
            "witness_labels": self.labels(),
            "mode": self.trace.mode,
        }


def _require_degrees(g: Digraph, min_out: int, min_in: int) -> None:
    deg = g.degrees()
    if deg.min_out < min_out:
        raise DomainError(
            f"minimum out-degree {deg.min_out} below required {min_out}"
        )
    if deg.min_in < min_in:
        raise DomainError(
            f"minimum in-degree {deg.min_in} below required {min_in}"
        )


def construct_zfs_line(g: Digraph) -> LineWitness:
    """A minimum zero forcing set of ``L(g)`` of size ``|A(g)| - |V(g)|``.

    Requires minimum out-degree 2 and minimum in-degree 1.  For each base
    vertex ``v`` one out-arc is spared: the least out-neighbor that does
    not lie on a cycle made up entirely of in-degree-one vertices (at most
    one out-neighbor can lie on such a cycle, so a spare always exists).
    All remaining arcs of ``v`` join the set.
    """
    _require_degrees(g, 2, 1)
    on_bad_cycle = {v for cycle in in_degree_one_cycles(g) for v in cycle}
    labeled = line_digraph(g)
    arc_index = {arc: i for i, arc in enumerate(g.arcs_sorted)}
    chosen: set[int] = set()
    for v in range(g.n):
        eligible = sorted(g.out_neighborhood(v) - on_bad_cycle)
        if not eligible:
            raise AssertionError(
                f"vertex {v} has every out-neighbor on an in-degree-one cycle"
            )
        spared = eligible[0]
        for w in g.out_neighborhood(v):
            if w != spared:
                chosen.add(arc_index[(v, w)])
    if len(chosen) != g.arc_count - g.n:
        raise AssertionError("zero forcing witness has the wrong size")
    trace = zf_closure(labeled.graph, chosen)
    if not trace.covers_all:
        raise AssertionError("constructed set failed zero forcing verification")
    return LineWitness(line=labeled, vertices=frozenset(chosen), trace=trace)


def construct_pds_L2(g: Digraph, factor: OneFactor | None = None) -> LineWitness:
    """A power dominating set of ``L^2(g)`` of size ``|A(g)| - |V(g)|``.

    Requires minimum out-degree 2 and minimum in-degree 1, plus a 1-factor
    ``f`` whose every cycle has a vertex of in-degree > 1 (found
    automatically when not supplied).  The set consists of the walks
    ``f(u) -> u -> v`` over all arcs ``(u, v)`` with ``u != f(v)``.
    """
    _require_degrees(g, 2, 1)
    if factor is None:
        factor = one_factor(g, require_good=True)
        if factor is None:
            raise DomainError("digraph has no suitable 1-factor")
    else:
        if factor.host != g:
            raise DomainError("factor belongs to a different digraph")
        if not factor.is_good():
            raise DomainError(
                "factor has a cycle made up entirely of in-degree-one vertices"
            )
    labeled = iterated_line(g, 2)
    walk_index = {walk: i for i, walk in enumerate(labeled.labels)}
    f = factor.f
    chosen = {
        walk_index[(f[u], u, v)] for u, v in g.arcs if u != f[v]
    }
    expected = sum(g.in_degree(v) - 1 for v in range(g.n))
    if len(chosen) != expected or expected != g.arc_count - g.n:
        raise AssertionError("power domination witness has the wrong size")
    trace = pd_closure(labeled.graph, chosen)
    if not trace.covers_all:
        raise AssertionError("constructed set failed power domination verification")
    return LineWitness(line=labeled, vertices=frozenset(chosen), trace=trace)


def _condition_failure(g: Digraph, s: frozenset[int]) -> str | None:
    """Why ``s`` fails the disjoint-out-neighborhood conditions, or None."""
    members = sorted(s)
    for x, y in itertools.combinations(members, 2):
        if g.out_neighborhood(x) & g.out_neighborhood(y):
            return f"vertices {x} and {y} have intersecting out-neighborhoods"
    for x in members:
        extra = (g.out_neighborhood(x) & s) - {x}
        if extra:
            return (
                f"out-neighborhood of {x} meets the set at "
                f"{sorted(extra)} rather than only itself"
            )
    return None


def find_disjoint_outneighborhood_set(
    g: Digraph, target: int
) -> frozenset[int] | None:
    """A ``target``-sized set with pairwise disjoint out-neighborhoods, each
    meeting the set in nothing or only its own vertex; None if impossible.

    Requires minimum out- and in-degree 2.  The search backtracks over
    vertices in ascending order, so a found set is lexicographically least.
    """
    _require_degrees(g, 2, 2)
    if isinstance(target, bool) or not isinstance(target, int) or target < 1:
        raise DomainError(f"target size must be a positive int, got {target!r}")
    chosen: list[int] = []

    def extend(start: int, blocked: frozenset[int]) -> bool:
        if len(chosen) == target:
            return True
        for v in range(start, g.n):
            neighborhood = g.out_neighborhood(v)
            if blocked & neighborhood:
                continue
            if any(v in g.out_neighborhood(x) for x in chosen):
                continue
            if (neighborhood & frozenset(chosen)):
                continue
            chosen.append(v)
            if extend(v + 1, blocked | neighborhood):
                return True
            chosen.pop()
        return False

    if extend(0, frozenset()):
        return frozenset(chosen)
    return None


def construct_pds_L(g: Digraph, s: Iterable[int]) -> LineWitness:
    """A power dominating set of ``L(g)`` of size ``|V(g)| - |s|``.

    ``s`` must satisfy the disjoint-out-neighborhood conditions checked by
    :func:`find_disjoint_outneighborhood_set` (violations raise
    :class:`DomainError`).  Every vertex covered by ``s`` then has exactly
    one in-neighbor inside ``s``; each vertex ``v`` outside ``s`` is paired
    with that unique in-neighbor when covered, else with its least
    in-neighbor, and the paired arcs form the returned set.
    """
    _require_degrees(g, 2, 2)
    chosen_s = check_vertex_set(g, s)
    if not chosen_s:
        raise DomainError("the disjoint-out-neighborhood set must be non-empty")
    reason = _condition_failure(g, chosen_s)
    if reason is not None:
        raise DomainError(f"set fails the out-neighborhood conditions: {reason}")
    covered = frozenset().union(*(g.out_neighborhood(x) for x in chosen_s))
    for v in covered:
        owners = [x for x in chosen_s if v in g.out_neighborhood(x)]
        if len(owners) != 1:
            raise AssertionError(
                f"vertex {v} has {len(owners)} in-neighbors in the set"
            )
    labeled = line_digraph(g)
    arc_index = {arc: i for i, arc in enumerate(g.arcs_sorted)}
    chosen: set[int] = set()
    for v in range(g.n):
        if v in chosen_s:
            continue
        if v in covered:
            tail = next(x for x in chosen_s if v in g.out_neighborhood(x))
        else:
            tail = min(g.in_neighborhood(v))
        chosen.add(arc_index[(tail, v)])
    if len(chosen) != g.n - len(chosen_s):
        raise AssertionError("power domination witness has the wrong size")
    trace = pd_closure(labeled.graph, chosen)
    if not trace.covers_all:
        raise AssertionError("constructed set failed power domination verification")
    return LineWitness(line=labeled, vertices=frozenset(chosen), trace=trace)
