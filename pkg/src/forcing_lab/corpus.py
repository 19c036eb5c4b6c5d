"""Digraph corpora for verification: seeded random generators and
exhaustive enumeration of small regular digraphs.

Everything here is deterministic given the caller-supplied
``random.Random`` instance or explicit parameters, so verification suites
produce identical corpora on every run.
"""

from __future__ import annotations

import itertools
from random import Random
from typing import Iterator

from .digraph import Digraph
from .errors import DomainError
from .iso import are_isomorphic


def random_digraph(
    rng: Random,
    n: int,
    *,
    arc_probability: float = 0.3,
    loop_probability: float = 0.15,
) -> Digraph:
    """An unconstrained random digraph; every ordered pair tossed once."""
    arcs = []
    for u in range(n):
        for v in range(n):
            p = loop_probability if u == v else arc_probability
            if rng.random() < p:
                arcs.append((u, v))
    return Digraph(n, arcs)


def random_digraph_min_degrees(
    rng: Random,
    n: int,
    *,
    min_out: int = 2,
    min_in: int = 1,
    extra_arcs: int = 0,
    allow_loops: bool = True,
    require_weakly_connected: bool = True,
    max_attempts: int = 200,
) -> Digraph:
    """A sparse random digraph with the given minimum degrees.

    Each vertex first receives ``min_out`` random out-arcs; vertices short
    of ``min_in`` in-arcs then receive patch arcs, and ``extra_arcs``
    further random arcs are sprinkled on top.  Weak connectivity is
    enforced by resampling.
    """
    if min_out > (n if allow_loops else n - 1):
        raise DomainError("min_out larger than the number of available heads")
    for _ in range(max_attempts):
        arcs: set[tuple[int, int]] = set()
        for u in range(n):
            heads = [v for v in range(n) if allow_loops or v != u]
            for v in rng.sample(heads, min_out):
                arcs.add((u, v))
        in_degree = [0] * n
        for _, v in arcs:
            in_degree[v] += 1
        for v in range(n):
            while in_degree[v] < min_in:
                tails = [
                    u
                    for u in range(n)
                    if (u, v) not in arcs and (allow_loops or u != v)
                ]
                if not tails:
                    break
                arcs.add((rng.choice(tails), v))
                in_degree[v] += 1
        missing = [
            (u, v)
            for u in range(n)
            for v in range(n)
            if (u, v) not in arcs and (allow_loops or u != v)
        ]
        for arc in rng.sample(missing, min(extra_arcs, len(missing))):
            arcs.add(arc)
        g = Digraph(n, arcs)
        if not require_weakly_connected or g.is_weakly_connected():
            return g
    raise DomainError(
        f"could not sample a weakly connected digraph in {max_attempts} tries"
    )


def random_regular_digraph(
    rng: Random, n: int, d: int, *, max_attempts: int = 5000
) -> Digraph:
    """A random ``d``-regular digraph as a union of ``d`` disjoint
    permutation factors (loops permitted)."""
    if d > n:
        raise DomainError(f"no {d}-regular digraph on {n} vertices")
    for _ in range(max_attempts):
        perms = [rng.sample(range(n), n) for _ in range(d)]
        if all(len({p[i] for p in perms}) == d for i in range(n)):
            arcs = {(i, p[i]) for p in perms for i in range(n)}
            return Digraph(n, arcs)
    raise DomainError(
        f"could not sample a {d}-regular digraph on {n} vertices "
        f"in {max_attempts} tries"
    )


def all_regular_digraphs(n: int, d: int) -> Iterator[Digraph]:
    """Every ``d``-regular digraph on ``n`` labeled vertices, loops
    permitted, in lexicographic order of adjacency rows."""
    if d > n:
        return
    rows = list(itertools.combinations(range(n), d))

    def extend(
        chosen: list[tuple[int, ...]], in_degree: list[int]
    ) -> Iterator[Digraph]:
        u = len(chosen)
        remaining = n - u
        if u == n:
            yield Digraph(
                n, [(i, v) for i, row in enumerate(chosen) for v in row]
            )
            return
        for row in rows:
            updated = list(in_degree)
            feasible = True
            for v in row:
                updated[v] += 1
                if updated[v] > d:
                    feasible = False
                    break
            if not feasible:
                continue
            # Every vertex must still be able to reach in-degree d.
            if any(d - cnt > remaining - 1 for cnt in updated):
                continue
            chosen.append(row)
            yield from extend(chosen, updated)
            chosen.pop()

    yield from extend([], [0] * n)


def regular_digraphs_up_to_iso(
    n: int, d: int, *, weakly_connected_only: bool = True
) -> list[Digraph]:
    """Representatives of the isomorphism classes of ``d``-regular
    digraphs on ``n`` vertices."""
    representatives: list[Digraph] = []
    for g in all_regular_digraphs(n, d):
        if weakly_connected_only and not g.is_weakly_connected():
            continue
        if any(are_isomorphic(g, h) is not None for h in representatives):
            continue
        representatives.append(g)
    return representatives
