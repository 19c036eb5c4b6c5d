"""Round-based zero-forcing and power-domination closures.

Both processes color vertices in synchronous rounds.  Zero forcing starts
from a non-empty set ``S`` and repeatedly applies the forcing rule: a
vertex ``u`` whose out-neighborhood contains exactly one uncolored vertex
``v`` forces ``v``.  Which vertices may act as forcers is a global property
of the digraph: with no loops anywhere the forcer must itself be colored
already; as soon as the digraph has at least one loop, any vertex may
force, so a white looped vertex whose other out-neighbors are colored
forces itself.

Power domination prepends a single domination round: round 1 colors the
closed out-neighborhood of ``S``, and every later round applies the
zero-forcing rule above.

Traces record the newly colored set of each round plus a certificate entry
``(forcer, forced, round)`` per colored vertex, with the least-id eligible
forcer chosen for determinism.

A starting set must be non-empty.  (With the loop rule even the empty set
can propagate, e.g. on a single looped vertex, but the definitions demand
non-empty sets, which pins the forcing numbers at 1 or more.  The
``allow_empty`` escape hatch exists for experimentation only; the solvers
never use it.)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .digraph import Digraph, check_vertex_set
from .errors import DomainError

MODE_ZERO_FORCING = "zero-forcing"
MODE_POWER_DOMINATION = "power-domination"


@dataclass(frozen=True)
class PropagationTrace:
    """The full history of one closure computation.

    ``rounds[i]`` is the set newly colored in round ``i + 1``; rounds are
    pairwise disjoint and disjoint from ``initial``, and ``final`` is their
    union with ``initial``.  Certificate entries are ``(u, v, r)``: in
    round ``r`` vertex ``u`` forced ``v`` (for a power-domination trace,
    round-1 entries mean ``v`` lies in the closed out-neighborhood of the
    starting set, witnessed by ``u``).
    """

    mode: str
    initial: frozenset[int]
    rounds: tuple[frozenset[int], ...]
    certificate: tuple[tuple[int, int, int], ...]
    final: frozenset[int]
    covers_all: bool

    def to_json_dict(self) -> dict[str, object]:
        return {
            "mode": self.mode,
            "initial": sorted(self.initial),
            "rounds": [sorted(block) for block in self.rounds],
            "certificate": [[u, v, r] for u, v, r in self.certificate],
            "final": sorted(self.final),
            "covers_all": self.covers_all,
        }


def _start_set(
    g: Digraph, vertices: Iterable[int], allow_empty: bool
) -> frozenset[int]:
    s = check_vertex_set(g, vertices)
    if not s and not allow_empty:
        raise DomainError("starting set must be non-empty")
    return s


def _forcing_round(
    g: Digraph, colored: set[int], loop_rule: bool
) -> dict[int, int]:
    """One synchronous forcing round: map of forced vertex -> least forcer."""
    forced: dict[int, int] = {}
    for u in range(g.n):
        if not loop_rule and u not in colored:
            continue
        white = g.out_neighborhood(u) - colored
        if len(white) == 1:
            v = next(iter(white))
            if v not in forced:
                forced[v] = u
    return forced


def _run(
    g: Digraph,
    mode: str,
    initial: frozenset[int],
) -> PropagationTrace:
    loop_rule = g.has_loops
    colored = set(initial)
    rounds: list[frozenset[int]] = []
    certificate: list[tuple[int, int, int]] = []
    if mode == MODE_POWER_DOMINATION:
        dominated = g.out_neighborhood_of_set(initial) - colored
        for v in sorted(dominated):
            u = min(w for w in initial if v in g.out_neighborhood(w))
            certificate.append((u, v, 1))
        rounds.append(frozenset(dominated))
        colored |= dominated
    while True:
        forced = _forcing_round(g, colored, loop_rule)
        if not forced:
            break
        r = len(rounds) + 1
        for v in sorted(forced):
            certificate.append((forced[v], v, r))
        rounds.append(frozenset(forced))
        colored |= forced.keys()
    # A power-domination trace whose domination round added nothing and
    # never got past it reduces to no rounds at all.
    if rounds and not rounds[-1]:
        rounds.pop()
    return PropagationTrace(
        mode=mode,
        initial=initial,
        rounds=tuple(rounds),
        certificate=tuple(certificate),
        final=frozenset(colored),
        covers_all=len(colored) == g.n,
    )


def zf_closure(
    g: Digraph, s: Iterable[int], *, allow_empty: bool = False
) -> PropagationTrace:
    """Run zero forcing from ``s`` to its fixed point."""
    return _run(g, MODE_ZERO_FORCING, _start_set(g, s, allow_empty))


def is_zero_forcing_set(
    g: Digraph, s: Iterable[int], *, allow_empty: bool = False
) -> bool:
    """Whether forcing from ``s`` colors every vertex."""
    return zf_closure(g, s, allow_empty=allow_empty).covers_all


def pd_closure(
    g: Digraph, s: Iterable[int], *, allow_empty: bool = False
) -> PropagationTrace:
    """Run the domination round and then zero forcing from ``s``."""
    return _run(g, MODE_POWER_DOMINATION, _start_set(g, s, allow_empty))


def is_power_dominating_set(
    g: Digraph, s: Iterable[int], *, allow_empty: bool = False
) -> bool:
    """Whether domination plus forcing from ``s`` colors every vertex."""
    return pd_closure(g, s, allow_empty=allow_empty).covers_all
