"""Command-line front end.

One JSON document goes to stdout; human-readable summaries go to stderr,
so pipelines can consume the machine output without scraping prose.

Exit codes: 0 success, 1 a checked property does not hold (a set fails
to force, digraphs are not isomorphic, a verification suite has a
failing check), 2 usage or domain error, 3 search abandoned on a
resource limit.  The ``FORCING_LAB_MAX_N`` environment variable
overrides the solver order limit; ``--jobs`` is accepted for pipeline
compatibility and currently runs a single worker, which is already well
within the runtime budget at supported sizes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .constructions import (
    construct_pds_L,
    construct_pds_L2,
    construct_zfs_line,
    cycle_factorization,
    one_factor,
)
from .digraph import Digraph
from .errors import DomainError, ResourceLimitError
from .families import FamilySpec, _FAMILY_PARAMS
from .io import digraph_from_json_dict, digraph_to_json_dict, to_dot
from .iso import are_isomorphic
from .linalg import adjacency_matrix, mr_and_max_nullity_regular_line, rank_exact
from .lines import iterated_line
from .propagation import pd_closure, zf_closure
from .solvers import SearchLimits, min_power_dominating, min_zero_forcing
from .verify import run_suite


def _info(message: str) -> None:
    print(message, file=sys.stderr)


def _emit(document: object) -> None:
    print(json.dumps(document, indent=2))


def _load(path: str) -> tuple[Digraph, tuple[str, ...] | None]:
    try:
        with open(path, encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as exc:
        raise DomainError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise DomainError(f"{path} is not valid JSON: {exc}") from exc
    return digraph_from_json_dict(data)


def _write_or_emit(document: object, out: str | None, what: str) -> None:
    if out is None:
        _emit(document)
        return
    with open(out, "w", encoding="utf-8") as handle:
        json.dump(document, handle, indent=2)
        handle.write("\n")
    _info(f"wrote {what} to {out}")


def _parse_vertex_set(
    raw: str, g: Digraph, labels: tuple[str, ...] | None
) -> frozenset[int]:
    """Accept comma-separated vertex ids, or walk labels such as 0-1-3
    when the digraph carries labels."""
    vertices: set[int] = set()
    label_index = {label: i for i, label in enumerate(labels)} if labels else {}
    for token in raw.split(","):
        token = token.strip()
        if not token:
            continue
        try:
            vertices.add(int(token))
            continue
        except ValueError:
            pass
        if token in label_index:
            vertices.add(label_index[token])
            continue
        if labels is None:
            raise DomainError(
                f"--set token {token!r} is not an integer and the input "
                "carries no labels"
            )
        raise DomainError(f"--set token {token!r} matches no label")
    if not vertices:
        raise DomainError("--set resolved to the empty set")
    for v in vertices:
        if not 0 <= v < g.n:
            raise DomainError(f"--set vertex {v} outside 0..{g.n - 1}")
    return frozenset(vertices)


def _solver_limits(args: argparse.Namespace) -> SearchLimits:
    limits = SearchLimits()
    env = os.environ.get("FORCING_LAB_MAX_N")
    if env is not None:
        try:
            limits = SearchLimits(
                max_n=int(env),
                max_subsets=limits.max_subsets,
                max_seconds=limits.max_seconds,
            )
        except ValueError as exc:
            raise DomainError(f"FORCING_LAB_MAX_N={env!r} is not an integer") from exc
    jobs = getattr(args, "jobs", 1)
    if jobs < 1:
        raise DomainError("--jobs must be at least 1")
    return limits


def _cmd_gen(args: argparse.Namespace) -> int:
    provided = {
        name: getattr(args, name)
        for name in ("d", "D", "n")
        if getattr(args, name) is not None
    }
    spec = FamilySpec(args.family, **provided)
    g = spec.build()
    _write_or_emit(digraph_to_json_dict(g), args.output, g.name or "digraph")
    _info(f"{g.name}: {g.n} vertices, {g.arc_count} arcs")
    return 0


def _cmd_line(args: argparse.Namespace) -> int:
    g, _ = _load(args.input)
    labeled = iterated_line(g, args.iterate)
    document = digraph_to_json_dict(labeled.graph, labels=labeled.label_strings())
    _write_or_emit(document, args.output, labeled.graph.name or "line digraph")
    _info(
        f"L^{args.iterate} of {g.n} vertices / {g.arc_count} arcs: "
        f"{labeled.graph.n} vertices, {labeled.graph.arc_count} arcs"
    )
    return 0


def _cmd_zf(args: argparse.Namespace) -> int:
    g, labels = _load(args.input)
    if args.action == "min":
        limits = _solver_limits(args)
        result = min_zero_forcing(g, limits=limits)
        _emit(
            {
                "number": result.number,
                "witness": sorted(result.witness),
                "subsets_tested": result.subsets_tested,
            }
        )
        _info(
            f"Z = {result.number}, witness {sorted(result.witness)} "
            f"({result.subsets_tested} subsets tested)"
        )
        return 0
    if args.action == "construct":
        witness = construct_zfs_line(g)
        _emit(witness.to_json_dict())
        _info(
            f"zero forcing set of size {len(witness.vertices)} on the "
            f"{witness.line.graph.n}-vertex line digraph"
        )
        return 0
    if args.set is None:
        raise DomainError(f"zf {args.action} needs --set")
    s = _parse_vertex_set(args.set, g, labels)
    trace = zf_closure(g, s)
    _emit(trace.to_json_dict())
    if args.action == "closure":
        _info(
            f"closure of {sorted(s)} colors {len(trace.final)}/{g.n} "
            f"vertices in {len(trace.rounds)} rounds"
        )
        return 0
    if trace.covers_all:
        _info(f"{sorted(s)} is a zero forcing set")
        return 0
    _info(f"{sorted(s)} is not a zero forcing set")
    return 1


def _cmd_pd(args: argparse.Namespace) -> int:
    g, labels = _load(args.input)
    if args.action == "min":
        limits = _solver_limits(args)
        result = min_power_dominating(g, limits=limits)
        _emit(
            {
                "number": result.number,
                "witness": sorted(result.witness),
                "subsets_tested": result.subsets_tested,
            }
        )
        _info(
            f"power domination number = {result.number}, witness "
            f"{sorted(result.witness)} ({result.subsets_tested} subsets tested)"
        )
        return 0
    if args.action == "construct-l2":
        witness = construct_pds_L2(g)
        _emit(witness.to_json_dict())
        _info(
            f"power dominating set of size {len(witness.vertices)} on the "
            f"{witness.line.graph.n}-vertex square iterate"
        )
        return 0
    if args.action == "construct-l":
        if args.set is None:
            raise DomainError(
                "construct-l needs --set with a disjoint out-neighborhood set"
            )
        s = _parse_vertex_set(args.set, g, labels)
        witness = construct_pds_L(g, s)
        _emit(witness.to_json_dict())
        _info(
            f"power dominating set of size {len(witness.vertices)} on the "
            f"{witness.line.graph.n}-vertex line digraph"
        )
        return 0
    if args.set is None:
        raise DomainError(f"pd {args.action} needs --set")
    s = _parse_vertex_set(args.set, g, labels)
    trace = pd_closure(g, s)
    _emit(trace.to_json_dict())
    if args.action == "closure":
        _info(
            f"domination plus forcing from {sorted(s)} colors "
            f"{len(trace.final)}/{g.n} vertices"
        )
        return 0
    if trace.covers_all:
        _info(f"{sorted(s)} is a power dominating set")
        return 0
    _info(f"{sorted(s)} is not a power dominating set")
    return 1


def _cmd_rank(args: argparse.Namespace) -> int:
    g, _ = _load(args.input)
    if args.line_depth is not None:
        report = mr_and_max_nullity_regular_line(
            g, args.line_depth, allow_degree_one=args.allow_degree_one
        )
        _emit(report.to_json_dict())
        _info(
            f"L^{report.depth} of the degree-{report.degree} input: "
            f"order {report.order}, mr {report.min_rank}, "
            f"max nullity {report.max_nullity}"
        )
        return 0
    result = rank_exact(adjacency_matrix(g))
    _emit({"n": g.n, "rank": result.rank, "nullity": result.nullity})
    _info(f"adjacency rank {result.rank}, nullity {result.nullity}")
    return 0


def _cmd_factor(args: argparse.Namespace) -> int:
    g, _ = _load(args.input)
    if args.cycles:
        factorization = cycle_factorization(g)
        _emit(
            {
                "degree": len(factorization.factors),
                "factors": [
                    {"f": list(factor.f), "cycles": [list(c) for c in factor.cycles()]}
                    for factor in factorization.factors
                ],
            }
        )
        _info(f"cycle factorization into {len(factorization.factors)} 1-factors")
        return 0
    factor = one_factor(g, require_good=args.require_good)
    if factor is None:
        _emit({"factor": None})
        _info(
            "no good 1-factor exists"
            if args.require_good
            else "no 1-factor exists"
        )
        return 1
    _emit({"factor": {"f": list(factor.f), "cycles": [list(c) for c in factor.cycles()]}})
    _info(f"1-factor with {len(factor.cycles())} cycles")
    return 0


def _cmd_iso(args: argparse.Namespace) -> int:
    g, _ = _load(args.first)
    h, _ = _load(args.second)
    mapping = are_isomorphic(g, h)
    if mapping is None:
        _emit({"isomorphic": False})
        _info("not isomorphic")
        return 1
    _emit({"isomorphic": True, "mapping": list(mapping)})
    _info(f"isomorphic via {list(mapping)}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    _solver_limits(args)
    results = run_suite(args.suite)
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        _info(f"{status} {result.label}: {result.details}")
    failed = sum(1 for result in results if not result.passed)
    _emit(
        {
            "suite": args.suite,
            "checks": [
                {
                    "label": result.label,
                    "passed": result.passed,
                    "details": result.details,
                }
                for result in results
            ],
            "failed": failed,
        }
    )
    _info(f"{len(results) - failed}/{len(results)} checks passed")
    return 0 if failed == 0 else 1


def _cmd_export_dot(args: argparse.Namespace) -> int:
    g, labels = _load(args.input)
    text = to_dot(g, labels=labels)
    if args.output is None:
        print(text, end="")
    else:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
        _info(f"wrote DOT to {args.output}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="forcing-lab",
        description=(
            "Digraph zero forcing, power domination, line digraphs, and "
            "exact minimum-rank reports"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a named family digraph")
    gen.add_argument("family", choices=sorted(_FAMILY_PARAMS))
    gen.add_argument("--d", type=int, default=None, help="degree parameter")
    gen.add_argument("--D", type=int, default=None, help="word-length parameter")
    gen.add_argument("--n", type=int, default=None, help="order or level parameter")
    gen.add_argument("-o", "--output", default=None)
    gen.set_defaults(handler=_cmd_gen)

    line = sub.add_parser("line", help="apply the line-digraph operator")
    line.add_argument("input")
    line.add_argument("--iterate", type=int, default=1, metavar="K")
    line.add_argument("-o", "--output", default=None)
    line.set_defaults(handler=_cmd_line)

    zf = sub.add_parser("zf", help="zero forcing operations")
    zf.add_argument("action", choices=["closure", "check", "min", "construct"])
    zf.add_argument("input")
    zf.add_argument("--set", default=None, help="comma-separated ids or labels")
    zf.add_argument("--jobs", type=int, default=1)
    zf.set_defaults(handler=_cmd_zf)

    pd = sub.add_parser("pd", help="power domination operations")
    pd.add_argument(
        "action",
        choices=["closure", "check", "min", "construct-l2", "construct-l"],
    )
    pd.add_argument("input")
    pd.add_argument("--set", default=None, help="comma-separated ids or labels")
    pd.add_argument("--jobs", type=int, default=1)
    pd.set_defaults(handler=_cmd_pd)

    rank = sub.add_parser("rank", help="exact adjacency rank and nullity")
    rank.add_argument("input")
    rank.add_argument(
        "--line-depth",
        type=int,
        default=None,
        metavar="K",
        help="report mr and max nullity of L^K of the regular input",
    )
    rank.add_argument("--allow-degree-one", action="store_true")
    rank.set_defaults(handler=_cmd_rank)

    factor = sub.add_parser("factor", help="1-factor or cycle factorization")
    factor.add_argument("input")
    factor.add_argument("--cycles", action="store_true")
    factor.add_argument("--require-good", action="store_true")
    factor.set_defaults(handler=_cmd_factor)

    iso = sub.add_parser("iso", help="isomorphism certificate")
    iso.add_argument("first")
    iso.add_argument("second")
    iso.set_defaults(handler=_cmd_iso)

    verify = sub.add_parser("verify", help="run a named verification suite")
    verify.add_argument("suite")
    verify.add_argument("--jobs", type=int, default=1)
    verify.set_defaults(handler=_cmd_verify)

    export = sub.add_parser("export-dot", help="write Graphviz DOT")
    export.add_argument("input")
    export.add_argument("-o", "--output", default=None)
    export.set_defaults(handler=_cmd_export_dot)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except DomainError as exc:
        _info(f"error: {exc}")
        return 2
    except ResourceLimitError as exc:
        _info(f"resource limit: {exc}")
        return 3


if __name__ == "__main__":
    sys.exit(main())
