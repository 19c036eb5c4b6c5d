"""Reading and writing digraphs as JSON, and exporting Graphviz DOT.

The interchange document is a JSON object with required keys ``n`` (order)
and ``arcs`` (list of ``[tail, head]`` pairs), plus optional ``name`` and
``labels`` (one string per vertex, as produced by the line-digraph
operator).  Arcs are written in lexicographic order so serialisation is
deterministic.
"""

from __future__ import annotations

import json
from pathlib import Path

from .digraph import Digraph
from .errors import DomainError

_ALLOWED_KEYS = {"n", "arcs", "name", "labels"}


def digraph_to_json_dict(
    g: Digraph, labels: list[str] | None = None
) -> dict[str, object]:
    doc: dict[str, object] = {
        "n": g.n,
        "arcs": [[u, v] for u, v in g.arcs_sorted],
    }
    if g.name is not None:
        doc["name"] = g.name
    if labels is not None:
        if len(labels) != g.n:
            raise DomainError(f"expected {g.n} labels, got {len(labels)}")
        doc["labels"] = list(labels)
    return doc


def digraph_from_json_dict(doc: object) -> tuple[Digraph, list[str] | None]:
    """Parse a JSON document into a digraph plus optional vertex labels."""
    if not isinstance(doc, dict):
        raise DomainError("digraph document must be a JSON object")
    unknown = set(doc) - _ALLOWED_KEYS
    if unknown:
        raise DomainError(f"unknown key {sorted(unknown)[0]!r} in digraph document")
    if "n" not in doc:
        raise DomainError("digraph document missing key 'n'")
    if "arcs" not in doc:
        raise DomainError("digraph document missing key 'arcs'")
    n = doc["n"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise DomainError("key 'n' must be a positive integer")
    raw_arcs = doc["arcs"]
    if not isinstance(raw_arcs, list):
        raise DomainError("key 'arcs' must be a list of [tail, head] pairs")
    arcs: list[tuple[int, int]] = []
    for entry in raw_arcs:
        if (
            not isinstance(entry, list)
            or len(entry) != 2
            or any(isinstance(x, bool) or not isinstance(x, int) for x in entry)
        ):
            raise DomainError(f"key 'arcs' has malformed entry {entry!r}")
        arcs.append((entry[0], entry[1]))
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise DomainError("key 'name' must be a string")
    labels = doc.get("labels")
    if labels is not None:
        if not isinstance(labels, list) or any(
            not isinstance(x, str) for x in labels
        ):
            raise DomainError("key 'labels' must be a list of strings")
        if len(labels) != n:
            raise DomainError(f"key 'labels' must have {n} entries, got {len(labels)}")
    try:
        g = Digraph(n, arcs, name=name)
    except DomainError as exc:
        raise DomainError(f"key 'arcs' is invalid: {exc}") from None
    return g, labels


def read_digraph(path: str | Path) -> tuple[Digraph, list[str] | None]:
    text = Path(path).read_text(encoding="utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"{path}: not valid JSON ({exc.msg})") from None
    return digraph_from_json_dict(doc)


def write_digraph(
    path: str | Path, g: Digraph, labels: list[str] | None = None
) -> None:
    doc = digraph_to_json_dict(g, labels)
    Path(path).write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")


def _dot_quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: Digraph, labels: list[str] | None = None) -> str:
    """Render as Graphviz DOT, attaching vertex labels when given."""
    if labels is not None and len(labels) != g.n:
        raise DomainError(f"expected {g.n} labels, got {len(labels)}")
    lines = []
    title = _dot_quote(g.name) if g.name else "G"
    lines.append(f"digraph {title} {{")
    if labels is not None:
        for v in range(g.n):
            lines.append(f"  {v} [label={_dot_quote(labels[v])}];")
    else:
        # Bare statements keep isolated vertices visible.
        touched = {u for u, _ in g.arcs} | {v for _, v in g.arcs}
        for v in range(g.n):
            if v not in touched:
                lines.append(f"  {v};")
    for u, v in g.arcs_sorted:
        lines.append(f"  {u} -> {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
