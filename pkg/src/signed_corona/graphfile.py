"""Plain-text signed graph files.

Format (one directive per line, ``#`` starts a comment line)::

    n 3
    e 0 1 +
    e 1 2 -
    m +1 -1 -1      # optional explicit marking

The ``n`` line must appear exactly once, before any ``e`` or ``m`` line.
Endpoints are 0-indexed.
"""

from __future__ import annotations

from pathlib import Path

from .errors import GraphFileError, InvalidGraph
from .graph import SignedGraph

_SIGNS = {"+": 1, "-": -1, "+1": 1, "-1": -1}


def parse_graph(text: str) -> SignedGraph:
    n: int | None = None
    edges: list[tuple[int, int, int]] = []
    pairs: set[tuple[int, int]] = set()
    marking: list[int] | None = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tok = line.split()
        kind = tok[0]
        if kind == "n":
            if n is not None:
                raise GraphFileError(lineno, "duplicate 'n' line")
            if len(tok) != 2 or not tok[1].isdigit():
                raise GraphFileError(lineno, "expected 'n <count>'")
            n = int(tok[1])
        elif kind == "e":
            if n is None:
                raise GraphFileError(lineno, "'e' line before 'n' line")
            if len(tok) != 4 or not tok[1].isdigit() or not tok[2].isdigit() or tok[3] not in ("+", "-"):
                raise GraphFileError(lineno, "expected 'e u v sign'")
            u, v = int(tok[1]), int(tok[2])
            if u >= n or v >= n:
                raise GraphFileError(lineno, f"endpoint out of range for n={n}")
            if u == v:
                raise GraphFileError(lineno, f"loop at vertex {u}")
            a, b = min(u, v), max(u, v)
            if (a, b) in pairs:
                raise GraphFileError(lineno, f"duplicate edge {a} {b}")
            pairs.add((a, b))
            edges.append((a, b, _SIGNS[tok[3]]))
        elif kind == "m":
            if n is None:
                raise GraphFileError(lineno, "'m' line before 'n' line")
            if marking is not None:
                raise GraphFileError(lineno, "duplicate 'm' line")
            vals = tok[1:]
            if len(vals) != n or any(v not in _SIGNS for v in vals):
                raise GraphFileError(lineno, f"expected 'm' followed by {n} entries from +1 -1 + -")
            marking = [_SIGNS[v] for v in vals]
        else:
            raise GraphFileError(lineno, f"unknown directive {kind!r}")

    if n is None:
        raise GraphFileError(0, "missing 'n' line")
    try:
        return SignedGraph(n, frozenset(edges), None if marking is None else tuple(marking))
    except InvalidGraph as exc:  # pragma: no cover - parse checks cover these
        raise GraphFileError(0, str(exc)) from exc


def format_graph(g: SignedGraph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"n {g.n}")
    lines.extend(f"e {u} {v} {'+' if s > 0 else '-'}" for u, v, s in g.edge_list)
    if g.explicit_marking is not None:
        lines.append("m " + " ".join("+1" if m > 0 else "-1" for m in g.explicit_marking))
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path) -> SignedGraph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def write_graph(path: str | Path, g: SignedGraph, comment: str | None = None) -> None:
    Path(path).write_text(format_graph(g, comment), encoding="utf-8")
