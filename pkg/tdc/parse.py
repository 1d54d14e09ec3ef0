"""Graph file formats and the command-line shorthand grammar.

DIMACS ``.col``: ``c`` comment lines, one ``p edge <n> <m>`` header, then
``e <u> <v>`` lines with 1-based vertex indices. The JSON graph form is
``{"n": <int>, "edges": [[u, v], ...]}`` with 0-based indices.
"""

from __future__ import annotations

import json
import os

from tdc.errors import InputError, ParseError
from tdc.graph import Family, FamilySpec, Graph, build_graph
from tdc.locks import write_text


def _int_token(token: str, line: int | None, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer {what}, got '{token}'", line=line, token=token) from None


def parse_dimacs(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        fields = raw.split()
        if not fields or fields[0] == "c":
            continue
        tag = fields[0]
        if tag == "p":
            if n is not None:
                raise ParseError("second problem line", line=lineno, token=raw.strip())
            if len(fields) != 4 or fields[1] not in ("edge", "col"):
                raise ParseError("problem line must read 'p edge <n> <m>'", line=lineno, token=raw.strip())
            n = _int_token(fields[2], lineno, "vertex count")
            _int_token(fields[3], lineno, "edge count")
            if n < 0:
                raise ParseError(f"negative vertex count {n}", line=lineno, token=fields[2])
        elif tag == "e":
            if n is None:
                raise ParseError("edge line before the problem line", line=lineno, token=raw.strip())
            if len(fields) != 3:
                raise ParseError("edge line must read 'e <u> <v>'", line=lineno, token=raw.strip())
            u, v = (_int_token(f, lineno, "vertex index") for f in fields[1:])
            for token, x in zip(fields[1:], (u, v)):
                if not 1 <= x <= n:
                    raise ParseError(f"vertex index {x} out of range 1..{n}", line=lineno, token=token)
            if u == v:
                raise ParseError(f"self-loop on vertex {u}", line=lineno, token=raw.strip())
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"unknown line type '{tag}'", line=lineno, token=tag)
    if n is None:
        raise ParseError("missing 'p edge <n> <m>' line")
    return build_graph(n, edges)


def format_dimacs(g: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"c {part}" for part in comment.splitlines())
    lines.append(f"p edge {g.n} {g.m}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_dimacs(path: str) -> Graph:
    return parse_dimacs(_read_text(path))


def write_dimacs(path: str, g: Graph, comment: str | None = None) -> None:
    write_text(path, format_dimacs(g, comment))


def _is_int(x) -> bool:
    # JSON true/false load as bool, a subclass of int
    return isinstance(x, int) and not isinstance(x, bool)


def parse_json_graph(text: str) -> Graph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno) from None
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise ParseError("JSON graph must be an object with 'n' and 'edges'")
    n = data["n"]
    if not _is_int(n) or n < 0:
        raise ParseError(f"'n' must be a non-negative integer, got {n!r}", token=json.dumps(n))
    if not isinstance(data["edges"], list):
        raise ParseError(f"'edges' must be a list of pairs, got {data['edges']!r}", token=json.dumps(data["edges"]))
    edges = []
    for edge in data["edges"]:
        if not (isinstance(edge, list) and len(edge) == 2 and all(_is_int(x) for x in edge)):
            raise ParseError(f"edge {edge!r} is not a pair of integers", token=json.dumps(edge))
        edges.append(tuple(edge))
    return build_graph(n, edges)


def read_json_graph(path: str) -> Graph:
    return parse_json_graph(_read_text(path))


def write_json_graph(path: str, g: Graph) -> None:
    write_text(path, json.dumps(g.to_json(), sort_keys=True) + "\n")


def _read_text(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except UnicodeDecodeError as exc:
        raise ParseError(f"{path} is not UTF-8 text (byte {exc.start})") from None
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def load_graph(path: str) -> Graph:
    """Read a graph, choosing the format by extension (``.json`` or DIMACS)."""
    if os.path.splitext(path)[1].lower() == ".json":
        return read_json_graph(path)
    return read_dimacs(path)


def save_graph(path: str, g: Graph, comment: str | None = None) -> None:
    if os.path.splitext(path)[1].lower() == ".json":
        write_json_graph(path, g)
    else:
        write_dimacs(path, g, comment)


# ---------------------------------------------------------------------------
# Shorthand grammar
# ---------------------------------------------------------------------------

FAMILY_HELP = (
    "family shorthand NAME[:P1,P2,...], e.g. cycle:10, wheel:7 (rim size), "
    "multipartite:2,3,4 (part sizes), random-tree:12,7 (n,seed), "
    "random-graph:9,1,2,5 (n,num,den,seed)"
)


def parse_family_name(name: str) -> Family:
    try:
        return Family(name)
    except ValueError:
        known = ", ".join(f.value for f in Family)
        raise ParseError(f"unknown family '{name}' (known: {known})", token=name) from None


def parse_family(text: str) -> FamilySpec:
    """``name:p1,p2,...`` to a FamilySpec; parameters are checked by ``generate``."""
    name, sep, rest = text.partition(":")
    kind = parse_family_name(name.strip())
    if not sep or not rest.strip():
        raise ParseError(f"family '{name}' needs parameters after ':'", token=text)
    params = tuple(_int_token(p.strip(), None, "family parameter") for p in rest.split(","))
    return FamilySpec(kind, params)


def parse_range(text: str) -> list[int]:
    """``a..b`` (inclusive), ``a,b,c`` or a single integer."""
    if ".." in text:
        lo, _, hi = text.partition("..")
        a = _int_token(lo.strip(), None, "range bound")
        b = _int_token(hi.strip(), None, "range bound")
        if a > b:
            raise ParseError(f"empty range {a}..{b}", token=text)
        return list(range(a, b + 1))
    return [_int_token(p.strip(), None, "range value") for p in text.split(",")]
