"""Line-oriented text formats for graphs, sections and heuristics, plus DOT export.

Grammar (EBNF). Blank lines and ``#`` comments are ignored everywhere;
tokens are separated by whitespace.

Graph document::

    graph_doc  = { vertex_line | edge_line } ;
    vertex_line = "vertex" ID [ "source" | "sink" ] ;
    edge_line  = "edge" ID ID ID RATIONAL ;
    RATIONAL   = INT | DECIMAL | INT "/" INT ;

Exactly one vertex carries ``source`` and exactly one carries ``sink``.

Section document (one cell per line, omitted cells are unassigned)::

    section_doc = { ID value } ;
    value      = "bot" | "top" | ID | RATIONAL
               | "[" ID "," ID "]"
               | "(" ID "," RATIONAL ")"
               | "(" ID "," ID "," RATIONAL ")" ;

A bare ID over a vertex is a chosen edge; a bare RATIONAL over an edge is a
distance. Spaces inside brackets are allowed.

Heuristic document::

    heuristic_doc = { ID RATIONAL } ;
"""

from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path as FilePath

from .errors import GraphError, PathSheafError
from .graph import Graph, build_graph, to_rational
from .sheaf import (
    BOTTOM,
    TOP,
    Assignment,
    Cell,
    ChosenEdge,
    ChosenEdgeWithDist,
    Dist,
    EdgeCell,
    EdgePair,
    OrderedPairWithDist,
    SheafDefinition,
    StalkValue,
    VertexCell,
)

_ID = re.compile(r"^[A-Za-z_][A-Za-z0-9_.\-]*$")


class DocumentError(PathSheafError):
    """A document failed to parse or validate; carries its position."""

    def __init__(self, message: str, source: str = "<string>", line: int | None = None):
        self.source = source
        self.line = line
        self.message = message
        where = source if line is None else f"{source}:{line}"
        super().__init__(f"{where}: {message}")


def _lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if content:
            yield number, content


def _rational(token: str, source: str, line: int) -> Fraction:
    try:
        return to_rational(token)
    except (ValueError, ZeroDivisionError):
        raise DocumentError(f"malformed number {token!r}", source, line) from None


def _ident(token: str, source: str, line: int) -> str:
    if not _ID.match(token) or token in ("bot", "top", "source", "sink"):
        raise DocumentError(f"malformed identifier {token!r}", source, line)
    return token


# -- graphs --------------------------------------------------------------------


def parse_graph(text: str, source: str = "<string>") -> Graph:
    vertices: list[str] = []
    edges: list[tuple] = []
    where: dict[str, int] = {}
    terminals: dict[str, tuple[str, int]] = {}

    for number, content in _lines(text):
        tokens = content.split()
        kind = tokens[0]
        if kind == "vertex":
            if len(tokens) not in (2, 3):
                raise DocumentError("expected: vertex ID [source|sink]", source, number)
            vid = _ident(tokens[1], source, number)
            if len(tokens) == 3:
                flag = tokens[2]
                if flag not in ("source", "sink"):
                    raise DocumentError(f"unknown vertex flag {flag!r}", source, number)
                if flag in terminals:
                    raise DocumentError(
                        f"second {flag} (first on line {terminals[flag][1]})", source, number
                    )
                terminals[flag] = (vid, number)
            vertices.append(vid)
            where.setdefault(vid, number)
        elif kind == "edge":
            if len(tokens) != 5:
                raise DocumentError("expected: edge ID ID ID WEIGHT", source, number)
            eid, u, v = (_ident(t, source, number) for t in tokens[1:4])
            edges.append((eid, u, v, _rational(tokens[4], source, number)))
            where.setdefault(eid, number)
        else:
            raise DocumentError(f"unknown statement {kind!r}", source, number)

    for flag in ("source", "sink"):
        if flag not in terminals:
            raise DocumentError(f"no vertex is marked {flag}", source)
    try:
        return build_graph(vertices, edges, terminals["source"][0], terminals["sink"][0])
    except GraphError as exc:
        raise DocumentError(
            f"{type(exc).__name__}: {exc}", source, where.get(exc.ident)
        ) from exc


def format_graph(g: Graph) -> str:
    out = []
    for v in g.vertices:
        flag = " source" if v == g.source else " sink" if v == g.sink else ""
        out.append(f"vertex {v}{flag}\n")
    for e in g.edges:
        out.append(f"edge {e.id} {e.u} {e.v} {e.weight}\n")
    return "".join(out)


def read_graph(path) -> Graph:
    path = FilePath(path)
    return parse_graph(_read(path), str(path))


# -- sections -------------------------------------------------------------------------


def parse_value(token: str, cell: Cell, source: str = "<string>", line: int = 0) -> StalkValue:
    token = re.sub(r"\s+", "", token)
    if token == "bot":
        return BOTTOM
    if token == "top":
        return TOP
    try:
        if token.startswith("[") and token.endswith("]"):
            parts = token[1:-1].split(",")
            if len(parts) == 2:
                return EdgePair(*(_ident(p, source, line) for p in parts))
        elif token.startswith("(") and token.endswith(")"):
            parts = token[1:-1].split(",")
            if len(parts) == 2:
                return ChosenEdgeWithDist(
                    _ident(parts[0], source, line), _rational(parts[1], source, line)
                )
            if len(parts) == 3:
                return OrderedPairWithDist(
                    _ident(parts[0], source, line),
                    _ident(parts[1], source, line),
                    _rational(parts[2], source, line),
                )
        elif isinstance(cell, VertexCell):
            return ChosenEdge(_ident(token, source, line))
        else:
            return Dist(_rational(token, source, line))
    except ValueError as exc:
        raise DocumentError(str(exc), source, line) from None
    raise DocumentError(f"malformed value {token!r}", source, line)


def parse_section(text: str, sheaf: SheafDefinition, source: str = "<string>") -> Assignment:
    g = sheaf.graph
    data: dict[Cell, StalkValue] = {}
    seen: dict[str, int] = {}
    for number, content in _lines(text):
        parts = content.split(None, 1)
        if len(parts) != 2:
            raise DocumentError("expected: ID VALUE", source, number)
        ident, token = parts
        if ident in seen:
            raise DocumentError(f"{ident!r} already assigned on line {seen[ident]}", source, number)
        seen[ident] = number
        if g.has_vertex(ident):
            cell: Cell = VertexCell(ident)
        elif g.has_edge(ident):
            cell = EdgeCell(ident)
        else:
            raise DocumentError(f"unknown cell {ident!r}", source, number)
        value = parse_value(token, cell, source, number)
        if not sheaf.stalk_check(cell, value):
            raise DocumentError(
                f"StalkMismatch: {value} is not in the {sheaf.name} sheaf's stalk over {ident}",
                source,
                number,
            )
        data[cell] = value
    # graph order, so printing is canonical regardless of input order
    return Assignment({c: data[c] for c in sheaf.cells() if c in data})


def format_section(sheaf: SheafDefinition, s: Assignment) -> str:
    return "".join(f"{c} {s[c]}\n" for c in sheaf.cells() if c in s)


def format_section_inline(sheaf: SheafDefinition, s: Assignment) -> str:
    return " ".join(f"{c}={s[c]}" for c in sheaf.cells() if c in s)


def read_section(path, sheaf: SheafDefinition) -> Assignment:
    path = FilePath(path)
    return parse_section(_read(path), sheaf, str(path))


# -- heuristics --------------------------------------------------------------------------


def parse_heuristic(text: str, g: Graph, source: str = "<string>") -> dict[str, Fraction]:
    table: dict[str, Fraction] = {}
    for number, content in _lines(text):
        parts = content.split()
        if len(parts) != 2:
            raise DocumentError("expected: VERTEX VALUE", source, number)
        vertex, token = parts
        if not g.has_vertex(vertex):
            raise DocumentError(f"unknown vertex {vertex!r}", source, number)
        value = _rational(token, source, number)
        if value < 0:
            raise DocumentError(f"heuristic value {value} is negative", source, number)
        table[vertex] = value
    return table


def read_heuristic(path, g: Graph) -> dict[str, Fraction]:
    path = FilePath(path)
    return parse_heuristic(_read(path), g, str(path))


def _read(path: FilePath) -> str:
    try:
        return path.read_text()
    except OSError as exc:
        raise DocumentError(exc.strerror or str(exc), str(path)) from None


# -- DOT -------------------------------------------------------------------------------------


def _quote(s: str) -> str:
    escaped = s.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n")
    return f'"{escaped}"'


def to_dot(g: Graph, s: Assignment | None = None) -> str:
    """Render ``g`` as an undirected DOT graph.

    With a section, active cells are drawn solid red and inactive ones
    dashed; labels show the assigned value. Unassigned cells stay plain.
    """
    lines = ["graph G {", "  node [shape=circle];"]

    def style(cell: Cell) -> str:
        if s is None or cell not in s:
            return ""
        if s[cell] == BOTTOM:
            return ", style=dashed"
        return ", style=solid, color=red, fontcolor=red"

    for v in g.vertices:
        label = v
        if s is not None and VertexCell(v) in s:
            label += f"\n{s[VertexCell(v)]}"
        shape = ", shape=doublecircle" if g.is_terminal(v) else ""
        lines.append(f"  {_quote(v)} [label={_quote(label)}{shape}{style(VertexCell(v))}];")
    for e in g.edges:
        label = f"{e.id} ({e.weight})"
        if s is not None and EdgeCell(e.id) in s:
            label += f"\n{s[EdgeCell(e.id)]}"
        lines.append(
            f"  {_quote(e.u)} -- {_quote(e.v)} [label={_quote(label)}{style(EdgeCell(e.id))}];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
