"""Parsing, normalization and serialization of undirected simple graphs.

Two input formats are supported: whitespace-delimited edge lists (with
``#`` comments) and a pragmatic subset of GML covering ``node``/``edge``
blocks with ``id``, ``label``, ``source`` and ``target`` keys.  Both
parsers normalize the input to a simple undirected graph: duplicate
edges are collapsed and self-loops dropped (each with a warning).
"""

from __future__ import annotations

import io
import warnings
from bisect import bisect_left
from collections import deque
from dataclasses import dataclass, field


class ParseError(ValueError):
    """Raised for malformed graph input; carries a line number when known."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class NormalizationWarning(UserWarning):
    """Emitted when duplicate edges or self-loops are dropped from input."""


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable undirected simple graph.

    ``labels[i]`` is the external label of the node with internal index
    ``i`` (assignment order = first appearance in the input).  Labels are
    opaque strings and unique.  ``adjacency[i]`` is the sorted tuple of
    neighbor indices; no self-loops, no duplicates.
    """

    labels: tuple[str, ...]
    adjacency: tuple[tuple[int, ...], ...]
    edge_count: int
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {lab: i for i, lab in enumerate(self.labels)})

    @property
    def n(self) -> int:
        return len(self.labels)

    def index_of(self, label: str) -> int:
        """Internal index for an external label; KeyError if unknown."""
        return self._index[label]

    def degree_of(self, i: int) -> int:
        return len(self.adjacency[i])

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self.adjacency[u]
        k = bisect_left(nbrs, v)
        return k < len(nbrs) and nbrs[k] == v

    def edges(self):
        """Yield each undirected edge once as (u, v) with u < v."""
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield u, v


def make_graph(labels: list[str], edges: set[tuple[int, int]]) -> Graph:
    """Assemble a Graph from unique labels and normalized index pairs (u < v)."""
    if len(set(labels)) != len(labels):
        seen, dup = set(), None
        for lab in labels:
            if lab in seen:
                dup = lab
                break
            seen.add(lab)
        raise ParseError(f"duplicate node label {dup!r}")
    nbrs: list[list[int]] = [[] for _ in labels]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    return Graph(
        labels=tuple(labels),
        adjacency=tuple(tuple(sorted(a)) for a in nbrs),
        edge_count=len(edges),
    )


def _as_text(data) -> str:
    if isinstance(data, bytes):
        return data.decode("utf-8")
    if isinstance(data, str):
        return data
    raw = data.read()
    return raw.decode("utf-8") if isinstance(raw, bytes) else raw


class _EdgeAccumulator:
    """Collects labeled edges, assigning indices in first-appearance order."""

    def __init__(self):
        self.labels: list[str] = []
        self.index: dict[str, int] = {}
        self.edges: set[tuple[int, int]] = set()
        self.self_loops = 0
        self.duplicates = 0

    def node(self, label: str) -> int:
        i = self.index.get(label)
        if i is None:
            i = len(self.labels)
            self.index[label] = i
            self.labels.append(label)
        return i

    def edge(self, a: str, b: str) -> None:
        u, v = self.node(a), self.node(b)
        if u == v:
            self.self_loops += 1
            return
        key = (u, v) if u < v else (v, u)
        if key in self.edges:
            self.duplicates += 1
        else:
            self.edges.add(key)

    def finish(self) -> Graph:
        if self.self_loops:
            warnings.warn(f"dropped {self.self_loops} self-loop(s)", NormalizationWarning, stacklevel=3)
        if self.duplicates:
            warnings.warn(f"collapsed {self.duplicates} duplicate edge(s)", NormalizationWarning, stacklevel=3)
        return make_graph(self.labels, self.edges)


def parse_edge_list(data, comment_prefix: str = "#", delimiter: str | None = None) -> Graph:
    """Parse a whitespace- (or `delimiter`-) separated edge list.

    Each non-comment, non-blank line must hold exactly two node labels.
    Duplicate edges are collapsed and self-loops dropped, each with a
    NormalizationWarning.  Node indices follow first appearance.
    """
    acc = _EdgeAccumulator()
    for lineno, line in enumerate(_as_text(data).splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith(comment_prefix):
            continue
        tokens = stripped.split(delimiter)
        if len(tokens) != 2:
            raise ParseError(f"expected two node labels, got {len(tokens)} tokens", line=lineno)
        acc.edge(tokens[0], tokens[1])
    return acc.finish()


# --- GML subset ---------------------------------------------------------


def _tokenize_gml(text: str):
    """Yield (token, line) pairs; tokens are '[', ']', quoted strings or atoms."""
    i, n, line = 0, len(text), 1
    while i < n:
        c = text[i]
        if c == "\n":
            line += 1
            i += 1
        elif c.isspace():
            i += 1
        elif c in "[]":
            yield c, line
            i += 1
        elif c == '"':
            j = i + 1
            buf = []
            while j < n and text[j] != '"':
                if text[j] == "\n":
                    line += 1
                buf.append(text[j])
                j += 1
            if j >= n:
                raise ParseError("unterminated string", line=line)
            yield ("".join(buf), line)
            i = j + 1
        elif c == "#":
            while i < n and text[i] != "\n":
                i += 1
        else:
            j = i
            while j < n and not text[j].isspace() and text[j] not in "[]":
                j += 1
            yield text[i:j], line
            i = j
    yield None, line


def _parse_gml_list(tokens) -> list[tuple[str, object]]:
    """Parse key/value pairs until the matching ']' (or EOF at top level)."""
    items: list[tuple[str, object]] = []
    while True:
        tok, line = next(tokens)
        if tok is None or tok == "]":
            return items if tok == "]" else items + [("\x00eof", None)]
        if tok == "[":
            raise ParseError("unexpected '['", line=line)
        key = tok
        val, line2 = next(tokens)
        if val is None:
            raise ParseError(f"missing value for key {key!r}", line=line)
        if val == "[":
            items.append((key, _parse_gml_list_strict(tokens, line2)))
        elif val == "]":
            raise ParseError(f"missing value for key {key!r}", line=line)
        else:
            items.append((key, val))


def _parse_gml_list_strict(tokens, open_line: int) -> list[tuple[str, object]]:
    items = _parse_gml_list(tokens)
    if items and items[-1] == ("\x00eof", None):
        raise ParseError("unbalanced brackets", line=open_line)
    return items


def parse_gml(data) -> Graph:
    """Parse the node/edge subset of GML into an undirected Graph.

    Node labels come from the ``label`` key when present, else ``str(id)``.
    A ``directed 1`` flag is ignored with a warning; unknown keys and
    nested blocks are skipped.
    """
    tokens = _tokenize_gml(_as_text(data))
    top = _parse_gml_list(tokens)
    if top and top[-1] == ("\x00eof", None):
        top = top[:-1]
    graph_block = next((v for k, v in top if k == "graph" and isinstance(v, list)), None)
    if graph_block is None:
        raise ParseError("no 'graph [...]' block found")

    acc = _EdgeAccumulator()
    id_to_label: dict[str, str] = {}
    pending_edges: list[tuple[str, str]] = []
    for key, value in graph_block:
        if key == "directed" and value == "1":
            warnings.warn("input declares 'directed 1'; treating edges as undirected", NormalizationWarning, stacklevel=2)
        elif key == "node" and isinstance(value, list):
            attrs = {k: v for k, v in value if not isinstance(v, list)}
            if "id" not in attrs:
                raise ParseError("node block missing 'id'")
            node_id = attrs["id"]
            if node_id in id_to_label:
                raise ParseError(f"duplicate node id {node_id}")
            label = attrs.get("label", str(node_id))
            if label in acc.index:
                raise ParseError(f"duplicate node label {label!r}")
            id_to_label[node_id] = label
            acc.node(label)
        elif key == "edge" and isinstance(value, list):
            attrs = {k: v for k, v in value if not isinstance(v, list)}
            if "source" not in attrs or "target" not in attrs:
                raise ParseError("edge block missing 'source' or 'target'")
            pending_edges.append((attrs["source"], attrs["target"]))
    for src, dst in pending_edges:
        if src not in id_to_label:
            raise ParseError(f"edge references unknown node id {src}")
        if dst not in id_to_label:
            raise ParseError(f"edge references unknown node id {dst}")
        acc.edge(id_to_label[src], id_to_label[dst])
    return acc.finish()


def read_graph(path, fmt: str | None = None) -> Graph:
    """Load a graph file, picking the parser from `fmt` or the extension."""
    with open(path, "rb") as fh:
        data = fh.read()
    if fmt is None:
        fmt = "gml" if str(path).lower().endswith(".gml") else "edgelist"
    if fmt == "gml":
        return parse_gml(data)
    if fmt in ("edgelist", "edge-list"):
        return parse_edge_list(data)
    raise ValueError(f"unknown graph format {fmt!r}")


# --- Serialization ------------------------------------------------------


def write_edge_list(g: Graph) -> str:
    """Serialize to the edge-list format, one edge per line.

    Isolated nodes are written as self-loop lines (``u u``); the parser
    drops the loop but keeps the node, so round-trips preserve the node set.
    """
    lines = [f"{g.labels[u]} {g.labels[v]}" for u, v in g.edges()]
    lines.extend(f"{g.labels[u]} {g.labels[u]}" for u in range(g.n) if not g.adjacency[u])
    return "\n".join(lines) + ("\n" if lines else "")


def _dot_quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def write_dot(g: Graph) -> str:
    """Serialize to an undirected DOT graph with quoted labels."""
    out = io.StringIO()
    out.write("graph {\n")
    for u in range(g.n):
        if not g.adjacency[u]:
            out.write(f"  {_dot_quote(g.labels[u])};\n")
    for u, v in g.edges():
        out.write(f"  {_dot_quote(g.labels[u])} -- {_dot_quote(g.labels[v])};\n")
    out.write("}\n")
    return out.getvalue()


def write_graph(g: Graph, fmt: str) -> str:
    if fmt in ("edgelist", "edge-list"):
        return write_edge_list(g)
    if fmt == "dot":
        return write_dot(g)
    raise ValueError(f"unknown output format {fmt!r}")


# --- Structure helpers --------------------------------------------------


def connected_components(g: Graph) -> list[list[int]]:
    """Connected components as sorted index lists, largest-first then by first node."""
    seen = [False] * g.n
    comps: list[list[int]] = []
    for start in range(g.n):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in g.adjacency[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        comps.append(sorted(comp))
    comps.sort(key=lambda c: (-len(c), c[0]))
    return comps


def induced_subgraph(g: Graph, nodes) -> Graph:
    """Induced subgraph on the given node indices; labels carried over.

    New indices follow the old index order.
    """
    keep = sorted(set(nodes))
    remap = {old: new for new, old in enumerate(keep)}
    labels = [g.labels[i] for i in keep]
    edges = {
        (remap[u], remap[v])
        for u in keep
        for v in g.adjacency[u]
        if u < v and v in remap
    }
    return make_graph(labels, edges)


def largest_component(g: Graph) -> tuple[Graph, list[int]]:
    """Subgraph induced on the largest connected component, plus kept indices."""
    comps = connected_components(g)
    if not comps:
        return g, []
    return induced_subgraph(g, comps[0]), comps[0]
