"""Finite simple graphs and the combinatorial operations the pipeline consumes.

Everything here is an immutable value; operations are pure functions, and all
iteration orders are derived from the lexicographic vertex order so that a
given input always produces byte-identical output.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from .errors import (
    GraphFormatError,
    ImproperColoringError,
    SizeExceededError,
    UnknownVertexError,
)

Edge = tuple[str, str]

#: threshold conventions for the inter-essential-vertex path bound; see
#: is_sufficiently_subdivided.
PATH_THRESHOLDS = ("paper", "alt")


def normalize_edge(u: str, v: str) -> Edge:
    if u == v:
        raise GraphFormatError(f"self-loop at {u!r}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class SimpleGraph:
    """A finite simple graph with string vertex identifiers.

    ``vertices`` is lexicographically sorted, and each edge is stored with
    its smaller endpoint first; the edge tuple is itself sorted.
    """

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]

    @classmethod
    def make(cls, vertices, edges=()) -> "SimpleGraph":
        vs = []
        for v in vertices:
            if not isinstance(v, str) or not v:
                raise GraphFormatError(f"vertex names must be nonempty strings, got {v!r}")
            vs.append(v)
        vset = set(vs)
        es = set()
        for pair in edges:
            u, v = pair
            e = normalize_edge(u, v)
            if e[0] not in vset or e[1] not in vset:
                raise GraphFormatError(f"edge {e} has an undeclared endpoint")
            es.add(e)
        return cls(vertices=tuple(sorted(vset)), edges=tuple(sorted(es)))

    @cached_property
    def adjacency(self) -> dict[str, frozenset[str]]:
        adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(ns) for v, ns in adj.items()}

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def has_vertex(self, v: str) -> bool:
        return v in self.adjacency

    def has_edge(self, u: str, v: str) -> bool:
        return u != v and v in self.adjacency.get(u, frozenset())

    def neighbors(self, v: str) -> frozenset[str]:
        try:
            return self.adjacency[v]
        except KeyError:
            raise UnknownVertexError(f"unknown vertex {v!r}") from None

    def degree(self, v: str) -> int:
        return len(self.neighbors(v))

    def components(self) -> tuple[tuple[str, ...], ...]:
        seen: set[str] = set()
        comps = []
        for start in self.vertices:
            if start in seen:
                continue
            comp = []
            queue = deque([start])
            seen.add(start)
            while queue:
                x = queue.popleft()
                comp.append(x)
                for y in sorted(self.adjacency[x]):
                    if y not in seen:
                        seen.add(y)
                        queue.append(y)
            comps.append(tuple(sorted(comp)))
        return tuple(comps)

    def is_connected(self) -> bool:
        return len(self.components()) <= 1


@dataclass(frozen=True)
class Coloring:
    """A proper vertex coloring with colors 1..color_count, all of them used."""

    assignment: tuple[tuple[str, int], ...]
    color_count: int

    @classmethod
    def make(cls, graph: SimpleGraph, mapping) -> "Coloring":
        mapping = dict(mapping)
        missing = [v for v in graph.vertices if v not in mapping]
        if missing:
            raise ImproperColoringError(f"uncolored vertices: {missing}")
        extra = sorted(set(mapping) - set(graph.vertices))
        if extra:
            raise UnknownVertexError(f"colored vertices not in the graph: {extra}")
        colors = set(mapping.values())
        if not all(isinstance(c, int) and c >= 1 for c in colors):
            raise ImproperColoringError("colors must be integers >= 1")
        n = max(colors, default=0)
        if colors != set(range(1, n + 1)):
            raise ImproperColoringError(
                f"colors must be exactly 1..{n} with every color used, got {sorted(colors)}"
            )
        for u, v in graph.edges:
            if mapping[u] == mapping[v]:
                raise ImproperColoringError(
                    f"adjacent vertices {u!r} and {v!r} share color {mapping[u]}"
                )
        return cls(assignment=tuple(sorted(mapping.items())), color_count=n)

    @cached_property
    def as_dict(self) -> dict[str, int]:
        return dict(self.assignment)

    def color_of(self, v: str) -> int:
        try:
            return self.as_dict[v]
        except KeyError:
            raise UnknownVertexError(f"unknown vertex {v!r}") from None

    def validate_for(self, graph: SimpleGraph) -> None:
        Coloring.make(graph, self.as_dict)

    def to_json_dict(self) -> dict:
        return {"colors": self.color_count, "assignment": self.as_dict}


def coloring_from_json_dict(graph: SimpleGraph, data) -> Coloring:
    if not isinstance(data, dict) or "assignment" not in data:
        raise GraphFormatError("coloring JSON must be an object with an 'assignment' key")
    return Coloring.make(graph, data["assignment"])


def greedy_color(g: SimpleGraph) -> Coloring:
    """Color vertices in lexicographic order with the smallest legal color.

    Every color up to the maximum is used, so the result is surjective.
    """
    assignment: dict[str, int] = {}
    for v in g.vertices:
        taken = {assignment[w] for w in g.adjacency[v] if w in assignment}
        c = 1
        while c in taken:
            c += 1
        assignment[v] = c
    return Coloring.make(g, assignment) if assignment else Coloring((), 0)


def _greedy_clique(g: SimpleGraph, order) -> list[str]:
    clique: list[str] = []
    for v in order:
        if all(g.has_edge(v, w) for w in clique):
            clique.append(v)
    return clique


def _try_k_coloring(g: SimpleGraph, order: list[str], k: int) -> dict[str, int] | None:
    """Backtracking k-coloring over the given vertex order, colors tried
    ascending, with the usual new-color symmetry break."""
    assignment: dict[str, int] = {}

    def place(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        taken = {assignment[w] for w in g.adjacency[v] if w in assignment}
        for c in range(1, min(k, used + 1) + 1):
            if c in taken:
                continue
            assignment[v] = c
            if place(i + 1, max(used, c)):
                return True
            del assignment[v]
        return False

    return dict(assignment) if place(0, 0) else None


def chromatic_number(g: SimpleGraph, max_vertices: int = 16) -> Coloring:
    """A proper coloring with provably minimal color count.

    Exhaustive backtracking between a greedy-clique lower bound and the
    greedy-coloring upper bound. Exact, hence capped at ``max_vertices``.
    """
    if g.n_vertices > max_vertices:
        raise SizeExceededError(
            f"exact coloring limited to {max_vertices} vertices, got {g.n_vertices}"
        )
    if g.n_vertices == 0:
        return Coloring((), 0)
    order = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
    lower = max(1, len(_greedy_clique(g, order)))
    upper_coloring = greedy_color(g)
    for k in range(lower, upper_coloring.color_count):
        found = _try_k_coloring(g, order, k)
        if found is not None:
            return Coloring.make(g, found)
    return upper_coloring


def opposite_graph(g: SimpleGraph) -> SimpleGraph:
    """Complement on the same vertex set."""
    present = set(g.edges)
    edges = [
        (u, v)
        for i, u in enumerate(g.vertices)
        for v in g.vertices[i + 1 :]
        if (u, v) not in present
    ]
    return SimpleGraph.make(g.vertices, edges)


def link(g: SimpleGraph, v: str) -> frozenset[str]:
    """The neighbors of v (v itself excluded)."""
    return g.neighbors(v)


def delete_vertex(g: SimpleGraph, v: str) -> SimpleGraph:
    if not g.has_vertex(v):
        raise UnknownVertexError(f"unknown vertex {v!r}")
    return SimpleGraph.make(
        (w for w in g.vertices if w != v),
        (e for e in g.edges if v not in e),
    )


def essential_vertices(g: SimpleGraph) -> frozenset[str]:
    """Vertices of degree at least 3."""
    return frozenset(v for v in g.vertices if g.degree(v) >= 3)


# --- subdivision -----------------------------------------------------------


@dataclass(frozen=True)
class SubdivisionViolation:
    kind: str  # "path" or "loop"
    vertices: tuple[str, ...]
    length: int
    required: int


@dataclass(frozen=True)
class SubdivisionReport:
    ok: bool
    n: int
    path_threshold: str
    path_required: int
    loop_required: int
    violations: tuple[SubdivisionViolation, ...]

    def __bool__(self) -> bool:
        return self.ok

    def to_json_dict(self) -> dict:
        return {
            "ok": self.ok,
            "n": self.n,
            "path_threshold": self.path_threshold,
            "path_required": self.path_required,
            "loop_required": self.loop_required,
            "violations": [
                {
                    "kind": v.kind,
                    "vertices": list(v.vertices),
                    "length": v.length,
                    "required": v.required,
                }
                for v in self.violations
            ],
        }


def _path_required(n: int, path_threshold: str) -> int:
    # Two conventions appear in the literature for the minimum edge count of
    # an arc between essential vertices: n - 1 and n + 1. "paper" selects the
    # former, "alt" the latter; the loop bound n + 1 is common to both. The
    # discrepancy is surfaced as a flag rather than silently resolved.
    if path_threshold not in PATH_THRESHOLDS:
        raise GraphFormatError(f"path_threshold must be one of {PATH_THRESHOLDS}")
    return n - 1 if path_threshold == "paper" else n + 1


def _arcs(g: SimpleGraph):
    """Maximal paths between distinct essential vertices whose interior
    vertices are all non-essential. Yields (u, w, interior) once per arc."""
    ess = essential_vertices(g)
    seen = set()
    for u in sorted(ess):
        for z in sorted(g.adjacency[u]):
            prev, cur = u, z
            interior: list[str] = []
            steps = 0
            while cur not in ess and g.degree(cur) == 2:
                nxt = next(x for x in g.adjacency[cur] if x != prev)
                interior.append(cur)
                prev, cur = cur, nxt
                steps += 1
                if steps > g.n_vertices:  # cannot happen in a simple graph
                    raise GraphFormatError("runaway chain walk")
            if cur not in ess or cur == u:
                continue
            if u < cur:
                key = (u, cur, tuple(interior))
            else:
                key = (cur, u, tuple(reversed(interior)))
            if key not in seen:
                seen.add(key)
                yield key


def _girth_and_witness(g: SimpleGraph) -> tuple[int | None, tuple[str, ...]]:
    """Length and vertex sequence of a shortest simple cycle, or (None, ())."""
    best_len: int | None = None
    best_cycle: tuple[str, ...] = ()
    for root in g.vertices:
        dist = {root: 0}
        parent: dict[str, str | None] = {root: None}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if best_len is not None and dist[x] >= best_len / 2:
                break
            for y in sorted(g.adjacency[x]):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    px, py = [x], [y]
                    while px[-1] is not None:
                        px.append(parent[px[-1]])  # type: ignore[index]
                    while py[-1] is not None:
                        py.append(parent[py[-1]])  # type: ignore[index]
                    px = px[:-1][::-1]
                    py = py[:-1][::-1]
                    # strip the shared prefix down to the last common ancestor
                    lca = 0
                    while lca < min(len(px), len(py)) and px[lca] == py[lca]:
                        lca += 1
                    cycle = px[lca - 1 :] + py[len(py) - 1 : lca - 1 : -1]
                    if len(set(cycle)) != len(cycle):
                        continue  # non-simple closure, a shorter cycle exists elsewhere
                    if best_len is None or len(cycle) < best_len:
                        best_len = len(cycle)
                        best_cycle = tuple(cycle)
        if best_len == 3:
            break
    return best_len, best_cycle


def _short_cycles(g: SimpleGraph, max_edges: int):
    """All simple cycles with at most max_edges edges, each reported once
    with its smallest vertex first."""
    order = {v: i for i, v in enumerate(g.vertices)}
    for root in g.vertices:
        stack = [(root, [root])]
        while stack:
            cur, path = stack.pop()
            for nxt in sorted(g.adjacency[cur], reverse=True):
                if nxt == root and len(path) >= 3:
                    # canonical orientation: second vertex smaller than last
                    if order[path[1]] < order[path[-1]]:
                        yield tuple(path)
                    continue
                if nxt in path or order[nxt] <= order[root]:
                    continue
                if len(path) < max_edges:
                    stack.append((nxt, path + [nxt]))


def is_sufficiently_subdivided(
    g: SimpleGraph, n: int, path_threshold: str = "paper"
) -> SubdivisionReport:
    """Check the subdivision criterion for n strands.

    Requires every arc between two distinct essential vertices (interior
    free of essential vertices) to have at least ``path_required`` edges and
    every simple cycle to have at least ``n + 1`` edges. The report lists
    every violating arc and cycle.
    """
    if n < 1:
        raise GraphFormatError(f"strand count must be >= 1, got {n}")
    path_required = _path_required(n, path_threshold)
    loop_required = n + 1
    violations: list[SubdivisionViolation] = []
    for u, w, interior in _arcs(g):
        length = len(interior) + 1
        if length < path_required:
            violations.append(
                SubdivisionViolation("path", (u, *interior, w), length, path_required)
            )
    girth, _ = _girth_and_witness(g)
    if girth is not None and girth < loop_required:
        for cycle in sorted(_short_cycles(g, loop_required - 1)):
            violations.append(
                SubdivisionViolation("loop", cycle, len(cycle), loop_required)
            )
    return SubdivisionReport(
        ok=not violations,
        n=n,
        path_threshold=path_threshold,
        path_required=path_required,
        loop_required=loop_required,
        violations=tuple(violations),
    )


def subdivide_uniform(g: SimpleGraph, k: int) -> tuple[SimpleGraph, dict[Edge, tuple[str, ...]]]:
    """Replace every edge by a path of k edges; fresh interior vertices are
    named ``<u>~<v>~<i>`` from the smaller endpoint. Returns the new graph
    and, per original edge, the full replacement path from u to v."""
    if k < 1:
        raise GraphFormatError(f"subdivision factor must be >= 1, got {k}")
    vertices = list(g.vertices)
    existing = set(vertices)
    edges: list[Edge] = []
    chains: dict[Edge, tuple[str, ...]] = {}
    for u, v in g.edges:
        path = [u]
        for i in range(1, k):
            name = f"{u}~{v}~{i}"
            if name in existing:
                raise GraphFormatError(f"subdivision name collision at {name!r}")
            existing.add(name)
            vertices.append(name)
            path.append(name)
        path.append(v)
        chains[(u, v)] = tuple(path)
        edges.extend(normalize_edge(a, b) for a, b in zip(path, path[1:]))
    return SimpleGraph.make(vertices, edges), chains


def subdivision_factor(g: SimpleGraph, n: int, path_threshold: str = "paper") -> int:
    """Smallest uniform factor whose subdivision passes the checker."""
    for k in range(1, n + 3):
        candidate, _ = subdivide_uniform(g, k)
        if is_sufficiently_subdivided(candidate, n, path_threshold).ok:
            return k
    raise GraphFormatError("no subdivision factor found")  # pragma: no cover


def subdivide_for(g: SimpleGraph, n: int, path_threshold: str = "paper") -> SimpleGraph:
    """Minimal uniform subdivision passing is_sufficiently_subdivided for n."""
    return subdivide_uniform(g, subdivision_factor(g, n, path_threshold))[0]


def is_planar(g: SimpleGraph, max_vertices: int = 64) -> bool:
    """Planarity of the abstract graph. The Euler bound |E| <= 3|V| - 6
    rejects dense graphs before the full test runs."""
    if g.n_vertices > max_vertices:
        raise SizeExceededError(
            f"planarity test limited to {max_vertices} vertices, got {g.n_vertices}"
        )
    if g.n_vertices >= 3 and g.n_edges > 3 * g.n_vertices - 6:
        return False
    G = nx.Graph()
    G.add_nodes_from(g.vertices)
    G.add_edges_from(g.edges)
    ok, _ = nx.check_planarity(G)
    return bool(ok)


# --- serialization ---------------------------------------------------------


def graph_to_json_dict(g: SimpleGraph) -> dict:
    return {"vertices": list(g.vertices), "edges": [list(e) for e in g.edges]}


def graph_from_json_dict(data) -> SimpleGraph:
    if not isinstance(data, dict):
        raise GraphFormatError("graph JSON must be an object")
    vertices = data.get("vertices")
    edges = data.get("edges", [])
    if not isinstance(vertices, list) or not isinstance(edges, list):
        raise GraphFormatError("graph JSON needs 'vertices' and 'edges' arrays")
    parsed_edges = []
    for e in edges:
        if not isinstance(e, (list, tuple)) or len(e) != 2:
            raise GraphFormatError(f"edge entries must be pairs, got {e!r}")
        parsed_edges.append((e[0], e[1]))
    return SimpleGraph.make(vertices, parsed_edges)


def dumps_canonical(obj) -> str:
    """Fixed JSON serialization so identical data yields identical bytes."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def loads_graph(text: str) -> SimpleGraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"invalid JSON: {exc}") from exc
    return graph_from_json_dict(data)


_DOT_PALETTE = (
    "red",
    "blue",
    "green",
    "orange",
    "purple",
    "brown",
    "cyan",
    "magenta",
    "gold",
    "gray",
)


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: SimpleGraph, coloring: Coloring | None = None, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in g.vertices:
        if coloring is not None:
            c = coloring.color_of(v)
            fill = _DOT_PALETTE[(c - 1) % len(_DOT_PALETTE)]
            lines.append(
                f"  {_dot_quote(v)} [style=filled, fillcolor={_dot_quote(fill)}, "
                f"label={_dot_quote(f'{v}:{c}')}];"
            )
        else:
            lines.append(f"  {_dot_quote(v)};")
    for u, v in g.edges:
        lines.append(f"  {_dot_quote(u)} -- {_dot_quote(v)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
