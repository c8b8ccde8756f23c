"""Halo graphs: one simple loop per source vertex, intersecting dually.

Given a colored graph, a halo is a connected graph carrying one simple edge
loop per source vertex such that loops of non-adjacent vertices meet in
exactly one vertex (the shared color basepoint when the colors agree, a
private junction otherwise), loops of adjacent vertices are disjoint, and
each color's basepoint lies precisely on the loops of that color.

The builder uses a fixed canonical construction: one basepoint vertex per
color, one junction vertex per non-adjacent differently-colored pair, and
private two-edge arcs threading each loop through its junctions in vertex
order. Vertices with nothing to intersect get a private triangle through
their basepoint. If the union of loops is disconnected, private paths are
grafted between basepoints; these touch the loops only at their endpoints,
so no axiom is disturbed.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

from .errors import EmptyGraphError, GraphFormatError, UnknownVertexError
from .graphs import (
    Coloring,
    SimpleGraph,
    _DOT_PALETTE,
    _dot_quote,
    coloring_from_json_dict,
    graph_from_json_dict,
    graph_to_json_dict,
    normalize_edge,
    subdivide_uniform,
    subdivision_factor,
)

# stable axiom identifiers used in verification reports
AXIOM_LOOP_COVERAGE = "loop-coverage"
AXIOM_SIMPLE_LOOP = "simple-loop"
AXIOM_LOOP_START = "loop-start"
AXIOM_BASEPOINT = "basepoint"
AXIOM_NON_EDGE = "non-edge-intersection"
AXIOM_EDGE_DISJOINT = "edge-disjoint"
AXIOM_CONNECTED = "connected"


@dataclass(frozen=True)
class Halo:
    gamma: SimpleGraph
    artin_loops: tuple[tuple[str, tuple[str, ...]], ...]
    basepoints: tuple[tuple[int, str], ...]
    coloring: Coloring
    delta: SimpleGraph

    @cached_property
    def loops(self) -> dict[str, tuple[str, ...]]:
        return dict(self.artin_loops)

    @cached_property
    def basepoint_of(self) -> dict[int, str]:
        return dict(self.basepoints)

    def loop_of(self, delta_vertex: str) -> tuple[str, ...]:
        try:
            return self.loops[delta_vertex]
        except KeyError:
            raise UnknownVertexError(f"no loop for vertex {delta_vertex!r}") from None

    def loop_edges(self, delta_vertex: str) -> tuple[tuple[str, str], ...]:
        loop = self.loops[delta_vertex]
        return tuple(normalize_edge(a, b) for a, b in zip(loop, loop[1:]))

    def basepoint_configuration(self) -> tuple[str, ...]:
        return tuple(sorted(self.basepoint_of.values()))


@dataclass(frozen=True)
class HaloViolation:
    axiom: str
    message: str
    witnesses: tuple[str, ...]


@dataclass(frozen=True)
class HaloReport:
    ok: bool
    violations: tuple[HaloViolation, ...]

    def __bool__(self) -> bool:
        return self.ok

    def axioms_violated(self) -> tuple[str, ...]:
        return tuple(sorted({v.axiom for v in self.violations}))

    def to_json_dict(self) -> dict:
        return {
            "ok": self.ok,
            "violations": [
                {"axiom": v.axiom, "message": v.message, "witnesses": list(v.witnesses)}
                for v in self.violations
            ],
        }


def build_halo(delta: SimpleGraph, coloring: Coloring) -> Halo:
    """Canonical halo for a properly colored graph; passes verify_halo."""
    if delta.n_vertices == 0:
        raise EmptyGraphError("cannot build a halo for an empty graph")
    coloring.validate_for(delta)
    for v in delta.vertices:
        if "~" in v:
            raise GraphFormatError(
                f"vertex name {v!r} contains '~', reserved for generated names"
            )

    color = coloring.color_of
    basepoint = {c: f"x_{c}" for c in range(1, coloring.color_count + 1)}

    def junction(a: str, b: str) -> str:
        a, b = sorted((a, b))
        return f"j~{a}~{b}"

    vertices: set[str] = set(basepoint.values())
    edges: list[tuple[str, str]] = []
    loops: dict[str, tuple[str, ...]] = {}

    adjacency = delta.adjacency
    for a in delta.vertices:
        partners = [
            b
            for b in delta.vertices
            if b != a and b not in adjacency[a] and color(b) != color(a)
        ]
        anchors = [basepoint[color(a)]] + [junction(a, b) for b in sorted(partners)]
        loop: list[str] = []
        if len(anchors) == 1:
            # nothing to meet: a private triangle through the basepoint
            loop = [anchors[0], f"p~{a}~1", f"p~{a}~2", anchors[0]]
        else:
            ring = anchors + [anchors[0]]
            loop = [ring[0]]
            for idx, (s, t) in enumerate(zip(ring, ring[1:]), start=1):
                loop.extend((f"p~{a}~{idx}", t))
        vertices.update(loop)
        edges.extend(normalize_edge(s, t) for s, t in zip(loop, loop[1:]))
        loops[a] = tuple(loop)

    gamma = SimpleGraph.make(vertices, edges)
    if not gamma.is_connected():
        comps = gamma.components()
        anchors = []
        bp_values = set(basepoint.values())
        for comp in comps:
            anchors.append(min(v for v in comp if v in bp_values))
        anchors.sort()
        root = anchors[0]
        extra_vertices = list(gamma.vertices)
        extra_edges = list(gamma.edges)
        for k, other in enumerate(anchors[1:], start=1):
            mid = f"g~{k}~1"
            extra_vertices.append(mid)
            extra_edges.append(normalize_edge(root, mid))
            extra_edges.append(normalize_edge(mid, other))
        gamma = SimpleGraph.make(extra_vertices, extra_edges)

    halo = Halo(
        gamma=gamma,
        artin_loops=tuple(sorted(loops.items())),
        basepoints=tuple(sorted(basepoint.items())),
        coloring=coloring,
        delta=delta,
    )
    report = verify_halo(halo)
    if not report.ok:  # pragma: no cover - construction guarantee
        raise AssertionError(f"canonical halo failed its own axioms: {report.violations}")
    return halo


def verify_halo(h: Halo) -> HaloReport:
    """Check every halo axiom; failures name the axiom and its witnesses."""
    violations: list[HaloViolation] = []
    gamma, delta, coloring = h.gamma, h.delta, h.coloring
    loops = h.loops
    basepoint = h.basepoint_of

    loop_keys = set(loops)
    delta_vertices = set(delta.vertices)
    if loop_keys != delta_vertices:
        missing = sorted(delta_vertices - loop_keys)
        extra = sorted(loop_keys - delta_vertices)
        violations.append(
            HaloViolation(
                AXIOM_LOOP_COVERAGE,
                f"loops must be indexed by the source vertices (missing {missing}, extra {extra})",
                tuple(missing + extra),
            )
        )

    colors = range(1, coloring.color_count + 1)
    for c in colors:
        if c not in basepoint:
            violations.append(
                HaloViolation(AXIOM_BASEPOINT, f"color {c} has no basepoint", (str(c),))
            )
        elif not gamma.has_vertex(basepoint[c]):
            violations.append(
                HaloViolation(
                    AXIOM_BASEPOINT,
                    f"basepoint {basepoint[c]!r} of color {c} is not a vertex",
                    (basepoint[c],),
                )
            )

    simple: dict[str, bool] = {}
    for a, loop in sorted(loops.items()):
        ok = True
        if len(loop) < 4 or loop[0] != loop[-1]:
            violations.append(
                HaloViolation(
                    AXIOM_SIMPLE_LOOP,
                    f"loop of {a!r} must close over at least three vertices",
                    (a,),
                )
            )
            ok = False
        interior = loop[:-1]
        if len(set(interior)) != len(interior):
            violations.append(
                HaloViolation(
                    AXIOM_SIMPLE_LOOP, f"loop of {a!r} repeats a vertex", (a,)
                )
            )
            ok = False
        for s, t in zip(loop, loop[1:]):
            if not (gamma.has_vertex(s) and gamma.has_vertex(t) and gamma.has_edge(s, t)):
                violations.append(
                    HaloViolation(
                        AXIOM_SIMPLE_LOOP,
                        f"loop of {a!r} uses a missing edge {s!r}-{t!r}",
                        (a, s, t),
                    )
                )
                ok = False
        simple[a] = ok

    for a in sorted(loop_keys & delta_vertices):
        c = coloring.color_of(a)
        if c in basepoint and loops[a] and loops[a][0] != basepoint[c]:
            violations.append(
                HaloViolation(
                    AXIOM_LOOP_START,
                    f"loop of {a!r} must start at basepoint {basepoint[c]!r}",
                    (a, loops[a][0]),
                )
            )

    loop_sets = {a: set(loop) for a, loop in loops.items()}
    for c in colors:
        if c not in basepoint:
            continue
        x = basepoint[c]
        for a in sorted(loop_keys & delta_vertices):
            on_loop = x in loop_sets[a]
            should = coloring.color_of(a) == c
            if on_loop != should:
                detail = "missing from" if should else "present on"
                violations.append(
                    HaloViolation(
                        AXIOM_BASEPOINT,
                        f"basepoint {x!r} of color {c} is {detail} the loop of {a!r}",
                        (x, a),
                    )
                )

    pairs = sorted(loop_keys & delta_vertices)
    for i, a in enumerate(pairs):
        for b in pairs[i + 1 :]:
            inter = loop_sets[a] & loop_sets[b]
            if delta.has_edge(a, b):
                if inter:
                    violations.append(
                        HaloViolation(
                            AXIOM_EDGE_DISJOINT,
                            f"loops of adjacent {a!r}, {b!r} share {sorted(inter)}",
                            (a, b, *sorted(inter)),
                        )
                    )
                continue
            if len(inter) != 1:
                violations.append(
                    HaloViolation(
                        AXIOM_NON_EDGE,
                        f"loops of non-adjacent {a!r}, {b!r} share {len(inter)} vertices "
                        f"({sorted(inter)}), expected exactly 1",
                        (a, b, *sorted(inter)),
                    )
                )
                continue
            v = next(iter(inter))
            ca, cb = coloring.color_of(a), coloring.color_of(b)
            if ca == cb:
                if basepoint.get(ca) != v:
                    violations.append(
                        HaloViolation(
                            AXIOM_NON_EDGE,
                            f"same-colored non-adjacent {a!r}, {b!r} must meet at their "
                            f"basepoint, met at {v!r}",
                            (a, b, v),
                        )
                    )
            else:
                third = [
                    d
                    for d in pairs
                    if d not in (a, b) and v in loop_sets[d]
                ]
                if third:
                    violations.append(
                        HaloViolation(
                            AXIOM_NON_EDGE,
                            f"junction {v!r} of {a!r}, {b!r} also lies on loops {third}",
                            (a, b, v, *third),
                        )
                    )

    if not h.gamma.is_connected():
        violations.append(
            HaloViolation(
                AXIOM_CONNECTED,
                f"halo graph has {len(h.gamma.components())} components",
                tuple(comp[0] for comp in h.gamma.components()),
            )
        )

    return HaloReport(ok=not violations, violations=tuple(violations))


def subdivided_halo(h: Halo, n: int, path_threshold: str = "paper") -> Halo:
    """Uniformly subdivide the halo graph until it suffices for n strands,
    re-threading every loop through the fresh vertices. Basepoints and
    original vertices keep their names."""
    if n != h.coloring.color_count:
        raise GraphFormatError(
            f"strand count {n} must equal the color count {h.coloring.color_count}"
        )
    k = subdivision_factor(h.gamma, n, path_threshold)
    gamma2, chains = subdivide_uniform(h.gamma, k)
    new_loops = []
    for a, loop in h.artin_loops:
        threaded = [loop[0]]
        for s, t in zip(loop, loop[1:]):
            if s < t:
                seg = chains[(s, t)]
            else:
                seg = tuple(reversed(chains[(t, s)]))
            threaded.extend(seg[1:])
        new_loops.append((a, tuple(threaded)))
    return Halo(
        gamma=gamma2,
        artin_loops=tuple(new_loops),
        basepoints=h.basepoints,
        coloring=h.coloring,
        delta=h.delta,
    )


# --- serialization ---------------------------------------------------------


def halo_to_json_dict(h: Halo) -> dict:
    data = graph_to_json_dict(h.gamma)
    data["loops"] = {a: list(loop) for a, loop in h.artin_loops}
    data["basepoints"] = {str(c): v for c, v in h.basepoints}
    data["delta"] = graph_to_json_dict(h.delta)
    data["coloring"] = h.coloring.to_json_dict()
    return data


def halo_from_json_dict(data) -> Halo:
    if not isinstance(data, dict):
        raise GraphFormatError("halo JSON must be an object")
    for key in ("loops", "basepoints", "delta", "coloring"):
        if key not in data:
            raise GraphFormatError(f"halo JSON is missing {key!r}")
    gamma = graph_from_json_dict(data)
    delta = graph_from_json_dict(data["delta"])
    coloring = coloring_from_json_dict(delta, data["coloring"])
    loops = data["loops"]
    if not isinstance(loops, dict):
        raise GraphFormatError("halo 'loops' must be an object")
    basepoints = {}
    for c, v in data["basepoints"].items():
        try:
            basepoints[int(c)] = v
        except ValueError:
            raise GraphFormatError(f"basepoint color {c!r} is not an integer") from None
    return Halo(
        gamma=gamma,
        artin_loops=tuple(sorted((a, tuple(loop)) for a, loop in loops.items())),
        basepoints=tuple(sorted(basepoints.items())),
        coloring=coloring,
        delta=delta,
    )


def loads_halo(text: str) -> Halo:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"invalid JSON: {exc}") from exc
    return halo_from_json_dict(data)


def halo_to_dot(h: Halo, name: str = "Halo") -> str:
    """DOT export with each loop's edges drawn in its own color."""
    owner: dict[tuple[str, str], int] = {}
    for idx, (a, _) in enumerate(h.artin_loops):
        for e in h.loop_edges(a):
            owner.setdefault(e, idx)
    basepoints = set(h.basepoint_of.values())
    lines = [f"graph {name} {{"]
    for v in h.gamma.vertices:
        shape = ", shape=doublecircle" if v in basepoints else ""
        lines.append(f"  {_dot_quote(v)} [label={_dot_quote(v)}{shape}];")
    for e in h.gamma.edges:
        if e in owner:
            color = _DOT_PALETTE[owner[e] % len(_DOT_PALETTE)]
            lines.append(
                f"  {_dot_quote(e[0])} -- {_dot_quote(e[1])} [color={_dot_quote(color)}];"
            )
        else:
            lines.append(f"  {_dot_quote(e[0])} -- {_dot_quote(e[1])};")
    lines.append("}")
    return "\n".join(lines) + "\n"
