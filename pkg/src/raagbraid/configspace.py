"""0- and 1-cells of the unordered discretized configuration space.

A cell of the underlying graph is a vertex (a string) or a closed edge
(a sorted pair). A configuration is an unordered set of n cells with
pairwise disjoint closures, stored canonically sorted. Zero cells of the
space are all-vertex configurations; one cells contain exactly one edge and
connect the two zero cells obtained by parking the moving token at either
endpoint. Higher cells are never needed here: words in the image of the
edge-forgetting map are evaluated algebraically.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import (
    BaseMismatchError,
    GraphFormatError,
    IllegalStepError,
    InsufficientSubdivisionError,
    SizeExceededError,
)
from .graphs import SimpleGraph, is_sufficiently_subdivided, normalize_edge
from .halo import Halo

Cell = str | tuple[str, str]


def cell_key(cell: Cell):
    if isinstance(cell, str):
        return (0, cell, "")
    return (1, cell[0], cell[1])


def cell_vertices(cell: Cell) -> tuple[str, ...]:
    return (cell,) if isinstance(cell, str) else cell


def closure_disjoint(c1: Cell, c2: Cell) -> bool:
    return not set(cell_vertices(c1)) & set(cell_vertices(c2))


@dataclass(frozen=True)
class Configuration:
    cells: tuple[Cell, ...]

    @classmethod
    def make(cls, cells) -> "Configuration":
        cells = tuple(sorted(cells, key=cell_key))
        for i, a in enumerate(cells):
            for b in cells[i + 1 :]:
                if not closure_disjoint(a, b):
                    raise GraphFormatError(
                        f"cells {a!r} and {b!r} have intersecting closures"
                    )
        return cls(cells)

    @property
    def n(self) -> int:
        return len(self.cells)

    def vertex_cells(self) -> tuple[str, ...]:
        return tuple(c for c in self.cells if isinstance(c, str))

    def edge_cells(self) -> tuple[tuple[str, str], ...]:
        return tuple(c for c in self.cells if not isinstance(c, str))

    def replace(self, old: Cell, new: Cell) -> "Configuration":
        rest = list(self.cells)
        rest.remove(old)
        return Configuration.make(rest + [new])


@dataclass(frozen=True)
class OneCell:
    cells: Configuration
    endpoints: tuple[Configuration, Configuration]


@dataclass(frozen=True)
class DiscreteConfigSpace:
    n: int
    zero_cells: tuple[Configuration, ...]
    one_cells: tuple[OneCell, ...]

    def counts_json_dict(self) -> dict:
        return {
            "n": self.n,
            "zero_cells": len(self.zero_cells),
            "one_cells": len(self.one_cells),
        }


def build_udc(gamma: SimpleGraph, n: int, cell_budget: int = 1_000_000) -> DiscreteConfigSpace:
    """Enumerate the 0- and 1-cells for n strands on gamma."""
    if n < 1:
        raise GraphFormatError(f"strand count must be >= 1, got {n}")
    if n > gamma.n_vertices:
        raise GraphFormatError(
            f"{n} strands cannot occupy {gamma.n_vertices} vertices"
        )
    v = gamma.n_vertices
    predicted = comb(v, n) + gamma.n_edges * comb(max(v - 2, 0), n - 1)
    if predicted > cell_budget:
        raise SizeExceededError(
            f"space would have {predicted} cells, over the budget of {cell_budget}"
        )
    zero = tuple(
        Configuration(cells) for cells in combinations(gamma.vertices, n)
    )
    ones = []
    for edge in gamma.edges:
        u, w = edge
        rest_pool = tuple(x for x in gamma.vertices if x not in edge)
        for rest in combinations(rest_pool, n - 1):
            cfg = Configuration.make(rest + (edge,))
            end_u = Configuration.make(rest + (u,))
            end_w = Configuration.make(rest + (w,))
            ones.append(OneCell(cells=cfg, endpoints=(end_u, end_w)))
    return DiscreteConfigSpace(n=n, zero_cells=zero, one_cells=tuple(ones))


@dataclass(frozen=True)
class Step:
    """One token slides across one edge while every other token rests."""

    edge: tuple[str, str]
    source: str

    @property
    def target(self) -> str:
        u, v = self.edge
        return v if self.source == u else u

    def reversed(self) -> "Step":
        return Step(edge=self.edge, source=self.target)

    def to_json_dict(self) -> dict:
        return {"edge": list(self.edge), "from": self.source}


@dataclass(frozen=True)
class ConfigEdgePath:
    base: Configuration
    steps: tuple[Step, ...]

    def __len__(self) -> int:
        return len(self.steps)

    def configurations(self) -> list[Configuration]:
        """Base plus the configuration after each step."""
        configs = [self.base]
        cur = self.base
        for step in self.steps:
            cur = cur.replace(step.source, step.target)
            configs.append(cur)
        return configs

    def final(self) -> Configuration:
        return self.configurations()[-1]

    @property
    def is_closed(self) -> bool:
        return self.final() == self.base

    def reverse(self) -> "ConfigEdgePath":
        return ConfigEdgePath(
            base=self.final(),
            steps=tuple(s.reversed() for s in reversed(self.steps)),
        )

    def to_json_dict(self) -> dict:
        return {
            "base": [list(c) if isinstance(c, tuple) else c for c in self.base.cells],
            "steps": [s.to_json_dict() for s in self.steps],
        }


def edge_path(gamma: SimpleGraph, base: Configuration, moves) -> ConfigEdgePath:
    """Validated path: each move is (edge, source_vertex); every step must be
    a legal one-cell, i.e. the resting tokens avoid the moving edge."""
    for cell in base.cells:
        if not isinstance(cell, str):
            raise GraphFormatError("path base must be an all-vertex configuration")
    steps = []
    occupied = set(base.cells)
    for edge, source in moves:
        edge = normalize_edge(*edge)
        if not gamma.has_edge(*edge):
            raise GraphFormatError(f"{edge} is not an edge of the graph")
        if source not in edge:
            raise IllegalStepError(f"step source {source!r} is not on edge {edge}")
        target = edge[1] if source == edge[0] else edge[0]
        if source not in occupied:
            raise IllegalStepError(f"no token at {source!r} to move")
        if target in occupied:
            raise IllegalStepError(
                f"token collision: {target!r} is occupied while crossing {edge}"
            )
        occupied.remove(source)
        occupied.add(target)
        steps.append(Step(edge=edge, source=source))
    return ConfigEdgePath(base=base, steps=tuple(steps))


def artin_basepoint(h: Halo) -> Configuration:
    return Configuration.make(h.basepoint_configuration())


def artin_loop_path(h: Halo, n: int, delta_vertex: str, power: int) -> ConfigEdgePath:
    """The closed path at the basepoint configuration in which the token of
    the vertex's color traverses its loop |power| times (reversed direction
    for negative power) while all other tokens rest."""
    if not is_sufficiently_subdivided(h.gamma, n).ok:
        raise InsufficientSubdivisionError(
            f"halo graph is not sufficiently subdivided for {n} strands"
        )
    base = artin_basepoint(h)
    if base.n != n:
        raise GraphFormatError(
            f"{n} strands but {base.n} basepoints; strand count must match colors"
        )
    if power == 0:
        return ConfigEdgePath(base=base, steps=())
    loop = h.loop_of(delta_vertex)
    walk = loop if power > 0 else tuple(reversed(loop))
    moves = []
    for _ in range(abs(power)):
        moves.extend(
            (normalize_edge(s, t), s) for s, t in zip(walk, walk[1:])
        )
    return edge_path(h.gamma, base, moves)


def concat_paths(p: ConfigEdgePath, q: ConfigEdgePath) -> ConfigEdgePath:
    """Compose two loops based at the same configuration."""
    if not p.is_closed:
        raise BaseMismatchError("left path is not closed at its base")
    if not q.is_closed:
        raise BaseMismatchError("right path is not closed at its base")
    if p.base != q.base:
        raise BaseMismatchError(
            f"paths are based at different configurations: {p.base.cells} vs {q.base.cells}"
        )
    return ConfigEdgePath(base=p.base, steps=p.steps + q.steps)
