"""The embedding pipeline and its verification suites.

From a colored graph the context assembles: the subdivided halo, the graph
on the halo's edges (two edge-vertices adjacent when the edges have disjoint
closures) with its presentation, and a fixed orientation per halo edge
(tail = smaller endpoint). The edge-forgetting map sends a configuration
path to the word of crossed edges, one letter per step, signed by the
orientation; generators of the source group map to their loop traversed
twice (squaring is what makes the composite injective, and the
counterexample report exhibits why once it is dropped).
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass

from .configspace import (
    ConfigEdgePath,
    artin_basepoint,
    artin_loop_path,
    concat_paths,
)
from .errors import InputError, UnknownVertexError, VerificationError
from .graphs import Coloring, SimpleGraph, is_planar, is_sufficiently_subdivided
from .halo import Halo, build_halo, subdivided_halo, verify_halo
from .raag import (
    GroupWord,
    RaagPresentation,
    detect_pinch,
    is_trivial,
)

Letter = tuple[str, int]


def edge_generator_name(edge: tuple[str, str]) -> str:
    return f"{edge[0]}|{edge[1]}"


class EmbeddingContext:
    """Everything needed to evaluate the composite map over one halo."""

    def __init__(self, halo: Halo, path_threshold: str = "paper"):
        report = is_sufficiently_subdivided(halo.gamma, halo.coloring.color_count, path_threshold)
        if not report.ok:
            raise VerificationError(
                "context requires a sufficiently subdivided halo; "
                f"violations: {report.violations}"
            )
        self.halo = halo
        self.delta = halo.delta
        self.coloring = halo.coloring
        self.n = halo.coloring.color_count
        self.path_threshold = path_threshold
        self.source_group = RaagPresentation(self.delta)
        # tail -> head runs from the smaller endpoint
        self.edge_orientation: dict[tuple[str, str], tuple[str, str]] = {
            e: (e[0], e[1]) for e in halo.gamma.edges
        }
        self._edge_to_gen = {e: edge_generator_name(e) for e in halo.gamma.edges}
        gens = sorted(self._edge_to_gen.values())
        pairs = []
        edges_sorted = halo.gamma.edges
        for i, e in enumerate(edges_sorted):
            for f in edges_sorted[i + 1 :]:
                if not set(e) & set(f):
                    pairs.append((self._edge_to_gen[e], self._edge_to_gen[f]))
        self.delta_gamma = SimpleGraph.make(gens, pairs)
        self.a_gamma = RaagPresentation(self.delta_gamma)
        self.base = artin_basepoint(halo)
        self._loop_paths: dict[tuple[str, int], ConfigEdgePath] = {}
        self._letter_images: dict[tuple[str, int, bool], tuple[Letter, ...]] = {}

    def edge_generator(self, edge: tuple[str, str]) -> str:
        try:
            return self._edge_to_gen[edge]
        except KeyError:
            raise UnknownVertexError(f"{edge} is not an edge of the halo graph") from None

    def loop_path(self, delta_vertex: str, power: int) -> ConfigEdgePath:
        key = (delta_vertex, power)
        if key not in self._loop_paths:
            self._loop_paths[key] = artin_loop_path(self.halo, self.n, delta_vertex, power)
        return self._loop_paths[key]

    def letter_image(self, delta_vertex: str, sign: int, squared: bool) -> tuple[Letter, ...]:
        """Image in the edge group of one signed source letter."""
        key = (delta_vertex, sign, squared)
        if key not in self._letter_images:
            power = sign * (2 if squared else 1)
            self._letter_images[key] = phi(self.loop_path(delta_vertex, power), self).letters
        return self._letter_images[key]


def build_context(
    delta: SimpleGraph, coloring: Coloring, path_threshold: str = "paper"
) -> EmbeddingContext:
    """Canonical halo, subdivided for n = color count, packaged for mapping."""
    halo = build_halo(delta, coloring)
    sub = subdivided_halo(halo, coloring.color_count, path_threshold)
    return EmbeddingContext(sub, path_threshold)


def context_from_halo(
    halo: Halo, path_threshold: str = "paper", require_verified: bool = True
) -> EmbeddingContext:
    """Context over a user-supplied halo, subdividing it if necessary."""
    if require_verified:
        report = verify_halo(halo)
        if not report.ok:
            raise VerificationError(
                f"halo violates axioms {report.axioms_violated()}"
            )
    n = halo.coloring.color_count
    if not is_sufficiently_subdivided(halo.gamma, n, path_threshold).ok:
        halo = subdivided_halo(halo, n, path_threshold)
    return EmbeddingContext(halo, path_threshold)


def phi(path: ConfigEdgePath, ctx: EmbeddingContext) -> GroupWord:
    """Forget all resting tokens: one letter per crossed edge, sign positive
    when the move runs tail to head."""
    letters = []
    for step in path.steps:
        gen = ctx.edge_generator(step.edge)
        tail, _head = ctx.edge_orientation[step.edge]
        letters.append((gen, 1 if step.source == tail else -1))
    return GroupWord(tuple(letters))


def psi(w: GroupWord, ctx: EmbeddingContext, squared: bool = True) -> ConfigEdgePath:
    """Realize a source word as a based loop: each letter contributes a
    single or doubled traversal of its generator's loop."""
    path = ConfigEdgePath(base=ctx.base, steps=())
    factor = 2 if squared else 1
    for gen, sign in w.letters:
        if not ctx.delta.has_vertex(gen):
            raise UnknownVertexError(f"unknown source generator {gen!r}")
        path = concat_paths(path, ctx.loop_path(gen, factor * sign))
    return path


def phi_psi(w: GroupWord, ctx: EmbeddingContext, squared: bool = True) -> GroupWord:
    """The composite: source word to edge-group word."""
    return phi(psi(w, ctx, squared), ctx)


def _image_letters(ctx: EmbeddingContext, letters, squared: bool) -> list[Letter]:
    img: list[Letter] = []
    for gen, sign in letters:
        img.extend(ctx.letter_image(gen, sign, squared))
    return img


def _image_is_trivial(ctx: EmbeddingContext, letters, squared: bool) -> bool:
    img = _image_letters(ctx, letters, squared)
    sums: dict[str, int] = {}
    for g, s in img:
        sums[g] = sums.get(g, 0) + s
    if any(sums.values()):
        return False  # nonzero exponent sum is already conclusive
    return ctx.a_gamma.is_trivial_letters(img)


# --- verification suites ---------------------------------------------------


@dataclass(frozen=True)
class RelatorCheck:
    edge: tuple[str, str]
    commutator_trivial: bool
    supports_disjoint: bool
    cross_pairs_commute: bool

    @property
    def ok(self) -> bool:
        return self.commutator_trivial and self.supports_disjoint and self.cross_pairs_commute


@dataclass(frozen=True)
class HomomorphismReport:
    ok: bool
    relators: tuple[RelatorCheck, ...]

    def __bool__(self) -> bool:
        return self.ok

    def to_json_dict(self) -> dict:
        return {
            "ok": self.ok,
            "relators": [
                {
                    "edge": list(r.edge),
                    "commutator_trivial": r.commutator_trivial,
                    "supports_disjoint": r.supports_disjoint,
                    "cross_pairs_commute": r.cross_pairs_commute,
                }
                for r in self.relators
            ],
        }


def check_homomorphism(ctx: EmbeddingContext) -> HomomorphismReport:
    """Every commutation relator of the source must map to a trivial word,
    and more strongly the images of adjacent generators must use disjoint,
    pairwise-commuting sets of edge generators."""
    relators = []
    for a, b in ctx.delta.edges:
        commutator = GroupWord.from_pairs([(a, 1), (b, 1), (a, -1), (b, -1)])
        trivial = is_trivial(phi_psi(commutator, ctx, squared=True), ctx.a_gamma)
        support_a = {g for g, _ in ctx.letter_image(a, 1, True)}
        support_b = {g for g, _ in ctx.letter_image(b, 1, True)}
        disjoint = not (support_a & support_b)
        cross = all(
            ctx.delta_gamma.has_edge(e, f) for e in support_a for f in support_b
        )
        relators.append(
            RelatorCheck(
                edge=(a, b),
                commutator_trivial=trivial,
                supports_disjoint=disjoint,
                cross_pairs_commute=cross,
            )
        )
    return HomomorphismReport(ok=all(r.ok for r in relators), relators=tuple(relators))


@dataclass(frozen=True)
class InjectivityReport:
    squared: bool
    max_len: int
    exhaustive_elements: int
    sample_count: int
    sample_max_len: int
    seed: int
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.ok

    def to_json_dict(self) -> dict:
        return {
            "ok": self.ok,
            "squared": self.squared,
            "max_len": self.max_len,
            "exhaustive_elements": self.exhaustive_elements,
            "sample_count": self.sample_count,
            "sample_max_len": self.sample_max_len,
            "seed": self.seed,
            "failures": list(self.failures),
        }


def _nontrivial_elements(p: RaagPresentation, max_len: int):
    """Canonical spellings of every nontrivial element of geodesic length at
    most max_len, enumerated over free-reduced words."""
    signed = [(g, s) for g in p.generators for s in (1, -1)]
    out: set[tuple[Letter, ...]] = set()
    word: list[Letter] = []

    def rec():
        if word:
            reduced = p.reduce_letters(word)
            if reduced:
                out.add(reduced)
        if len(word) == max_len:
            return
        last = word[-1] if word else None
        for letter in signed:
            if last is not None and letter[0] == last[0] and letter[1] == -last[1]:
                continue
            word.append(letter)
            rec()
            word.pop()

    rec()
    return sorted(out)


def injectivity_spot_check(
    ctx: EmbeddingContext,
    max_len: int,
    sample_count: int = 0,
    seed: int = 0,
    squared: bool = True,
) -> InjectivityReport:
    """Look for nontrivial source elements with trivial image.

    Exhausts every element of geodesic length up to ``max_len``, then checks
    ``sample_count`` seeded random words of length up to ``2 * max_len``.
    In squared mode any failure is an implementation bug; in unsquared mode
    failures witness the lost injectivity.
    """
    if max_len < 0:
        raise InputError(f"max_len must be >= 0, got {max_len}")
    failures: list[str] = []
    elements = _nontrivial_elements(ctx.source_group, max_len)
    for letters in elements:
        if _image_is_trivial(ctx, letters, squared):
            failures.append(str(GroupWord(letters)))

    sample_max_len = 2 * max_len
    rng = random.Random(seed)
    signed = [(g, s) for g in ctx.source_group.generators for s in (1, -1)]
    sampled = 0
    attempts = 0
    while (
        sample_max_len > 0
        and sampled < sample_count
        and attempts < 100 * max(sample_count, 1)
    ):
        attempts += 1
        length = rng.randint(1, max(sample_max_len, 1))
        letters = tuple(rng.choice(signed) for _ in range(length))
        if not ctx.source_group.reduce_letters(letters):
            continue
        sampled += 1
        if _image_is_trivial(ctx, letters, squared):
            failures.append(str(GroupWord(letters)))
    return InjectivityReport(
        squared=squared,
        max_len=max_len,
        exhaustive_elements=len(elements),
        sample_count=sampled,
        sample_max_len=sample_max_len,
        seed=seed,
        failures=tuple(sorted(set(failures))),
    )


@dataclass(frozen=True)
class PinchEvent:
    stable: str
    positions: tuple[int, int]
    flank_sign: int
    pattern: int  # 1: positive flank first, 2: negative flank first
    inner_length: int


@dataclass(frozen=True)
class PinchTrace:
    word: str
    squared: bool
    initial_length: int
    events: tuple[PinchEvent, ...]
    final_word: str
    emptied: bool

    def to_json_dict(self) -> dict:
        return {
            "word": self.word,
            "squared": self.squared,
            "initial_length": self.initial_length,
            "events": [
                {
                    "stable": e.stable,
                    "positions": list(e.positions),
                    "flank_sign": e.flank_sign,
                    "pattern": e.pattern,
                    "inner_length": e.inner_length,
                }
                for e in self.events
            ],
            "final_word": self.final_word,
            "emptied": self.emptied,
        }


def _stable_candidates(ctx: EmbeddingContext, w: GroupWord) -> list[str]:
    """Stable letters to try, starting with the edges of the loop of the
    first generator occurring in the word, in traversal order."""
    seen: set[str] = set()
    order: list[str] = []
    for gen, _ in w.letters:
        for e_gen, _sign in ctx.letter_image(gen, 1, False):
            if e_gen not in seen:
                seen.add(e_gen)
                order.append(e_gen)
    for g in ctx.a_gamma.generators:
        if g not in seen:
            seen.add(g)
            order.append(g)
    return order


def pinch_trace(w: GroupWord, ctx: EmbeddingContext, squared: bool = True) -> PinchTrace:
    """Replay pinch elimination on the image word.

    Each event deletes the two flanking letters of a detected pinch, which
    preserves the element; a trivial image is driven all the way to the
    empty word, a nontrivial one gets stuck at a pinch-free spelling.
    """
    image = phi_psi(w, ctx, squared)
    current = list(image.letters)
    events: list[PinchEvent] = []
    candidates = _stable_candidates(ctx, w)
    while current:
        witness = None
        for v in candidates:
            witness = detect_pinch(GroupWord(tuple(current)), v, ctx.a_gamma)
            if witness is not None:
                break
        if witness is None:
            break
        i, j = witness.positions
        flank = current[i][1]
        events.append(
            PinchEvent(
                stable=witness.stable,
                positions=(i, j),
                flank_sign=flank,
                pattern=1 if flank > 0 else 2,
                inner_length=j - i - 1,
            )
        )
        del current[j]
        del current[i]
    return PinchTrace(
        word=str(w),
        squared=squared,
        initial_length=len(image),
        events=tuple(events),
        final_word=str(GroupWord(tuple(current))),
        emptied=not current,
    )


# --- the squaring counterexample -------------------------------------------


@dataclass(frozen=True)
class CounterexampleReport:
    applicable: bool
    word: str = ""
    nontrivial_in_source: bool = False
    unsquared_image_trivial: bool = False
    squared_image_nontrivial: bool = False

    @property
    def ok(self) -> bool:
        return self.applicable and (
            self.nontrivial_in_source
            and self.unsquared_image_trivial
            and self.squared_image_nontrivial
        )

    def to_json_dict(self) -> dict:
        return {
            "applicable": self.applicable,
            "word": self.word,
            "nontrivial_in_source": self.nontrivial_in_source,
            "unsquared_image_trivial": self.unsquared_image_trivial,
            "squared_image_nontrivial": self.squared_image_nontrivial,
            "ok": self.ok,
        }


def counterexample_roles(delta: SimpleGraph) -> dict[str, str] | None:
    """Role map for the squaring counterexample: three vertices, exactly one
    edge. The commuting pair takes the outer roles, the free vertex the
    middle one."""
    if delta.n_vertices != 3 or delta.n_edges != 1:
        return None
    (u, v), = delta.edges
    (middle,) = [x for x in delta.vertices if x not in (u, v)]
    return {"a": u, "b": middle, "c": v}


def counterexample_word(delta: SimpleGraph) -> GroupWord:
    roles = counterexample_roles(delta)
    if roles is None:
        raise InputError(
            "the squaring counterexample needs three vertices with exactly one edge"
        )
    a, b, c = roles["a"], roles["b"], roles["c"]
    return GroupWord.from_pairs(
        [(c, 1), (b, 1), (a, 1), (b, -1), (c, -1), (b, 1), (a, -1), (b, -1)]
    )


def counterexample_report(
    delta: SimpleGraph, path_threshold: str = "paper"
) -> CounterexampleReport:
    """Evaluate the three booleans of the squaring counterexample.

    Uses the 3-coloring that gives every vertex its own strand, so that the
    unsquared composite genuinely kills the witness word.
    """
    roles = counterexample_roles(delta)
    if roles is None:
        return CounterexampleReport(applicable=False)
    coloring = Coloring.make(
        delta, {roles["a"]: 1, roles["b"]: 2, roles["c"]: 3}
    )
    ctx = build_context(delta, coloring, path_threshold)
    g = counterexample_word(delta)
    return CounterexampleReport(
        applicable=True,
        word=str(g),
        nontrivial_in_source=not is_trivial(g, ctx.source_group),
        unsquared_image_trivial=is_trivial(phi_psi(g, ctx, squared=False), ctx.a_gamma),
        squared_image_nontrivial=not is_trivial(phi_psi(g, ctx, squared=True), ctx.a_gamma),
    )


# --- the full suite ---------------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    details: dict
    witnesses: tuple[str, ...]
    seconds: float


@dataclass(frozen=True)
class VerificationReport:
    passed: bool
    path_threshold: str
    checks: tuple[CheckResult, ...]

    def __bool__(self) -> bool:
        return self.passed

    def check(self, name: str) -> CheckResult | None:
        for c in self.checks:
            if c.name == name:
                return c
        return None

    def to_json_dict(self, include_timings: bool = False) -> dict:
        # timings are excluded by default so identical inputs serialize to
        # identical bytes
        out_checks = []
        for c in self.checks:
            entry = {
                "name": c.name,
                "pass": c.passed,
                "details": c.details,
                "witnesses": list(c.witnesses),
            }
            if include_timings:
                entry["seconds"] = c.seconds
            out_checks.append(entry)
        return {
            "pass": self.passed,
            "path_threshold": self.path_threshold,
            "checks": out_checks,
        }

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            status = "pass" if c.passed else "FAIL"
            lines.append(f"[{status}] {c.name} ({c.seconds:.3f}s)")
            for key, value in sorted(c.details.items()):
                lines.append(f"    {key}: {value}")
            for w in c.witnesses:
                lines.append(f"    witness: {w}")
        lines.append("overall: " + ("pass" if self.passed else "FAIL"))
        return "\n".join(lines) + "\n"


def verify_suite(
    delta: SimpleGraph,
    coloring: Coloring,
    *,
    max_len: int = 4,
    sample_count: int = 500,
    seed: int = 0,
    path_threshold: str = "paper",
    halo: Halo | None = None,
) -> VerificationReport:
    """Run every pipeline check over one input and collect a report:
    halo axioms, subdivision, the homomorphism property, the injectivity
    spot check, and, for the matching shape, the squaring counterexample."""
    checks: list[CheckResult] = []

    def run(name: str, fn) -> bool:
        start = time.perf_counter()
        passed, details, witnesses = fn()
        checks.append(
            CheckResult(
                name=name,
                passed=passed,
                details=details,
                witnesses=tuple(witnesses),
                seconds=time.perf_counter() - start,
            )
        )
        return passed

    base_halo = halo if halo is not None else build_halo(delta, coloring)

    def check_axioms():
        report = verify_halo(base_halo)
        details = {
            "axioms_violated": list(report.axioms_violated()),
            "loops": len(base_halo.artin_loops),
            "planar": is_planar(base_halo.gamma),
        }
        witnesses = [v.message for v in report.violations]
        return report.ok, details, witnesses

    if not run("halo-axioms", check_axioms):
        return VerificationReport(False, path_threshold, tuple(checks))

    n = coloring.color_count
    sub = subdivided_halo(base_halo, n, path_threshold)

    def check_subdivision():
        report = is_sufficiently_subdivided(sub.gamma, n, path_threshold)
        details = report.to_json_dict()
        return report.ok, details, []

    ok = run("subdivision", check_subdivision)
    if not ok:
        return VerificationReport(False, path_threshold, tuple(checks))

    ctx = EmbeddingContext(sub, path_threshold)

    def check_hom():
        report = check_homomorphism(ctx)
        witnesses = [
            f"{r.edge[0]} {r.edge[1]}" for r in report.relators if not r.ok
        ]
        return report.ok, {"relators": len(report.relators)}, witnesses

    overall = run("homomorphism", check_hom)

    def check_injectivity():
        report = injectivity_spot_check(
            ctx, max_len=max_len, sample_count=sample_count, seed=seed, squared=True
        )
        details = report.to_json_dict()
        failures = details.pop("failures")
        return report.ok, details, failures

    overall = run("injectivity-spot-check", check_injectivity) and overall

    if counterexample_roles(delta) is not None:

        def check_counterexample():
            report = counterexample_report(delta, path_threshold)
            details = report.to_json_dict()
            return report.ok, details, []

        overall = run("squaring-counterexample", check_counterexample) and overall

    return VerificationReport(overall, path_threshold, tuple(checks))
