"""Partially commutative (right-angled Artin) presentations and their words.

A presentation is a finite simple graph: vertices are generators and two
generators commute exactly when they are adjacent. ``raag_reduce`` solves the
word problem with the stack ("piling") normal form: every generator keeps a
pile, a pushed letter either cancels against the matching inverse on top of
its own pile or lands there and drops a blocker on the pile of every
non-commuting generator. Cancellation is legal exactly when no blocker
separates the pair, which is the same condition as deleting a letter pair
x ... x^-1 whose intervening letters all commute with x. Reading the piles
back bottom-up, always taking the smallest available generator, yields a
geodesic spelling that is identical for all words representing the same
element.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import UnknownVertexError, WordFormatError
from .graphs import SimpleGraph

Letter = tuple[str, int]


@dataclass(frozen=True)
class GroupWord:
    """A word over signed generators; the empty word is the identity."""

    letters: tuple[Letter, ...] = ()

    @classmethod
    def parse(cls, text: str) -> "GroupWord":
        """Parse the whitespace-separated text format.

        An inverse letter is written with a trailing ``^-1`` or a leading
        ``~``; output always uses ``^-1``.
        """
        letters: list[Letter] = []
        for token in text.split():
            sign = 1
            if token.endswith("^-1"):
                token, sign = token[:-3], -1
            elif token.startswith("~"):
                token, sign = token[1:], -1
            if not token or "^" in token or token.startswith("~"):
                raise WordFormatError(f"bad letter token {token!r}")
            letters.append((token, sign))
        return cls(tuple(letters))

    @classmethod
    def from_pairs(cls, pairs) -> "GroupWord":
        letters = []
        for gen, sign in pairs:
            if sign not in (1, -1):
                raise WordFormatError(f"letter sign must be +1 or -1, got {sign!r}")
            letters.append((gen, sign))
        return cls(tuple(letters))

    def __str__(self) -> str:
        return " ".join(g if s == 1 else f"{g}^-1" for g, s in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        return GroupWord(self.letters + other.letters)

    def inverse(self) -> "GroupWord":
        return GroupWord(tuple((g, -s) for g, s in reversed(self.letters)))

    def power(self, k: int) -> "GroupWord":
        base = self if k >= 0 else self.inverse()
        return GroupWord(base.letters * abs(k))

    @property
    def generators(self) -> frozenset[str]:
        return frozenset(g for g, _ in self.letters)


class RaagPresentation:
    """Generators and commutation relations read off a simple graph."""

    def __init__(self, graph: SimpleGraph):
        self.graph = graph
        self.generators = graph.vertices
        self._index = {g: i for i, g in enumerate(self.generators)}
        # blockers[i] = indices of the generators that do NOT commute with i,
        # excluding i itself
        adj = graph.adjacency
        self._blockers: tuple[tuple[int, ...], ...] = tuple(
            tuple(
                j
                for j, h in enumerate(self.generators)
                if j != i and h not in adj[g]
            )
            for i, g in enumerate(self.generators)
        )

    def __repr__(self) -> str:
        return f"RaagPresentation({len(self.generators)} generators, {self.graph.n_edges} relations)"

    def index_of(self, gen: str) -> int:
        try:
            return self._index[gen]
        except KeyError:
            raise UnknownVertexError(f"unknown generator {gen!r}") from None

    def commute(self, a: str, b: str) -> bool:
        self.index_of(a)
        return self.graph.has_edge(a, b)

    def link(self, v: str) -> frozenset[str]:
        if v not in self._index:
            raise UnknownVertexError(f"unknown generator {v!r}")
        return self.graph.adjacency[v]

    def _pile(self, letters) -> tuple[list[list[int]], int]:
        piles: list[list[int]] = [[] for _ in self.generators]
        blockers = self._blockers
        count = 0
        for gen, sign in letters:
            i = self.index_of(gen)
            pile = piles[i]
            if pile and pile[-1] == -sign:
                pile.pop()
                for j in blockers[i]:
                    piles[j].pop()
                count -= 1
            else:
                pile.append(sign)
                for j in blockers[i]:
                    piles[j].append(0)
                count += 1
        return piles, count

    def _depile(self, piles: list[list[int]], count: int) -> tuple[Letter, ...]:
        out: list[Letter] = []
        blockers = self._blockers
        while count:
            for i, pile in enumerate(piles):
                if pile and pile[0] != 0:
                    out.append((self.generators[i], pile[0]))
                    del pile[0]
                    for j in blockers[i]:
                        del piles[j][0]
                    count -= 1
                    break
            else:  # pragma: no cover - piles and count always agree
                raise AssertionError("inconsistent piles")
        return tuple(out)

    def reduce_letters(self, letters) -> tuple[Letter, ...]:
        piles, count = self._pile(letters)
        if count == 0:
            return ()
        return self._depile(piles, count)

    def is_trivial_letters(self, letters) -> bool:
        _, count = self._pile(letters)
        return count == 0

    def geodesic_length(self, letters) -> int:
        _, count = self._pile(letters)
        return count


def free_reduce(w: GroupWord) -> GroupWord:
    """Cancel adjacent inverse pairs to a fixpoint (no commutation used)."""
    stack: list[Letter] = []
    for letter in w.letters:
        if stack and stack[-1][0] == letter[0] and stack[-1][1] == -letter[1]:
            stack.pop()
        else:
            stack.append(letter)
    return GroupWord(tuple(stack))


def raag_reduce(w: GroupWord, p: RaagPresentation) -> GroupWord:
    """The canonical geodesic representative of the element spelled by w.

    Output length is the geodesic length, and two words represent the same
    element exactly when their reductions are identical.
    """
    return GroupWord(p.reduce_letters(w.letters))


def is_trivial(w: GroupWord, p: RaagPresentation) -> bool:
    return p.is_trivial_letters(w.letters)


def equal(w1: GroupWord, w2: GroupWord, p: RaagPresentation) -> bool:
    return p.is_trivial_letters(w1.letters + w2.inverse().letters)


def in_special_subgroup(w: GroupWord, gens, p: RaagPresentation) -> bool:
    """Membership in the subgroup generated by a subset of the generators.

    An element lies in it exactly when its geodesic spelling only uses the
    given generators.
    """
    gens = frozenset(gens)
    for g in gens:
        p.index_of(g)
    return all(g in gens for g, _ in p.reduce_letters(w.letters))


def abelianization(w: GroupWord, p: RaagPresentation) -> dict[str, int]:
    """Signed exponent sums, one entry per generator."""
    sums = {g: 0 for g in p.generators}
    for g, s in w.letters:
        if g not in sums:
            raise UnknownVertexError(f"unknown generator {g!r}")
        sums[g] += s
    return sums


@dataclass(frozen=True)
class PinchWitness:
    """A subword v^e g v^-e whose interior g lies in the subgroup of link(v).

    ``positions`` are the letter indices of the two flanking v-letters.
    """

    stable: str
    positions: tuple[int, int]
    inner: GroupWord


def detect_pinch(w: GroupWord, v: str, p: RaagPresentation) -> PinchWitness | None:
    """Leftmost pinch over the stable letter v, or None.

    The word is scanned as w_0 v^e1 w_1 v^e2 ... with the w_i free of v;
    a pinch is a consecutive pair of v-letters with opposite signs whose
    interior reduces into the subgroup generated by link(v).
    """
    p.index_of(v)
    occurrences = [i for i, (g, _) in enumerate(w.letters) if g == v]
    lk = p.link(v)
    for i, j in zip(occurrences, occurrences[1:]):
        if w.letters[i][1] != -w.letters[j][1]:
            continue
        inner = GroupWord(w.letters[i + 1 : j])
        if in_special_subgroup(inner, lk, p):
            return PinchWitness(stable=v, positions=(i, j), inner=inner)
    return None


def pinch_reduce(w: GroupWord, v: str, p: RaagPresentation) -> GroupWord:
    """Delete v-pinch flanks until none remain; the element is unchanged."""
    letters = list(w.letters)
    while True:
        witness = detect_pinch(GroupWord(tuple(letters)), v, p)
        if witness is None:
            return GroupWord(tuple(letters))
        i, j = witness.positions
        del letters[j]
        del letters[i]
