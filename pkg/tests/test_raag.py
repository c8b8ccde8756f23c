import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from raagbraid import (
    GroupWord,
    RaagPresentation,
    SimpleGraph,
    UnknownVertexError,
    WordFormatError,
    abelianization,
    detect_pinch,
    equal,
    free_reduce,
    in_special_subgroup,
    is_trivial,
    pinch_reduce,
    raag_reduce,
)

from oracles import bfs_is_trivial, minimal_equivalent_length, trivial_closure

W = GroupWord.parse


def presentation(vertices, edges=()):
    return RaagPresentation(SimpleGraph.make(vertices, edges))


FREE_AB = presentation(["a", "b"])
COMM_AC = presentation(["a", "b", "c"], [("a", "c")])


class TestGroupWord:
    def test_parse_both_inverse_syntaxes(self):
        assert W("a b^-1") == W("a ~b")

    def test_str_is_canonical_syntax(self):
        assert str(W("a ~b c^-1")) == "a b^-1 c^-1"

    def test_parse_empty(self):
        assert len(W("")) == 0

    def test_parse_rejects_garbage(self):
        with pytest.raises(WordFormatError):
            W("a^2")
        with pytest.raises(WordFormatError):
            W("~")

    def test_inverse_and_power(self):
        w = W("a b^-1")
        assert str(w.inverse()) == "b a^-1"
        assert str(w.power(2)) == "a b^-1 a b^-1"
        assert str(w.power(-1)) == "b a^-1"
        assert len(w.power(0)) == 0


class TestFreeReduce:
    def test_cancels_pair(self):
        assert len(free_reduce(W("a a^-1"))) == 0

    def test_inner_cancellation(self):
        assert str(free_reduce(W("a b b^-1 a"))) == "a a"

    def test_reduced_unchanged(self):
        w = W("a b a^-1")
        assert free_reduce(w) == w


class TestRaagReduce:
    def test_defining_relator_dies(self):
        assert len(raag_reduce(W("a c a^-1 c^-1"), COMM_AC)) == 0

    def test_free_commutator_survives(self):
        assert len(raag_reduce(W("a b a^-1 b^-1"), FREE_AB)) == 4

    def test_counterexample_word_nontrivial(self):
        g = W("c b a b^-1 c^-1 b a^-1 b^-1")
        assert len(raag_reduce(g, COMM_AC)) > 0
        assert not is_trivial(g, COMM_AC)

    def test_idempotent_and_equal_to_input(self):
        for text in ("a c a^-1", "b a c b^-1 c^-1", "c b a b^-1 c^-1 b a^-1 b^-1"):
            w = W(text)
            r = raag_reduce(w, COMM_AC)
            assert raag_reduce(r, COMM_AC) == r
            assert len(r) <= len(w)
            assert equal(w, r, COMM_AC)

    def test_canonical_under_shuffles(self):
        # a c vs c a commute; both reduce identically
        assert raag_reduce(W("a c"), COMM_AC) == raag_reduce(W("c a"), COMM_AC)

    def test_unknown_generator(self):
        with pytest.raises(UnknownVertexError):
            raag_reduce(W("z"), COMM_AC)


class TestIsTrivialAndEqual:
    def test_empty_trivial(self):
        assert is_trivial(W(""), COMM_AC)

    def test_single_letter_not(self):
        assert not is_trivial(W("a"), COMM_AC)

    def test_commutator_cube_trivial(self):
        # a and c generate a free abelian special subgroup, so triviality is
        # exactly a zero exponent vector; spot-checked against the BFS
        # oracle at small powers
        w = W("a c a^-1 c^-1").power(3)
        assert is_trivial(w, COMM_AC)
        assert bfs_is_trivial(W("a c a^-1 c^-1").letters, [("a", "c")])
        assert bfs_is_trivial(W("a c a^-1 c^-1").power(2).letters, [("a", "c")])

    def test_equal_basic(self):
        assert equal(W("a c"), W("c a"), COMM_AC)
        assert not equal(W("a b"), W("b a"), COMM_AC)
        w = W("c b a")
        assert equal(w, w, COMM_AC)


class TestSpecialSubgroup:
    def test_empty_in_everything(self):
        assert in_special_subgroup(W(""), [], COMM_AC)

    def test_wrong_letters(self):
        assert not in_special_subgroup(W("a"), ["b", "c"], COMM_AC)

    def test_membership_after_reduction(self):
        w = W("b a c a^-1 c^-1")
        assert in_special_subgroup(w, ["b"], COMM_AC)

    def test_unknown_generator_in_gens(self):
        with pytest.raises(UnknownVertexError):
            in_special_subgroup(W("a"), ["z"], COMM_AC)


class TestAbelianization:
    def test_empty(self):
        assert abelianization(W(""), COMM_AC) == {"a": 0, "b": 0, "c": 0}

    def test_commutator_vanishes(self):
        assert all(v == 0 for v in abelianization(W("a b a^-1 b^-1"), FREE_AB).values())

    def test_counterexample_word_in_commutator_subgroup(self):
        g = W("c b a b^-1 c^-1 b a^-1 b^-1")
        assert abelianization(g, COMM_AC) == {"a": 0, "b": 0, "c": 0}

    def test_trivial_implies_zero_but_not_conversely(self):
        w = W("a b a^-1 b^-1")
        assert abelianization(w, FREE_AB) == {"a": 0, "b": 0}
        assert not is_trivial(w, FREE_AB)


class TestPinches:
    def test_basic_pinch_found(self):
        w = W("a c a^-1")  # c is in link(a)
        witness = detect_pinch(w, "a", COMM_AC)
        assert witness is not None
        assert witness.positions == (0, 2)
        assert str(witness.inner) == "c"

    def test_no_pinch_outside_link(self):
        w = W("a b a^-1")  # b is not in link(a)
        assert detect_pinch(w, "a", COMM_AC) is None

    def test_inner_reduction_enables_pinch(self):
        # the interior reduces into the link subgroup even though it is not
        # spelled there
        p = presentation(["v", "a", "x"], [("v", "a")])
        w = W("v x a x^-1 v^-1 x x^-1")
        inner_reducing = W("v x x^-1 a v^-1")
        assert detect_pinch(inner_reducing, "v", p) is not None
        assert detect_pinch(w, "v", p) is None  # x a x^-1 is not in <a>

    def test_pinch_reduce_simple(self):
        assert str(pinch_reduce(W("a c a^-1"), "a", COMM_AC)) == "c"

    def test_pinch_reduce_no_stable_letter(self):
        w = W("b c b^-1")
        assert pinch_reduce(w, "a", COMM_AC) == w

    def test_pinch_reduce_nested(self):
        w = W("a a c a^-1 a^-1")
        out = pinch_reduce(w, "a", COMM_AC)
        assert str(out) == "c"
        assert equal(w, out, COMM_AC)

    def test_pinch_reduce_fixpoint_has_no_pinch(self):
        words = [
            "a c a^-1 b a b^-1",
            "a b a^-1 b^-1 a c",
            "c a c^-1 a^-1 a c a^-1",
        ]
        for text in words:
            w = W(text)
            out = pinch_reduce(w, "a", COMM_AC)
            assert detect_pinch(out, "a", COMM_AC) is None
            assert equal(w, out, COMM_AC)

    def test_britton_contrapositive_small(self):
        # any trivial word containing v admits a v-pinch
        presentations = [
            presentation(["a", "b"]),
            presentation(["a", "b"], [("a", "b")]),
            presentation(["a", "b", "c"], [("a", "c")]),
            presentation(["a", "b", "c"], [("a", "b"), ("b", "c")]),
        ]
        for p in presentations:
            gens = p.generators
            commuting = list(p.graph.edges)
            closure = trivial_closure(gens, commuting, 6)
            for letters in closure:
                if not letters:
                    continue
                word = GroupWord(letters)
                for v in {g for g, _ in letters}:
                    assert detect_pinch(word, v, p) is not None, (letters, v)


class TestOracleAgreementSmall:
    def test_all_words_len4_two_generators(self):
        for edges in ([], [("a", "b")]):
            p = presentation(["a", "b"], edges)
            closure = trivial_closure(["a", "b"], edges, 4)
            signed = [(g, s) for g in "ab" for s in (1, -1)]
            for length in range(5):
                for letters in itertools.product(signed, repeat=length):
                    assert is_trivial(GroupWord(letters), p) == (letters in closure)

    def test_geodesic_length_matches_oracle(self):
        p = COMM_AC
        signed = [(g, s) for g in "abc" for s in (1, -1)]
        import random

        rng = random.Random(3)
        for _ in range(120):
            letters = tuple(rng.choice(signed) for _ in range(rng.randint(0, 6)))
            got = len(raag_reduce(GroupWord(letters), p))
            want = minimal_equivalent_length(letters, [("a", "c")])
            assert got == want, letters

    def test_canonical_form_constant_on_closure(self):
        # every word reachable by swaps and cancellations reduces to the
        # same canonical spelling
        p = COMM_AC
        start = W("b a c a^-1 c^-1 b^-1 a")
        from collections import deque

        commuting = {("a", "c"), ("c", "a")}
        seen = {start.letters}
        queue = deque([start.letters])
        target = raag_reduce(start, p)
        while queue:
            cur = queue.popleft()
            assert raag_reduce(GroupWord(cur), p) == target
            for t in range(len(cur) - 1):
                (g1, s1), (g2, s2) = cur[t], cur[t + 1]
                nxt = None
                if g1 == g2 and s1 == -s2:
                    nxt = cur[:t] + cur[t + 2 :]
                elif (g1, g2) in commuting:
                    nxt = cur[:t] + ((g2, s2), (g1, s1)) + cur[t + 2 :]
                if nxt is not None and nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)


def word_strategy(gens="abc", max_len=8):
    letter = st.tuples(st.sampled_from(list(gens)), st.sampled_from([1, -1]))
    return st.lists(letter, max_size=max_len).map(lambda ls: GroupWord(tuple(ls)))


@settings(max_examples=120, deadline=None)
@given(word_strategy())
def test_reduce_properties(w):
    r = raag_reduce(w, COMM_AC)
    assert len(r) <= len(w)
    assert raag_reduce(r, COMM_AC) == r
    assert equal(w, r, COMM_AC)
    assert is_trivial(w, COMM_AC) == (len(r) == 0)
    if is_trivial(w, COMM_AC):
        assert all(v == 0 for v in abelianization(w, COMM_AC).values())


@settings(max_examples=120, deadline=None)
@given(word_strategy(), st.sampled_from(["a", "b", "c"]))
def test_pinch_reduce_properties(w, v):
    out = pinch_reduce(w, v, COMM_AC)
    assert detect_pinch(out, v, COMM_AC) is None
    assert equal(w, out, COMM_AC)
