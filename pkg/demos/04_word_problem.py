"""The word problem in partially commutative groups.

Words reduce to a canonical geodesic: cancel every pair whose interior
commutes past it, then read letters back in a fixed order. The demo also
shows Britton pinches, the mechanism behind the injectivity argument.
"""
from raagbraid import (
    GroupWord,
    RaagPresentation,
    SimpleGraph,
    abelianization,
    detect_pinch,
    equal,
    in_special_subgroup,
    is_trivial,
    pinch_reduce,
    raag_reduce,
)

# a and c commute, b commutes with nothing
p = RaagPresentation(SimpleGraph.make(["a", "b", "c"], [("a", "c")]))
W = GroupWord.parse

for text in ("a c a^-1 c^-1", "a b a^-1 b^-1", "c a c^-1 a b b^-1"):
    w = W(text)
    print(f"{text!r:28} -> {str(raag_reduce(w, p))!r}  trivial={is_trivial(w, p)}")

print()
print("a c = c a:", equal(W("a c"), W("c a"), p))
print("a b = b a:", equal(W("a b"), W("b a"), p))

g = W("c b a b^-1 c^-1 b a^-1 b^-1")
print(f"\nthe witness word g = {g}")
print("reduced:", str(raag_reduce(g, p)))
print("exponent sums:", abelianization(g, p))
print("in <a, c>:", in_special_subgroup(g, ["a", "c"], p))

# pinches: v^e g v^-e collapses when g lies in the subgroup of link(v)
w = W("a c a^-1")
witness = detect_pinch(w, "a", p)
print(f"\npinch in {w} over a:", witness.positions, "inner:", str(witness.inner))
print("pinch_reduce:", str(pinch_reduce(w, "a", p)))

nested = W("a a c a^-1 a^-1")
print(f"nested {nested} ->", str(pinch_reduce(nested, "a", p)))
