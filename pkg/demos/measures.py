"""Exact Bernoulli measures of omega-regular languages.

Pick letter weights (by default uniform); the measure of a language is
the probability that an infinite word drawn letter by letter lies in it.
All arithmetic is exact rational arithmetic.
"""

from fractions import Fraction

from omegabaire import (
    Alphabet,
    DMA,
    Dfa,
    acceptance_probabilities,
    complement,
    format_decimal,
    intersection,
    mu,
    sigma_prefix_free,
    union,
)

ab = Alphabet("ab")

inf_a = DMA.from_parts(ab, 2, 0, [[0, 1], [0, 1]], [{0}, {0, 1}])
ball = DMA.from_parts(ab, 3, 0, [[1, 2], [1, 1], [2, 2]], [{1}])
singleton = DMA.from_parts(ab, 2, 0, [[0, 1], [1, 1]], [{0}])

print("== Uniform measure ==")
print("mu(infinitely many a)      =", mu(inf_a))
print("mu(starts with a)          =", mu(ball))
print("mu(just aaaa...)           =", mu(singleton))
print("mu(complement of the ball) =", mu(complement(ball)))

print()
print("== Additivity, exactly ==")
lhs = mu(union(inf_a, ball)) + mu(intersection(inf_a, ball))
rhs = mu(inf_a) + mu(ball)
print(f"mu(A|B) + mu(A&B) = {lhs}   mu(A) + mu(B) = {rhs}   equal: {lhs == rhs}")

print()
print("== Biased letters ==")
w = {"a": Fraction(1, 10), "b": Fraction(9, 10)}
print("with a:1/10 b:9/10, mu(starts with a) =", mu(ball, w))
print("yet mu(infinitely many a) stays", mu(inf_a, w),
      "(tail events ignore any full-support bias)")

print()
print("== Per-state acceptance probabilities ==")
# eventually only a: state 1 while reading a, state 0 on b
fin_b = DMA.from_parts(ab, 2, 0, [[1, 0], [1, 0]], [{1}])
print("'finitely many b' has measure", mu(fin_b),
      "- probabilities per state:", acceptance_probabilities(fin_b))

print()
print("== Prefix-free word sets ==")
# the words {a, ba}: disjoint cylinders, sigma = 1/2 + 1/4
trie = Dfa(ab, 4, 0, ((1, 2), (3, 3), (1, 3), (3, 3)), frozenset({1}))
print("sigma({a, ba}) =", sigma_prefix_free(trie))
# all words a^k b: the geometric series sums to 1 exactly
aab = Dfa(ab, 3, 0, ((0, 1), (2, 2), (2, 2)), frozenset({1}))
s = sigma_prefix_free(aab)
print("sigma(a* b)    =", s, f"(~ {format_decimal(s, 4)})")
