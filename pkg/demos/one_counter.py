"""The one-counter language V and its omega-extensions F1 and F2.

V over {a, b}: a counter starts at 1; a subtracts 1, b adds 2; a word is
in V when the counter reaches 0 exactly at its end. F1 = V c {a,b,c}^w
and F2 = {a,b}^w minus V {a,b}^w. F1 has irrational measure, so no
regular open set can match it even up to measure - and the package
produces checkable evidence of that.
"""

from omegabaire import (
    ball_open,
    counter_run,
    default_counter_spec,
    f1_member_up,
    f1_refute_open,
    f2_member_up,
    f2_nowhere_dense_witness,
    format_decimal,
    irrationality_certificate,
    min_positive_root,
    parse_up,
    survival_probability,
)
from omegabaire.onecounter import F1_ALPHABET

spec = default_counter_spec()

print("== The counter language ==")
for word in ["a", "baaa", "b", "aa", "bab"]:
    r = counter_run(spec, word)
    print(f"  {word:5s} -> {r.status:13s} trace {list(r.trace)}")

print()
print("== Membership of ultimately periodic words ==")
for text, fn, name in [
    ("ac(a)^w", f1_member_up, "F1"),
    ("(c)^w", f1_member_up, "F1"),
    ("baaac(ab)^w", f1_member_up, "F1"),
]:
    print(f"  {text:12s} in {name}:", fn(parse_up(F1_ALPHABET, text)))
for text in ["(b)^w", "a(b)^w", "(ba)^w"]:
    print(f"  {text:12s} in F2:", f2_member_up(parse_up(spec.alphabet, text)))

print()
print("== F2 is nowhere dense: every surviving prefix can be killed ==")
for w in ["", "b", "ba", "bb"]:
    z = f2_nowhere_dense_witness(spec, w)
    print(f"  prefix {w!r:5} + {z!r:7} lands in V:",
          counter_run(spec, w + z).status)

print()
print("== Survival probabilities (exact) ==")
for n in [1, 4, 16, 64]:
    s = survival_probability(spec, n)
    print(f"  n={n:3d}: {str(s):>24s} ~ {format_decimal(s, 8)}")
iv2 = min_positive_root(2, 64)
limit = 1 - iv2.midpoint()
print(f"  limit (3-sqrt(5))/2 ~ {format_decimal(limit, 8)}")

print()
print("== Root isolation and irrationality ==")
iv3 = min_positive_root(3, 64)
print("least positive root of t^3 - 3t + 1 ~", format_decimal(iv3.midpoint(), 10))
print("mu(F1) = that root / 3 ~", format_decimal(iv3.midpoint() / 3, 10))
print()
print(irrationality_certificate(3).render())

print()
print("== No regular open set has measure mu(F1) ==")
rep = f1_refute_open(ball_open(F1_ALPHABET, "c"))
print(rep.render())
