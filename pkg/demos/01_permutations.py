"""One-line notation, composition, length, and reduced words.

Everything downstream (covers, chains, W-sets) is built on these
conventions, so this demo spells them out explicitly.
"""

from weakorder import Permutation
from weakorder.permutations import (
    compose,
    count_reduced_words,
    evaluate_word,
    left_descents,
    length,
    longest_element,
    reduced_words,
    simple_transposition,
)

u = Permutation.from_text("3241")
v = Permutation.from_text("[2,1,4,3]")

print(f"u = {u}  (digit form {u.as_text(compact=True)})")
print(f"v = {v}")
print(f"u(1) = {u(1)}, composition (u o v)(1) = u(v(1)) = {compose(u, v)(1)}")
print(f"u o v = {u * v}, v o u = {v * u}")
print()

print(f"length(u) = {length(u)} inversions")
print(f"left descents of u: {sorted(left_descents(u))}")
print(f"s_2 in S_4 is {simple_transposition(2, 4)}")
print()

# a word (i_1, ..., i_k) means s_{i_1} o ... o s_{i_k}: rightmost letter first
print(f"evaluate_word((1, 2), 3) = {evaluate_word((1, 2), 3)}")
print(f"evaluate_word((2, 1), 3) = {evaluate_word((2, 1), 3)}")
print()

print(f"all reduced words of u = {u}:")
for word in sorted(reduced_words(u)):
    print(f"  {word}")
print()

w0 = longest_element(4)
print(f"longest element of S_4: {w0}, length {length(w0)}")
print(f"it has {count_reduced_words(w0)} reduced words (counted without listing)")
