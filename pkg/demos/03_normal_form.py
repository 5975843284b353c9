"""Normal form: any product of minors as a combination of standard monomials.

A product is standard when its row sets and its column sets both increase
along the factors. The normal-form rewriting straightens leading pairs until
every term is standard, preserving the exact polynomial expansion and the
multiset of row/column indices of every term.
"""

from straightlaw import (
    Minor,
    WordCombination,
    content,
    expand_word,
    is_standard,
    normal_form,
)

word = (Minor([1], [2]), Minor([2], [1]))
print(f"input word: {''.join(map(str, word))}")
print(f"  standard? {is_standard(word)}")

combo = normal_form(WordCombination({word: 1}))
print(f"  normal form: {combo}")
for out, coeff in combo.items():
    print(f"    term {coeff:+d} * {''.join(map(str, out)) or '[|]'}: standard={is_standard(out)}")

print(f"  expansion preserved: {combo.expand() == expand_word(word)}")
rows, cols = content(word)
print(f"  content (rows, cols) = {dict(rows)}, {dict(cols)}")
print(f"  every term has the same content: "
      f"{all(content(w) == (rows, cols) for w, _ in combo.items())}")

print()
three = (Minor([2, 3], [1, 3]), Minor([1, 3], [1, 2]), Minor([2], [3]))
print(f"a longer word: {''.join(map(str, three))}")
combo3 = normal_form(WordCombination({three: 1}))
print(f"  normal form has {len(combo3)} standard terms:")
for out, coeff in combo3.items():
    print(f"    {coeff:+d} * {''.join(map(str, out))}")
assert combo3.expand() == expand_word(three)
assert normal_form(combo3) == combo3
print("  oracle equality and idempotence hold.")
