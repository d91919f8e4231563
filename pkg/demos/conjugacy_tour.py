"""Build reducible 4-braids from tubes and decide conjugacy between them.

    python demos/conjugacy_tour.py
"""

import random

from braidnt.conjugacy import conjugate_nonpa, tube2_braid, tube3_braid, tube_decompose
from braidnt.curves import round_curve
from braidnt.words import conjugate_word, format_word, parse_word

rng = random.Random(1)


def scramble(a, length=8):
    g = tuple(rng.choice((1, -1)) * rng.randint(1, 3) for _ in range(length))
    return conjugate_word(a, parse_word(" ".join(f"s{x}" if x > 0 else f"S{-x}" for x in g), 4))


def ask(a, b):
    ans = conjugate_nonpa(a, b)
    extra = format_word(ans.witness) if ans.witness else ans.obstruction
    print(f"  {ans.tag}: {extra}")


# strand 4 winds once around a tube holding strands 1..3
a = tube3_braid(parse_word("s1 s2", 3), 1)
td = tube_decompose(a, round_curve(4, 1, 3))
print("three-puncture tube", format_word(a), "inner", format_word(td.inner), "windings", td.windings)
ask(a, scramble(tube3_braid(parse_word("s2 s1", 3), 1)))
ask(a, scramble(tube3_braid(parse_word("s1 s2", 3), 2)))

# strands 2 and 3 travel together as one fat strand of a 3-braid
z = parse_word("s1 s1 S2 s1 S2", 3)
b = tube2_braid(z, 2, 1)
print("two-puncture tube", format_word(b))
ask(b, scramble(b))
ask(b, scramble(tube2_braid(z, 2, 3)))

# two tubes exchanged by Delta
c = parse_word("s1 s1 s3 s3 s3 s3", 4)
print("two tubes", format_word(c))
ask(c, parse_word("s1 s1 s1 s1 s3 s3", 4))

print("periodic")
ask(parse_word("s1 s2 s3", 4), scramble(parse_word("s1 s2 s3", 4)))
ask(parse_word("s1 s2 s3", 4), parse_word("s1 s1 s2 s3", 4))
