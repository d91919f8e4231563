"""Follow a curve of complexity 2 through the normal form of a braid fixing it.

The braid u slides to a shorter conjugate, so the curve has to be found on the
super summit element; along u itself it never gets simpler than complexity 2.

    python demos/curve_walk.py
"""

from braidnt.curves import Curve, act_simple, complexity_upto, format_curve, standardizer
from braidnt.garside import normal_form
from braidnt.summit import sss_representative
from braidnt.words import format_word, parse_word

u = parse_word("s1 s2 s1 s3 s2 s2 s3 s2 s1 s1 s1 s2 s3 s3 s2", 4)
c = Curve(4, (1, 1, -1, 0), 3)

x = normal_form(u)
print("u =", x)
d = c
for f in x.factors:
    d = act_simple(d, f)
    print(f"  after {f!s:<14} {format_curve(d)}  complexity {complexity_upto(d, 3)}")

path = standardizer(c, 3)
print("simples making the curve round:", " . ".join(str(s) for s in path))

y, g, trace = sss_representative(u)
print("sliding u:")
for line in trace.lines():
    print("  " + line)
print("super summit element", y, "reached with", format_word(g))
