"""Classify a few 4-braids and show where the reduction curve comes from.

    python demos/classify.py
"""

from braidnt.curves import format_curve, is_round
from braidnt.reducibility import nt_type, reduction_to_round
from braidnt.words import delta_word, format_word, parse_word

BRAIDS = {
    "x": "s1 s2 s3 s2 s2 s1 s3 s3 s1 s3 s2 s1 s1",
    "y": "s2 s3 s1 s1 s2 s3 s2 s2 s2 s3",
    "u": "s1 s2 s1 s3 s2 s2 s3 s2 s1 s1 s1 s2 s3 s3 s2",
    "pA": "s1 S2 s3",
}


def show(name, a):
    r = nt_type(a)
    print(f"{name}: {format_word(a)}")
    print(f"  pure power t={r.power}  ->  {r}")
    if r.witness is None:
        return
    w = r.witness
    kind = "round" if is_round(w.curve) else "almost round"
    print(f"  witness curve ({kind}): {format_curve(w.curve)}")
    p, c = reduction_to_round(a, w)
    print(f"  round position after conjugating by {format_word(p)}: {format_curve(c)}")


if __name__ == "__main__":
    for name, text in BRAIDS.items():
        show(name, parse_word(text, 4))
    show("Delta^3", delta_word(4) ** 3)
