"""
Braid words in the Artin generators.

A letter is a nonzero integer: ``i`` stands for sigma_i and ``-i`` for its
inverse, with ``1 <= i <= n-1``.  Words are never freely reduced implicitly.

Text format: ``n=<strands>`` header (optional when the strand count is given
separately) followed by whitespace separated tokens ``s<i>`` / ``S<i>``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence


class BraidError(ValueError):
    """Raised on malformed braids or violated preconditions."""


class StrandMismatch(BraidError):
    pass


@dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 2:
            raise BraidError(f"need at least 2 strands, got {self.n}")
        letters = tuple(int(x) for x in self.letters)
        for x in letters:
            if x == 0 or abs(x) >= self.n:
                raise BraidError(f"generator {x} out of range for B_{self.n}")
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return word_concat(self, other)

    def __pow__(self, t: int) -> BraidWord:
        return word_power(self, t)

    def __invert__(self) -> BraidWord:
        return word_inverse(self)

    def __str__(self) -> str:
        return format_word(self)

    @classmethod
    def identity(cls, n: int) -> BraidWord:
        return cls(n, ())

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> BraidWord:
        return parse_word(text, n)


def _check_same(a: BraidWord, b: BraidWord) -> None:
    if a.n != b.n:
        raise StrandMismatch(f"strand counts differ: {a.n} vs {b.n}")


def word_concat(a: BraidWord, b: BraidWord) -> BraidWord:
    _check_same(a, b)
    return BraidWord(a.n, a.letters + b.letters)


def word_inverse(a: BraidWord) -> BraidWord:
    return BraidWord(a.n, tuple(-x for x in reversed(a.letters)))


def word_power(a: BraidWord, t: int) -> BraidWord:
    if t >= 0:
        return BraidWord(a.n, a.letters * t)
    return BraidWord(a.n, word_inverse(a).letters * (-t))


def word_product(n: int, words: Iterable[BraidWord]) -> BraidWord:
    letters: list[int] = []
    for w in words:
        if w.n != n:
            raise StrandMismatch(f"strand counts differ: {n} vs {w.n}")
        letters.extend(w.letters)
    return BraidWord(n, tuple(letters))


def conjugate_word(a: BraidWord, g: BraidWord) -> BraidWord:
    """The word g^-1 a g."""
    return word_product(a.n, (word_inverse(g), a, g))


def delta_word(n: int) -> BraidWord:
    """(s1...s_{n-1})(s1...s_{n-2})...(s1 s2) s1."""
    letters: list[int] = []
    for top in range(n - 1, 0, -1):
        letters.extend(range(1, top + 1))
    return BraidWord(n, tuple(letters))


def exponent_sum(a: BraidWord) -> int:
    return sum(1 if x > 0 else -1 for x in a.letters)


# -- permutations -------------------------------------------------------------
# A permutation is a tuple ``perm`` with ``perm[i]`` the (0-based) final
# position of the strand starting at position i.


def underlying_permutation(a: BraidWord) -> tuple[int, ...]:
    at = list(range(a.n))  # at[p] = strand currently at position p
    for x in a.letters:
        i = abs(x) - 1
        at[i], at[i + 1] = at[i + 1], at[i]
    perm = [0] * a.n
    for pos, strand in enumerate(at):
        perm[strand] = pos
    return tuple(perm)


def is_pure(a: BraidWord) -> bool:
    return underlying_permutation(a) == tuple(range(a.n))


def permutation_order(perm: Sequence[int]) -> int:
    from math import lcm

    seen = [False] * len(perm)
    order = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length, k = 0, start
        while not seen[k]:
            seen[k] = True
            k = perm[k]
            length += 1
        order = lcm(order, length)
    return order


# -- strand bookkeeping -------------------------------------------------------


def _check_strand(a: BraidWord, k: int) -> None:
    if not 1 <= k <= a.n:
        raise BraidError(f"strand {k} out of range for B_{a.n}")


def crossing_matrix(a: BraidWord) -> list[list[int]]:
    """Signed crossing counts between strands, indexed by starting position."""
    at = list(range(a.n))
    m = [[0] * a.n for _ in range(a.n)]
    for x in a.letters:
        i = abs(x) - 1
        s, t = at[i], at[i + 1]
        e = 1 if x > 0 else -1
        m[s][t] += e
        m[t][s] += e
        at[i], at[i + 1] = t, s
    return m


def linking_number(a: BraidWord, i: int, j: int) -> int:
    """Linking number of strands i and j (1-based starting positions) of a pure braid."""
    _check_strand(a, i)
    _check_strand(a, j)
    if not is_pure(a):
        raise BraidError("linking numbers are defined here for pure braids only")
    if i == j:
        raise BraidError("need two distinct strands")
    c = crossing_matrix(a)[i - 1][j - 1]
    if c % 2:
        raise BraidError("odd crossing count between pure strands")  # pragma: no cover
    return c // 2


def outer_crossing_count(a: BraidWord, k: int) -> int:
    """Signed number of crossings involving the strand that starts at position k."""
    _check_strand(a, k)
    return sum(crossing_matrix(a)[k - 1])


def delete_strand(a: BraidWord, k: int) -> tuple[BraidWord, int]:
    """Delete the strand starting at position k; also return its final position.

    Unlike :func:`remove_strand` the strand need not return to its start.
    """
    _check_strand(a, k)
    if a.n < 3:
        raise BraidError("cannot delete a strand from a 2-braid")
    pos = k - 1
    out: list[int] = []
    for x in a.letters:
        i = abs(x) - 1
        if pos == i:
            pos = i + 1
        elif pos == i + 1:
            pos = i
        else:
            idx = abs(x) if i + 1 < pos else abs(x) - 1
            out.append(idx if x > 0 else -idx)
    return BraidWord(a.n - 1, tuple(out)), pos + 1


def remove_strand(a: BraidWord, k: int) -> BraidWord:
    word, end = delete_strand(a, k)
    if end != k:
        raise BraidError(f"strand {k} ends at position {end}, not pure")
    return word


# -- text format ----------------------------------------------------------------

_TOKEN = re.compile(r"^([sS])(\d+)$")
_HEADER = re.compile(r"^n\s*=\s*(\d+)$")


def parse_word(text: str, n: int | None = None) -> BraidWord:
    tokens = text.split()
    if tokens and _HEADER.match(tokens[0]):
        header = int(_HEADER.match(tokens[0]).group(1))
        if n is not None and n != header:
            raise BraidError(f"header says n={header} but n={n} was requested")
        n = header
        tokens = tokens[1:]
    letters = []
    for tok in tokens:
        m = _TOKEN.match(tok)
        if not m:
            raise BraidError(f"bad token {tok!r}")
        i = int(m.group(2))
        letters.append(i if m.group(1) == "s" else -i)
    if n is None:
        n = max((abs(x) for x in letters), default=1) + 1
    return BraidWord(n, tuple(letters))


def format_letters(a: BraidWord) -> str:
    return " ".join(f"s{x}" if x > 0 else f"S{-x}" for x in a.letters)


def format_word(a: BraidWord, header: bool = True) -> str:
    body = format_letters(a)
    if not header:
        return body
    return f"n={a.n} {body}".rstrip()
