"""
Simple closed curves in the n-punctured disk D_n.

Curves are stored by their Dynnikov coordinates (a_1..a_{n-2}, b_1..b_{n-2}),
exact Python integers, acted on from the right by braids.  The enclosed
puncture count is carried along as metadata (the action preserves it).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .garside import NormalForm, SimpleBraid, all_simples, perm_word
from .words import BraidError, BraidWord, StrandMismatch


@dataclass(frozen=True)
class Curve:
    n: int
    coords: tuple[int, ...]
    enclosed: int

    def __post_init__(self):
        coords = tuple(int(c) for c in self.coords)
        if len(coords) != 2 * self.n - 4:
            raise BraidError(f"D_{self.n} curves need {2 * self.n - 4} coordinates")
        if not any(coords):
            raise BraidError("the zero vector is not a curve")
        if not 2 <= self.enclosed <= self.n - 1:
            raise BraidError(f"a curve must enclose 2..{self.n - 1} punctures")
        object.__setattr__(self, "coords", coords)

    # equality and hashing: coordinates only (enclosed is derived data)
    def __eq__(self, other):
        if not isinstance(other, Curve):
            return NotImplemented
        return self.n == other.n and self.coords == other.coords

    def __hash__(self):
        return hash((self.n, self.coords))

    @property
    def a(self) -> tuple[int, ...]:
        return self.coords[: self.n - 2]

    @property
    def b(self) -> tuple[int, ...]:
        return self.coords[self.n - 2 :]

    def __str__(self) -> str:
        return format_curve(self)


def format_curve(c: Curve) -> str:
    return f"n={c.n} coords=[{','.join(str(x) for x in c.coords)}] enclosed={c.enclosed}"


def parse_curve(text: str) -> Curve:
    fields = dict(part.split("=", 1) for part in text.split())
    try:
        n = int(fields["n"])
        body = fields["coords"].strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ValueError(body)
        coords = tuple(int(x) for x in body[1:-1].split(",") if x.strip())
        enclosed = int(fields["enclosed"])
    except (KeyError, ValueError) as exc:
        raise BraidError(f"bad curve literal {text!r}") from exc
    return Curve(n, coords, enclosed)


def _pos(x: int) -> int:
    return x if x > 0 else 0


def _neg(x: int) -> int:
    return x if x < 0 else 0


def _act_letter(n: int, a: list[int], b: list[int], letter: int) -> None:
    """In-place update of Dynnikov coordinates (0-based lists) by one letter."""
    i = abs(letter)
    if n == 2:
        return
    if letter > 0:
        if i == 1:
            a0, b0 = a[0], b[0]
            a[0] = b0 - _pos(_pos(b0) - a0)
            b[0] = _pos(b0) - a0
        elif i == n - 1:
            k = n - 3
            ak, bk = a[k], b[k]
            a[k] = bk - _neg(_neg(bk) - ak)
            b[k] = _neg(bk) - ak
        else:
            j = i - 2  # coordinates j = i-1 and j+1 = i, 0-based
            a1, b1, a2, b2 = a[j], b[j], a[j + 1], b[j + 1]
            c = a1 - _neg(b1) - a2 + _pos(b2)
            a[j] = a1 + _pos(b1) + _pos(_pos(b2) - c)
            b[j] = b2 - _pos(c)
            a[j + 1] = a2 + _neg(b2) + _neg(_neg(b1) + c)
            b[j + 1] = b1 + _pos(c)
    else:
        if i == 1:
            a0, b0 = a[0], b[0]
            a[0] = -b0 + _pos(a0 + _pos(b0))
            b[0] = a0 + _pos(b0)
        elif i == n - 1:
            k = n - 3
            ak, bk = a[k], b[k]
            a[k] = -bk + _neg(ak + _neg(bk))
            b[k] = ak + _neg(bk)
        else:
            j = i - 2
            a1, b1, a2, b2 = a[j], b[j], a[j + 1], b[j + 1]
            d = a1 + _neg(b1) - a2 - _pos(b2)
            a[j] = a1 - _pos(b1) - _pos(_pos(b2) + d)
            b[j] = b2 + _neg(d)
            a[j + 1] = a2 - _neg(b2) - _neg(_neg(b1) - d)
            b[j + 1] = b1 - _neg(d)


def act_letters(c: Curve, letters: Iterable[int]) -> Curve:
    m = c.n - 2
    a, b = list(c.coords[:m]), list(c.coords[m:])
    for x in letters:
        _act_letter(c.n, a, b, x)
    return Curve(c.n, tuple(a) + tuple(b), c.enclosed)


def act(c: Curve, w: BraidWord) -> Curve:
    """The curve c * w (right action)."""
    if c.n != w.n:
        raise StrandMismatch(f"curve on D_{c.n} but braid on {w.n} strands")
    return act_letters(c, w.letters)


def act_simple(c: Curve, s: SimpleBraid) -> Curve:
    if c.n != s.n:
        raise StrandMismatch(f"curve on D_{c.n} but braid on {s.n} strands")
    return act_letters(c, perm_word(s.perm))


def act_nf(c: Curve, x: NormalForm) -> Curve:
    return act(c, x.word())


# -- round curves ------------------------------------------------------------------


def round_curve(n: int, i: int, j: int) -> Curve:
    """Geometric circle around punctures i..j.

    Intersection counts: the vertical line between punctures k and k+1 meets it
    twice when i <= k < j, the arcs above and below an interior puncture once
    each, so a = 0 and b_k = (beta_k - beta_{k+1}) / 2.
    """
    if not (1 <= i < j <= n) or (i, j) == (1, n):
        raise BraidError(f"({i},{j}) is not a nondegenerate block of {n} punctures")
    beta = [2 if i <= k < j else 0 for k in range(1, n)]
    b = tuple((beta[k] - beta[k + 1]) // 2 for k in range(n - 2))
    return Curve(n, (0,) * (n - 2) + b, j - i + 1)


@lru_cache(maxsize=None)
def _round_table(n: int) -> dict[Curve, tuple[int, int]]:
    table = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if (i, j) != (1, n):
                table[round_curve(n, i, j)] = (i, j)
    return table


def round_curves(n: int) -> list[Curve]:
    return list(_round_table(n))


def is_round(c: Curve) -> tuple[int, int] | None:
    return _round_table(c.n).get(c)


@lru_cache(maxsize=None)
def _simple_words(n: int) -> tuple[tuple[SimpleBraid, tuple[int, ...]], ...]:
    return tuple((s, perm_word(s.perm)) for s in all_simples(n))


def is_almost_round(c: Curve) -> SimpleBraid | None:
    """A simple s with c * s round, for curves of complexity exactly one."""
    if is_round(c) is not None:
        return None
    for s, letters in _simple_words(c.n):
        if is_round(act_letters(c, letters)) is not None:
            return s
    return None


# depth up to which complexity is read from a precomputed table
_TABLE_DEPTH = {3: 3, 4: 3, 5: 1}


@lru_cache(maxsize=None)
def _complexity_table(n: int, depth: int) -> dict[Curve, int]:
    """Every curve of complexity <= depth, found backwards from the round curves.

    c * s_1 ... s_d is round iff c = R * (s_1 ... s_d)^-1 for a round R.
    """
    inverses = [tuple(-x for x in reversed(w)) for s, w in _simple_words(n) if not s.is_identity()]
    table = {c: 0 for c in round_curves(n)}
    frontier = list(table)
    for d in range(1, depth + 1):
        nxt = []
        for cur in frontier:
            for w in inverses:
                e = act_letters(cur, w)
                if e not in table:
                    table[e] = d
                    nxt.append(e)
        frontier = nxt
    return table


def complexity_upto(c: Curve, k: int) -> int | None:
    """Complexity of c if it is at most k."""
    if k < 0:
        raise BraidError("k must be non-negative")
    if k <= _TABLE_DEPTH.get(c.n, 0):
        d = _complexity_table(c.n, _TABLE_DEPTH[c.n]).get(c)
        return d if d is not None and d <= k else None
    return complexity_search(c, k)


def complexity_search(c: Curve, k: int) -> int | None:
    """Complexity of c if it is at most k, by breadth-first search over simples."""
    if k < 0:
        raise BraidError("k must be non-negative")
    if is_round(c) is not None:
        return 0
    words = [w for s, w in _simple_words(c.n) if not s.is_identity()]
    frontier = {c}
    seen = {c}
    for depth in range(1, k + 1):
        nxt = set()
        for cur in frontier:
            for w in words:
                d = act_letters(cur, w)
                if d in seen:
                    continue
                if is_round(d) is not None:
                    return depth
                seen.add(d)
                nxt.add(d)
        frontier = nxt
    return None


def standardizer(c: Curve, k: int = 3) -> list[SimpleBraid] | None:
    """A shortest product of simples sending c to a round curve (length <= k)."""
    if is_round(c) is not None:
        return []
    simples = [(s, w) for s, w in _simple_words(c.n) if not s.is_identity()]
    parent: dict[Curve, tuple[Curve, SimpleBraid] | None] = {c: None}
    queue = deque([(c, 0)])
    while queue:
        cur, depth = queue.popleft()
        if depth == k:
            continue
        for s, w in simples:
            d = act_letters(cur, w)
            if d in parent:
                continue
            parent[d] = (cur, s)
            if is_round(d) is not None:
                path = []
                node = d
                while parent[node] is not None:
                    prev, step = parent[node]
                    path.append(step)
                    node = prev
                return path[::-1]
            queue.append((d, depth + 1))
    return None


@dataclass(frozen=True)
class CurveCatalogue:
    n: int
    round: tuple[Curve, ...]
    three_puncture_set: tuple[Curve, ...]


def three_puncture_catalogue(n: int = 4) -> CurveCatalogue:
    """Round and almost-round curves around three punctures of D_4."""
    if n != 4:
        raise BraidError("the three-puncture catalogue is defined for n = 4")
    return _catalogue()


@lru_cache(maxsize=None)
def _catalogue() -> CurveCatalogue:
    rounds = tuple(round_curves(4))
    three = [c for c in rounds if c.enclosed == 3]
    found: list[Curve] = list(three)
    for c in three:
        for s, w in _simple_words(4):
            d = act_letters(c, w)
            if d not in found and complexity_upto(d, 1) is not None:
                found.append(d)
    return CurveCatalogue(4, rounds, tuple(found))


def track_through_factors(c: Curve, x: NormalForm, bound: int) -> Curve | None:
    """Apply Delta^p and then each factor of x, failing once complexity exceeds bound."""
    if c.n != x.n:
        raise StrandMismatch(f"curve on D_{c.n} but braid on {x.n} strands")
    cur = c
    if x.p % 2:
        cur = act_simple(cur, SimpleBraid.delta(c.n))
    if x.p and complexity_upto(cur, bound) is None:
        return None
    for f in x.factors:
        cur = act_simple(cur, f)
        if complexity_upto(cur, bound) is None:
            return None
    return cur


def track_complexities(c: Curve, x: NormalForm, bound: int = 3) -> list[int | None]:
    """Complexity after Delta^p and after each successive factor of x."""
    cur = c
    if x.p % 2:
        cur = act_simple(cur, SimpleBraid.delta(c.n))
    out = []
    for f in x.factors:
        cur = act_simple(cur, f)
        out.append(complexity_upto(cur, bound))
    return out
