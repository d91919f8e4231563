"""Shared braids, random generators and independent oracles for the tests."""

from __future__ import annotations

import random
from collections import deque
from itertools import permutations

from braidnt.words import BraidWord, parse_word

# the worked braids used throughout the tests
X1 = "s1 s2 s3 s2 . s2 s1 s3 . s3 s1 . s3 s2 s1 . s1"
Y2 = "s2 s3 s1 . s1 s2 s3 s2 . s2 . s2 s3"
Z3 = "s1 s2 s1 s3 s2 s1 . s1 s3 . s1 s3 s2 s4 . s2 s1 s4 s3 s2 s1 . s1 s2 s1 . s1 s2 s1 s3 s2 . s3"
SZ3 = "s1 s3 . s1 s3 s2 s1 s4 . s2 s4 s3 s2 s1 . s1 s2 s3 s2 s1 . s1 s2 s3 s2 . s2 s1 s3 s2 s1 . s1"
U4 = "s1 s2 s1 s3 s2 . s2 s3 s2 s1 . s1 . s1 s2 s3 . s3 s2"


def dotted(text: str, n: int) -> tuple[BraidWord, list[tuple[int, ...]]]:
    """The word and its dot-separated groups."""
    groups = [parse_word(g, n).letters for g in text.split(".")]
    return BraidWord(n, tuple(x for g in groups for x in g)), groups


def random_word(rng: random.Random, n: int, length: int) -> BraidWord:
    return BraidWord(n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length)))


def random_pure_word(rng: random.Random, n: int, length: int) -> BraidWord:
    """A pure braid: a random word times a positive word undoing its permutation."""
    from braidnt.words import underlying_permutation

    w = random_word(rng, n, length)
    at = list(underlying_permutation(w))  # at[strand] = position
    fix: list[int] = []
    pos_of = {at[s]: s for s in range(n)}
    order = [pos_of[p] for p in range(n)]  # strand at each position
    # bubble sort strands back to their starting positions
    changed = True
    while changed:
        changed = False
        for i in range(n - 1):
            if order[i] > order[i + 1]:
                order[i], order[i + 1] = order[i + 1], order[i]
                fix.append(rng.choice((1, -1)) * (i + 1))
                changed = True
    return BraidWord(n, w.letters + tuple(fix))


# -- free group oracle for curves -------------------------------------------------
# A round curve around punctures i..j is the conjugacy class of x_i ... x_j in the
# free group on the puncture loops; braids act by the Artin automorphisms.


def _reduce(w):
    out = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return out


def _cyclic(w):
    w = _reduce(w)
    while len(w) > 1 and w[0] == -w[-1]:
        w = w[1:-1]
    return w


def _inv(w):
    return [-x for x in reversed(w)]


def artin_image(word: list[int], letters) -> list[int]:
    for letter in letters:
        i = abs(letter)
        if letter > 0:
            img = {i: [i, i + 1, -i], i + 1: [i]}
        else:
            img = {i: [i + 1], i + 1: [-(i + 1), i, i + 1]}
        out = []
        for x in word:
            g = img.get(abs(x), [abs(x)])
            out += g if x > 0 else _inv(g)
        word = _reduce(out)
    return word


def loop_class(word: list[int]) -> tuple[int, ...]:
    """Canonical label of the unoriented free homotopy class."""
    w = _cyclic(word)
    cands = []
    for v in (w, _cyclic(_inv(w))):
        cands.extend(tuple(v[k:] + v[:k]) for k in range(len(v)))
    return min(cands) if cands else ()


def round_loop(i: int, j: int) -> list[int]:
    return list(range(i, j + 1))


# -- B3 normal form by rewriting positive words -------------------------------------


def _b3_positive(letters) -> tuple[int, tuple[int, ...]]:
    """Write a B3 word as Delta^k * P with P a positive word.

    Uses s_i^-1 = D^-1 s_i s_j (j the other generator) and P D^-1 = D^-1 tau(P).
    """
    k = 0
    pos: list[int] = []
    for x in letters:
        if x > 0:
            pos.append(x)
        else:
            i = -x
            pos = [3 - y for y in pos] + [i, 3 - i]
            k -= 1
    return k, tuple(pos)


def _positive_class(word: tuple[int, ...]) -> set[tuple[int, ...]]:
    seen = {word}
    queue = deque([word])
    while queue:
        w = queue.popleft()
        for k in range(len(w) - 2):
            a, b, c = w[k : k + 3]
            if a == c and a != b:
                v = w[:k] + (b, a, b) + w[k + 3 :]
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
    return seen


_B3_SIMPLES = {(), (1,), (2,), (1, 2), (2, 1)}


def b3_normal_form_oracle(letters) -> tuple[int, list[tuple[int, ...]]]:
    """Left normal form of a 3-braid by exhaustive rewriting of positive words."""
    k, pos = _b3_positive(letters)
    cls = _positive_class(pos)
    while True:
        with_delta = [w for w in cls if w[:3] in ((1, 2, 1), (2, 1, 2))]
        if not with_delta:
            break
        k += 1
        cls = _positive_class(with_delta[0][3:])
    factors = []
    while True:
        rest_len = len(next(iter(cls)))
        if rest_len == 0:
            break
        best = max((w[:m] for w in cls for m in (1, 2) if w[:m] in _B3_SIMPLES and len(w) >= m), key=len)
        factors.append(best)
        cls = _positive_class(next(w for w in cls if w[: len(best)] == best)[len(best) :])
    return k, factors


# -- simple-braid lattice by brute force ------------------------------------------


def simple_words(n: int) -> dict[tuple[int, ...], tuple[int, ...]]:
    """Permutation -> one reduced positive word, by breadth-first search."""
    start = tuple(range(n))
    out = {start: ()}
    queue = deque([start])
    while queue:
        p = queue.popleft()
        for i in range(n - 1):
            # append s_{i+1}: positions i, i+1 swap; only if it adds a crossing
            q = list(p)
            a = q.index(i)
            b = q.index(i + 1)
            if a > b:
                continue
            q[a], q[b] = i + 1, i
            q = tuple(q)
            if q not in out:
                out[q] = out[p] + (i + 1,)
                queue.append(q)
    return out


def prefixes(n: int, perm) -> set[tuple[int, ...]]:
    """Every simple that is a prefix of the simple with permutation perm."""
    words = simple_words(n)
    out = set()
    for q, w in words.items():
        # q prefixes perm iff length(q) + length(q^-1 perm) == length(perm)
        if _crossings(q) + _crossings(_after(q, perm)) == _crossings(perm):
            out.add(q)
    return out


def _crossings(p) -> int:
    return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])


def _after(q, p):
    """r with q then r equal to p, as position maps: p[i] = r[q[i]]."""
    r = [0] * len(p)
    for i in range(len(p)):
        r[q[i]] = p[i]
    return tuple(r)


def brute_meet(n: int, a, b):
    common = prefixes(n, a) & prefixes(n, b)
    return max(common, key=_crossings)


def all_perms(n: int):
    return list(permutations(range(n)))


# -- constructed reducible braids ----------------------------------------------------


def random_word_fixing(rng: random.Random, n: int, length: int, strand: int) -> BraidWord:
    """A random n-braid of length at least ``length`` in which ``strand`` (1-based) returns home."""
    from braidnt.words import underlying_permutation

    for attempt in range(10**6):
        w = random_word(rng, n, length + attempt // 50)
        if underlying_permutation(w)[strand - 1] == strand - 1:
            return w
    raise RuntimeError("unreachable")  # pragma: no cover


def random_tube_braid(rng: random.Random, max_len: int = 14):
    """A braid preserving a round curve by construction, and that curve."""
    from braidnt.conjugacy import tube2_braid, tube3_braid
    from braidnt.curves import round_curve

    if rng.random() < 0.5:
        k = rng.randint(-1, 1)
        inner = random_word(rng, 3, rng.randint(1, max_len - 6 * abs(k)))
        return tube3_braid(inner, k), round_curve(4, 1, 3)
    while True:
        fat = rng.randint(1, 3)
        m = rng.randint(-2, 2)
        z = random_word_fixing(rng, 3, rng.randint(1, max_len // 2), fat)
        core = tube2_braid(z, fat, m)
        if len(core) <= max_len:
            return core, round_curve(4, fat, fat + 1)


def constructed_reducible(rng: random.Random, total: int = 40):
    """g^-1 * core * g with core a tube braid; total length at most ``total``."""
    from braidnt.words import conjugate_word

    core, c = random_tube_braid(rng)
    g = random_word(rng, 4, rng.randint(0, (total - len(core)) // 2))
    return conjugate_word(core, g), core, g, c
