"""
Classical Garside structure of B_n: permutation braids, the prefix lattice and
left normal forms.

Simple elements are stored as permutations (``perm[i]`` is the final position of
the strand that starts at position i, 0-based).  Strands i < j cross exactly
when ``perm[i] > perm[j]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Sequence

from .words import BraidError, BraidWord, StrandMismatch

Perm = tuple[int, ...]


# -- raw permutation helpers (cached, used by the hot loops) -------------------


def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def delta_perm(n: int) -> Perm:
    return tuple(range(n - 1, -1, -1))


def generator_perm(n: int, i: int) -> Perm:
    p = list(range(n))
    p[i - 1], p[i] = i, i - 1
    return tuple(p)


def inverse_perm(p: Perm) -> Perm:
    q = [0] * len(p)
    for i, x in enumerate(p):
        q[x] = i
    return tuple(q)


def compose(a: Perm, b: Perm) -> Perm:
    """Permutation of the braid a*b (a on top)."""
    return tuple(b[x] for x in a)


@lru_cache(maxsize=None)
def starting_set(a: Perm) -> frozenset[int]:
    """Generators s_i (1-based) that are prefixes of a."""
    return frozenset(i + 1 for i in range(len(a) - 1) if a[i] > a[i + 1])


@lru_cache(maxsize=None)
def finishing_set(a: Perm) -> frozenset[int]:
    """Generators s_i (1-based) that are suffixes of a."""
    inv = inverse_perm(a)
    return frozenset(i + 1 for i in range(len(a) - 1) if inv[i] > inv[i + 1])


@lru_cache(maxsize=None)
def right_complement(a: Perm) -> Perm:
    """d(a) = a^-1 Delta."""
    n = len(a)
    inv = inverse_perm(a)
    return tuple(n - 1 - inv[j] for j in range(n))


@lru_cache(maxsize=None)
def left_complement(a: Perm) -> Perm:
    """The simple c with c a = Delta."""
    n = len(a)
    return tuple(a.index(n - 1 - i) for i in range(n))


@lru_cache(maxsize=None)
def tau_perm(a: Perm) -> Perm:
    n = len(a)
    return tuple(n - 1 - a[n - 1 - i] for i in range(n))


def tau_power_perm(a: Perm, k: int) -> Perm:
    return tau_perm(a) if k % 2 else a


@lru_cache(maxsize=None)
def meet_perm(a: Perm, b: Perm) -> Perm:
    """Greatest common prefix of two simples (greedy generator extraction)."""
    n = len(a)
    r = identity_perm(n)
    a_rest, b_rest = a, b
    while True:
        common = starting_set(a_rest) & starting_set(b_rest)
        if not common:
            return r
        i = min(common)
        g = generator_perm(n, i)
        r = compose(r, g)
        a_rest = compose(g, a_rest)  # g is an involution
        b_rest = compose(g, b_rest)


def left_divide(t: Perm, b: Perm) -> Perm:
    """The simple t^-1 b, assuming t is a prefix of b."""
    return compose(inverse_perm(t), b)


@lru_cache(maxsize=None)
def renormalize_pair(a: Perm, b: Perm) -> tuple[Perm, Perm]:
    """Make (a, b) left-weighted: returns (a t, t^-1 b) with t = d(a) meet b."""
    t = meet_perm(right_complement(a), b)
    if t == identity_perm(len(a)):
        return a, b
    return compose(a, t), left_divide(t, b)


def is_left_weighted_perm(a: Perm, b: Perm) -> bool:
    return starting_set(b) <= finishing_set(a)


@lru_cache(maxsize=None)
def perm_word(a: Perm) -> tuple[int, ...]:
    """A positive word for the permutation braid of a (bubble sort on targets)."""
    at = list(range(len(a)))
    letters = []
    changed = True
    while changed:
        changed = False
        for i in range(len(a) - 1):
            if a[at[i]] > a[at[i + 1]]:
                at[i], at[i + 1] = at[i + 1], at[i]
                letters.append(i + 1)
                changed = True
    return tuple(letters)


def perm_from_positive_word(n: int, letters: Iterable[int]) -> Perm:
    """Permutation of a positive word, checking that the word is simple."""
    at = list(range(n))
    crossed: set[tuple[int, int]] = set()
    for x in letters:
        if x <= 0:
            raise BraidError("positive word expected")
        i = x - 1
        s, t = at[i], at[i + 1]
        key = (min(s, t), max(s, t))
        if key in crossed:
            raise BraidError("word is not a permutation braid")
        crossed.add(key)
        at[i], at[i + 1] = t, s
    perm = [0] * n
    for pos, strand in enumerate(at):
        perm[strand] = pos
    return tuple(perm)


# -- public types ----------------------------------------------------------------


@dataclass(frozen=True)
class SimpleBraid:
    n: int
    perm: Perm

    def __post_init__(self):
        perm = tuple(self.perm)
        if sorted(perm) != list(range(self.n)):
            raise BraidError(f"{perm} is not a permutation of {self.n} points")
        object.__setattr__(self, "perm", perm)

    @classmethod
    def identity(cls, n: int) -> SimpleBraid:
        return cls(n, identity_perm(n))

    @classmethod
    def delta(cls, n: int) -> SimpleBraid:
        return cls(n, delta_perm(n))

    @classmethod
    def generator(cls, n: int, i: int) -> SimpleBraid:
        return cls(n, generator_perm(n, i))

    @classmethod
    def from_word(cls, n: int, letters: Iterable[int]) -> SimpleBraid:
        return cls(n, perm_from_positive_word(n, letters))

    def is_identity(self) -> bool:
        return self.perm == identity_perm(self.n)

    def is_delta(self) -> bool:
        return self.perm == delta_perm(self.n)

    def word(self) -> BraidWord:
        return BraidWord(self.n, perm_word(self.perm))

    def __len__(self) -> int:
        return len(perm_word(self.perm))

    def __str__(self) -> str:
        w = perm_word(self.perm)
        return ".".join(f"s{x}" for x in w) if w else "1"


def all_simples(n: int) -> list[SimpleBraid]:
    """All n! simple braids, identity first and Delta last."""
    perms = sorted(permutations(range(n)), key=lambda p: (len(perm_word(p)), p))
    return [SimpleBraid(n, p) for p in perms]


def _same(a: SimpleBraid, b: SimpleBraid) -> None:
    if a.n != b.n:
        raise StrandMismatch(f"strand counts differ: {a.n} vs {b.n}")


def meet(a: SimpleBraid, b: SimpleBraid) -> SimpleBraid:
    _same(a, b)
    return SimpleBraid(a.n, meet_perm(a.perm, b.perm))


def complement(a: SimpleBraid) -> SimpleBraid:
    return SimpleBraid(a.n, right_complement(a.perm))


def left_weighted(a: SimpleBraid, b: SimpleBraid) -> bool:
    _same(a, b)
    return is_left_weighted_perm(a.perm, b.perm)


def is_prefix(a: SimpleBraid, b: SimpleBraid) -> bool:
    """Prefix order between simples: a <= b iff meet(a, b) == a."""
    return meet_perm(a.perm, b.perm) == a.perm


def tau(x, k: int = 1):
    """Conjugation by Delta^k, on simples, words or normal forms."""
    if k % 2 == 0:
        return x
    if isinstance(x, SimpleBraid):
        return SimpleBraid(x.n, tau_perm(x.perm))
    if isinstance(x, BraidWord):
        return BraidWord(x.n, tuple((x.n - abs(e)) * (1 if e > 0 else -1) for e in x.letters))
    if isinstance(x, NormalForm):
        return NormalForm(x.n, x.p, tuple(tau(f) for f in x.factors))
    raise TypeError(f"cannot apply tau to {type(x).__name__}")


@dataclass(frozen=True)
class NormalForm:
    """Delta^p x_1 ... x_r in left normal form."""

    n: int
    p: int
    factors: tuple[SimpleBraid, ...] = ()

    @property
    def inf(self) -> int:
        return self.p

    @property
    def sup(self) -> int:
        return self.p + len(self.factors)

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def is_delta_power(self) -> bool:
        return not self.factors

    def word(self) -> BraidWord:
        letters: list[int] = []
        d = perm_word(delta_perm(self.n))
        if self.p >= 0:
            letters.extend(d * self.p)
        else:
            letters.extend(-x for x in reversed(d * (-self.p)))
        for f in self.factors:
            letters.extend(perm_word(f.perm))
        return BraidWord(self.n, tuple(letters))

    def is_valid(self) -> bool:
        perms = [f.perm for f in self.factors]
        if any(q in (identity_perm(self.n), delta_perm(self.n)) for q in perms):
            return False
        return all(is_left_weighted_perm(a, b) for a, b in zip(perms, perms[1:]))

    def __str__(self) -> str:
        body = " . ".join(str(f) for f in self.factors)
        return f"D^{self.p}" + (f" . {body}" if body else "")


# -- normal form computation -----------------------------------------------------


class _Builder:
    """Right-multiplication of a left normal form by simples and Delta^-1.

    Stored factors are twisted lazily: the actual factor i is
    tau^(g xor flag[i]) of the stored permutation, so multiplying by Delta^+-1
    (which applies tau to every factor) costs O(1).
    """

    __slots__ = ("n", "p", "g", "raw", "flag", "ident", "delta")

    def __init__(self, n: int, p: int = 0, factors: Sequence[Perm] = ()):
        self.n = n
        self.p = p
        self.g = 0
        self.raw: list[Perm] = list(factors)
        self.flag: list[int] = [0] * len(self.raw)
        self.ident = identity_perm(n)
        self.delta = delta_perm(n)

    def _get(self, k: int) -> Perm:
        r = self.raw[k]
        return tau_perm(r) if self.g ^ self.flag[k] else r

    def _set(self, k: int, value: Perm) -> None:
        self.raw[k] = value
        self.flag[k] = self.g

    def mul_delta(self, k: int = 1) -> None:
        self.p += k
        if k % 2:
            self.g ^= 1

    def mul_simple(self, s: Perm) -> None:
        if s == self.ident:
            return
        if s == self.delta:
            self.mul_delta()
            return
        self.raw.append(s)
        self.flag.append(self.g)
        k = len(self.raw) - 1
        while k > 0:
            a, b = self._get(k - 1), self._get(k)
            a2, b2 = renormalize_pair(a, b)
            if a2 == a:
                break
            self._set(k, b2)
            if a2 == self.delta:
                # Delta travels to the front, twisting everything to its left.
                del self.raw[k - 1]
                del self.flag[k - 1]
                self.p += 1
                self.g ^= 1
                for j in range(k - 1, len(self.raw)):
                    self.flag[j] ^= 1
                break
            self._set(k - 1, a2)
            k -= 1
        while self.raw and self._get(len(self.raw) - 1) == self.ident:
            self.raw.pop()
            self.flag.pop()

    def mul_letter(self, x: int) -> None:
        if x > 0:
            self.mul_simple(generator_perm(self.n, x))
        else:
            # s_i^-1 = d(s_i) Delta^-1
            self.mul_simple(right_complement(generator_perm(self.n, -x)))
            self.mul_delta(-1)

    def result(self) -> NormalForm:
        facs = tuple(SimpleBraid(self.n, self._get(k)) for k in range(len(self.raw)))
        return NormalForm(self.n, self.p, facs)


def normal_form(a: BraidWord) -> NormalForm:
    b = _Builder(a.n)
    for x in a.letters:
        b.mul_letter(x)
    return b.result()


def normal_form_of_factors(n: int, p: int, factors: Iterable[Perm]) -> NormalForm:
    """Normal form of Delta^p f_1 ... f_k for arbitrary simples f_i."""
    b = _Builder(n, p)
    for f in factors:
        b.mul_simple(f)
    return b.result()


def nf_multiply(x: NormalForm, w: BraidWord) -> NormalForm:
    """Normal form of x * w."""
    if x.n != w.n:
        raise StrandMismatch(f"strand counts differ: {x.n} vs {w.n}")
    b = _Builder(x.n, x.p, [f.perm for f in x.factors])
    for letter in w.letters:
        b.mul_letter(letter)
    return b.result()


def nf_inverse(x: NormalForm) -> NormalForm:
    return normal_form(x.word().__invert__())


def conjugate_nf(x: NormalForm, g: BraidWord) -> NormalForm:
    """Normal form of g^-1 x g."""
    return normal_form((~g) * x.word() * g)


def same_element(a: BraidWord, b: BraidWord) -> bool:
    return normal_form(a) == normal_form(b)


def delta_nf(n: int, k: int = 1) -> NormalForm:
    return NormalForm(n, k, ())
