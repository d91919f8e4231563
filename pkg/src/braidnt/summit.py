"""
Conjugacy-invariant Garside machinery: preferred prefix, cyclic sliding, cycling,
super summit representatives, rigidity and super summit set enumeration.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .garside import (
    NormalForm,
    SimpleBraid,
    all_simples,
    conjugate_nf,
    left_divide,
    meet_perm,
    normal_form,
    normal_form_of_factors,
    right_complement,
    tau,
    tau_power_perm,
)
from .words import BraidError, BraidWord, exponent_sum, underlying_permutation, word_product


@dataclass(frozen=True)
class SlidingStep:
    conjugator: SimpleBraid
    result: NormalForm


@dataclass(frozen=True)
class SlidingTrace:
    start: NormalForm
    steps: tuple[SlidingStep, ...] = ()

    @property
    def final(self) -> NormalForm:
        return self.steps[-1].result if self.steps else self.start

    def conjugator(self) -> BraidWord:
        """Product of the step conjugators, conjugating start to final."""
        return word_product(self.start.n, (s.conjugator.word() for s in self.steps))

    def lines(self) -> list[str]:
        out = [f"start {self.start}"]
        for k, step in enumerate(self.steps, 1):
            out.append(f"slide {k}: by {step.conjugator} -> {step.result}")
        return out


def preferred_prefix(x: NormalForm) -> SimpleBraid:
    if not x.factors:
        return SimpleBraid.identity(x.n)
    first = tau_power_perm(x.factors[0].perm, -x.p)
    last = right_complement(x.factors[-1].perm)
    return SimpleBraid(x.n, meet_perm(first, last))


def _conjugate_by_prefix_of_first(x: NormalForm, s) -> NormalForm:
    """s^-1 x s where tau^p(s) is a prefix of the first factor of x."""
    t = tau_power_perm(s, x.p)
    head = left_divide(t, x.factors[0].perm)
    facs = [head] + [f.perm for f in x.factors[1:]] + [s]
    return normal_form_of_factors(x.n, x.p, facs)


def cyclic_sliding(x: NormalForm) -> tuple[NormalForm, SimpleBraid]:
    pfx = preferred_prefix(x)
    if pfx.is_identity():
        return x, pfx
    return _conjugate_by_prefix_of_first(x, pfx.perm), pfx


def cycling(x: NormalForm) -> tuple[NormalForm, SimpleBraid]:
    if not x.factors:
        raise BraidError("cycling needs canonical length > 0")
    c = tau_power_perm(x.factors[0].perm, -x.p)
    return _conjugate_by_prefix_of_first(x, c), SimpleBraid(x.n, c)


def is_rigid(x: NormalForm) -> bool:
    return preferred_prefix(x).is_identity()


def _max_slides(n: int, length: int) -> int:
    half = n * (n - 1) // 2
    return max(length - 1, 0) * (half - 1) + half


def sss_representative(a: BraidWord | NormalForm) -> tuple[NormalForm, BraidWord, SlidingTrace]:
    """Iterated cyclic sliding into the super summit set.

    Stops once neither inf has increased nor canonical length decreased for
    n(n-1)/2 - 1 consecutive slidings, and never after more than
    (l - 1)(n(n-1)/2 - 1) + n(n-1)/2 slidings.
    """
    x = a if isinstance(a, NormalForm) else normal_form(a)
    n = x.n
    quiet_limit = n * (n - 1) // 2 - 1
    cap = _max_slides(n, x.canonical_length)
    steps: list[SlidingStep] = []
    best = (x.inf, x.canonical_length)
    cur, quiet = x, 0
    while cur.factors and quiet < quiet_limit and len(steps) < cap:
        nxt, pfx = cyclic_sliding(cur)
        if pfx.is_identity():
            break
        steps.append(SlidingStep(pfx, nxt))
        cur = nxt
        if cur.inf > best[0] or cur.canonical_length < best[1]:
            best = (max(best[0], cur.inf), min(best[1], cur.canonical_length))
            quiet = 0
        else:
            quiet += 1
    trace = SlidingTrace(x, tuple(steps))
    return cur, trace.conjugator(), trace


# -- super summit set enumeration --------------------------------------------------


@dataclass
class SSSet:
    elements: set[NormalForm] = field(default_factory=set)
    conjugators: dict[NormalForm, BraidWord] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x: NormalForm) -> bool:
        return x in self.elements

    def __iter__(self):
        return iter(self.elements)


class SSSOverflow(BraidError):
    """The bounded enumerator found more elements than allowed (inconclusive)."""


def _add(sset: SSSet, x: NormalForm, word: BraidWord) -> bool:
    if x in sset.elements:
        return False
    sset.elements.add(x)
    sset.conjugators[x] = word
    return True


def b3_sss_enumerate(a: BraidWord) -> SSSet:
    """Complete super summit set of a 3-braid, from cycling orbits of y and tau(y)."""
    if a.n != 3:
        raise BraidError("b3_sss_enumerate needs a 3-braid")
    y, g, _ = sss_representative(a)
    sset = SSSet()
    delta = SimpleBraid.delta(3).word()
    for start, conj in ((y, g), (tau(y), g * delta)):
        _add(sset, start, conj)
        if not start.factors:
            continue
        cur, w = start, conj
        for _ in range(start.canonical_length):
            cur, c = cycling(cur)
            w = w * c.word()
            _add(sset, cur, w)
    return sset


def sss_enumerate_bounded(a: BraidWord | NormalForm, cap: int = 10000) -> SSSet:
    """Closure of one super summit element under conjugation by simples.

    Keeps the conjugates with the same (inf, sup).  Raises SSSOverflow when the
    set exceeds ``cap`` elements.
    """
    seed, g, _ = sss_representative(a)
    n = seed.n
    simples = [s for s in all_simples(n) if not s.is_identity()]
    sset = SSSet()
    _add(sset, seed, g)
    queue = deque([seed])
    key = (seed.inf, seed.sup)
    while queue:
        x = queue.popleft()
        for s in simples:
            y = conjugate_nf(x, s.word())
            if (y.inf, y.sup) != key:
                if y.inf > key[0] or y.sup < key[1]:
                    raise BraidError("seed was not a super summit element")  # pragma: no cover
                continue
            if _add(sset, y, sset.conjugators[x] * s.word()):
                if len(sset) > cap:
                    raise SSSOverflow(f"more than {cap} super summit elements")
                queue.append(y)
    return sset


@dataclass(frozen=True)
class ConjugacyAnswer:
    """Verdict of a conjugacy query.

    ``tag`` is "Conjugate", "NotConjugate" or "Undecided".  For Conjugate,
    ``witness`` is a word g with g^-1 a g = b.  For NotConjugate, ``obstruction``
    names the invariant that differs.
    """

    tag: str
    witness: BraidWord | None = None
    obstruction: str | None = None

    @property
    def conjugate(self) -> bool:
        return self.tag == "Conjugate"


def verify_conjugator(a: BraidWord, b: BraidWord, g: BraidWord) -> bool:
    return normal_form((~g) * a * g) == normal_form(b)


def b3_conjugacy(a: BraidWord, b: BraidWord) -> ConjugacyAnswer:
    if a.n != 3 or b.n != 3:
        raise BraidError("b3_conjugacy needs 3-braids")
    if exponent_sum(a) != exponent_sum(b):
        return ConjugacyAnswer("NotConjugate", obstruction="exponent-sum")
    sa = b3_sss_enumerate(a)
    yb, gb, _ = sss_representative(b)
    if yb not in sa:
        return ConjugacyAnswer("NotConjugate", obstruction="super-summit-set")
    witness = sa.conjugators[yb] * ~gb
    return ConjugacyAnswer("Conjugate", witness=witness)


def marked_sss_enumerate(a: BraidWord, marked: int, cap: int = 100000) -> dict[tuple[NormalForm, int], BraidWord]:
    """Super summit set with one tracked strand position.

    States are (element, position of the marked strand); a conjugator g moves
    the mark from f to perm(g)(f).  Returns state -> conjugator from a.
    """
    seed, g, _ = sss_representative(a)
    n = seed.n
    perm_g = underlying_permutation(g)
    start = (seed, perm_g[marked - 1] + 1)
    simples = [s for s in all_simples(n) if not s.is_identity()]
    found = {start: g}
    queue = deque([start])
    key = (seed.inf, seed.sup)
    while queue:
        x, f = queue.popleft()
        for s in simples:
            y = conjugate_nf(x, s.word())
            if (y.inf, y.sup) != key:
                continue
            state = (y, s.perm[f - 1] + 1)
            if state not in found:
                found[state] = found[(x, f)] * s.word()
                if len(found) > cap:
                    raise SSSOverflow(f"more than {cap} marked states")
                queue.append(state)
    return found
