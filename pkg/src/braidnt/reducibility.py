"""
Nielsen-Thurston type of 4-braids.

The test runs on a pure power of the braid: periodicity is read off the normal
form, reducibility with a curve around three punctures is found by scanning
the round and almost-round 3-puncture curves of a super summit element, and
curves around two punctures are turned into 3-puncture curves by moving the
boundary of the disk to one of the punctures (the blow-up).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .curves import (
    Curve,
    act,
    is_almost_round,
    is_round,
    round_curve,
    three_puncture_catalogue,
    track_through_factors,
)
from .garside import NormalForm, normal_form
from .summit import sss_representative
from .words import (
    BraidError,
    BraidWord,
    StrandMismatch,
    conjugate_word,
    exponent_sum,
    is_pure,
    permutation_order,
    underlying_permutation,
)

PERIODIC = "Periodic"
REDUCIBLE = "Reducible"
PSEUDO_ANOSOV = "PseudoAnosov"

DIRECT = "direct-3-puncture"
BLOW_UP = "blow-up"


def pure_power(a: BraidWord) -> tuple[BraidWord, int]:
    t = permutation_order(underlying_permutation(a))
    return a**t, t


@dataclass(frozen=True)
class PeriodicData:
    """Conjugacy data of a periodic 4-braid.

    ``base`` is "central" (a power of Delta^2), "delta" (a power of s1 s2 s3)
    or "gamma" (a power of s1 s1 s2 s3); ``exponent`` is the power.
    """

    base: str
    exponent: int


def periodic_class(e: int, n: int = 4) -> PeriodicData:
    """Periodic conjugacy class with exponent sum e (roots of Delta^2 in B_n)."""
    full = n * (n - 1)
    if e % full == 0:
        return PeriodicData("central", e // full)
    if e % (n - 1) == 0:
        return PeriodicData("delta", e // (n - 1))
    if e % n == 0:
        return PeriodicData("gamma", e // n)
    raise BraidError(f"no periodic {n}-braid has exponent sum {e}")


def is_periodic(a: BraidWord) -> PeriodicData | None:
    pure, _ = pure_power(a)
    x = normal_form(pure)
    if x.factors or x.p % 2:
        return None
    return periodic_class(exponent_sum(a), a.n)


# -- three-puncture test -------------------------------------------------------------


def three_puncture_reductions(x: NormalForm) -> list[Curve]:
    """All catalogue curves fixed by x whose images stay of complexity <= 1."""
    if x.n != 4:
        raise StrandMismatch("the three-puncture test is for 4-braids")
    found = []
    for c in three_puncture_catalogue(4).three_puncture_set:
        image = track_through_factors(c, x, 1)
        if image == c:
            found.append(c)
    return found


def has_3puncture_reduction(x: NormalForm) -> Curve | None:
    found = three_puncture_reductions(x)
    return found[0] if found else None


def _summit_search(x: NormalForm | BraidWord) -> tuple[BraidWord, list[Curve]] | None:
    """Slide x into its super summit set and run the three-puncture test.

    Every element of the sliding trace with the final (inf, sup) is already a
    super summit element; they are tested in order, so an input that starts in
    its super summit set is tested as given.
    """
    final, _, trace = sss_representative(x)
    if not final.factors:
        return None
    key = (final.inf, final.sup)
    conj = BraidWord.identity(final.n)
    states = [(trace.start, None)] + [(s.result, s.conjugator) for s in trace.steps]
    for elem, step in states:
        if step is not None:
            conj = conj * step.word()
        if (elem.inf, elem.sup) != key:
            continue
        found = three_puncture_reductions(elem)
        if found:
            return conj, found
    return None


# -- blow-up -----------------------------------------------------------------------


def blow_up_marked(a: BraidWord, j: int) -> tuple[BraidWord, int]:
    """Rewrite a with the boundary moved to puncture j; also return the final marker.

    No purity requirement: the marker follows the strand that starts at j.
    """
    if a.n != 4:
        raise StrandMismatch("blow-up is defined for 4-braids")
    if not 1 <= j <= 4:
        raise BraidError(f"puncture {j} out of range")
    out: list[int] = []
    m = j
    for x in a.letters:
        i, e = abs(x), (1 if x > 0 else -1)
        if i == m - 1:
            out.extend((-3 * e, -2 * e, -1 * e))
            m -= 1
        elif i == m:
            out.extend((-1 * e, -2 * e, -3 * e))
            m += 1
        elif i < m - 1:
            out.append(e * (i - m + 5))
        else:
            out.append(e * (i - m))
    return BraidWord(4, tuple(out)), m


def blow_up(a: BraidWord, j: int) -> BraidWord:
    if not is_pure(a):
        raise BraidError("blow-up needs a pure braid")
    return blow_up_marked(a, j)[0]


def _relabel(m: int, k: int) -> int:
    """Label of position k (5 = the boundary) after cutting at position m."""
    if k == 5:
        return 5 - m
    return k - m if k > m else k - m + 5


# -- classification --------------------------------------------------------------


@dataclass(frozen=True)
class ReductionWitness:
    """g^-1 * braid * g fixes curve.

    For the direct branch ``braid`` is the pure power of the input; for a
    blow-up branch it is the blown-up pure power and ``j`` the puncture used.
    """

    conjugator: BraidWord
    curve: Curve
    via: str
    braid: BraidWord
    j: int | None = None

    def verify(self) -> bool:
        return act(self.curve, conjugate_word(self.braid, self.conjugator)) == self.curve


@dataclass(frozen=True)
class NTType:
    tag: str
    power: int
    periodic: PeriodicData | None = None
    witness: ReductionWitness | None = None
    curves: tuple[Curve, ...] = field(default=(), compare=False)

    def __str__(self) -> str:
        if self.tag == PERIODIC:
            return f"{PERIODIC} {self.periodic.base}^{self.periodic.exponent}"
        if self.tag == REDUCIBLE:
            w = self.witness
            via = w.via if w.j is None else f"{w.via}({w.j})"
            return f"{REDUCIBLE} via={via} curve={w.curve}"
        return PSEUDO_ANOSOV


def nt_type(a: BraidWord) -> NTType:
    if a.n != 4:
        raise StrandMismatch(f"classification is implemented for 4-braids, got n={a.n}")
    xt, t = pure_power(a)
    x = normal_form(xt)
    if not x.factors and x.p % 2 == 0:
        return NTType(PERIODIC, t, periodic=periodic_class(exponent_sum(a)))
    hit = _summit_search(x)
    if hit:
        g, found = hit
        w = ReductionWitness(g, found[0], DIRECT, xt)
        return NTType(REDUCIBLE, t, witness=w, curves=tuple(found))
    for j in range(1, 5):
        b = blow_up(xt, j)
        hit = _summit_search(b)
        if hit:
            g, found = hit
            w = ReductionWitness(g, found[0], BLOW_UP, b, j)
            return NTType(REDUCIBLE, t, witness=w, curves=tuple(found))
    return NTType(PSEUDO_ANOSOV, t)


def reduction_to_round(a: BraidWord, witness: ReductionWitness) -> tuple[BraidWord, Curve]:
    """A conjugator P and a round curve R fixed by P^-1 a^t P (a^t the pure power)."""
    if not witness.verify():
        raise BraidError("witness does not verify")
    g, c = witness.conjugator, witness.curve
    if is_round(c) is None:
        s = is_almost_round(c)
        if s is None:
            raise BraidError("witness curve is neither round nor almost round")
        g = g * s.word()
        c = act(c, s.word())
    xt, _ = pure_power(a)
    if witness.via == DIRECT:
        if witness.braid != xt:
            raise BraidError("witness belongs to a different braid")
        return g, c
    if blow_up(xt, witness.j) != witness.braid:
        raise BraidError("witness belongs to a different braid")
    p, m = blow_up_marked(g, 5 - witness.j)
    lo, hi = is_round(c)
    inside = set(range(lo, hi + 1))
    side = inside if m not in inside else set(range(1, 6)) - inside
    labels = sorted(_relabel(m, k) for k in side)
    r = round_curve(4, labels[0], labels[-1])
    if labels != list(range(labels[0], labels[-1] + 1)) or act(r, conjugate_word(xt, p)) != r:
        raise BraidError("pulled-back curve is not fixed")  # pragma: no cover
    return p, r
