"""
Conjugacy of 4-braids when at least one of them is not pseudo-Anosov.

Reducible braids are conjugated until they preserve a round curve (a tube).
For a tube around three punctures the braid is an inner 3-braid times a power
of the full twist of the outer strand around the tube.  For a tube around two
punctures it is a cabled 3-braid (the tube becomes one fat strand) times a
power of the generator inside the tube.  Conjugacy then reduces to comparing
the twist counts and deciding conjugacy of the 3-braids.
"""

from __future__ import annotations

from dataclasses import dataclass

from .curves import Curve, act, is_round, round_curve
from .reducibility import (
    BLOW_UP,
    DIRECT,
    PERIODIC,
    PSEUDO_ANOSOV,
    NTType,
    ReductionWitness,
    nt_type,
    reduction_to_round,
)
from .summit import (
    ConjugacyAnswer,
    SSSOverflow,
    b3_conjugacy,
    marked_sss_enumerate,
    sss_enumerate_bounded,
    sss_representative,
    verify_conjugator,
)
from .words import (
    BraidError,
    BraidWord,
    StrandMismatch,
    conjugate_word,
    delete_strand,
    delta_word,
    exponent_sum,
    outer_crossing_count,
    remove_strand,
    underlying_permutation,
)

CONJUGATE = "Conjugate"
NOT_CONJUGATE = "NotConjugate"
UNDECIDED = "Undecided"
UNDECIDED_PA = "Undecided-both-pA"


# -- cabling -------------------------------------------------------------------------


def cable(z: BraidWord, fat: int) -> tuple[BraidWord, int]:
    """Double the strand of z starting at position ``fat`` (parallel cabling).

    Returns the braid on z.n + 1 strands and the final position of the fat
    strand in z.
    """
    if not 1 <= fat <= z.n:
        raise BraidError(f"strand {fat} out of range for B_{z.n}")
    f = fat
    out: list[int] = []
    for x in z.letters:
        i, e = abs(x), (1 if x > 0 else -1)
        if i == f:
            out.extend((e * (i + 1), e * i))
            f = i + 1
        elif i + 1 == f:
            out.extend((e * i, e * (i + 1)))
            f = i
        elif i > f:
            out.append(e * (i + 1))
        else:
            out.append(e * i)
    return BraidWord(z.n + 1, tuple(out)), f


def outer_twist(n: int = 4) -> BraidWord:
    """Strand n going once around the block of strands 1..n-1."""
    return BraidWord(n, tuple(range(n - 1, 0, -1)) + tuple(range(1, n)))


def tube3_braid(inner: BraidWord, k: int) -> BraidWord:
    """Braid fixing round(1,3): inner on strands 1..3, strand 4 winding k times."""
    if inner.n != 3:
        raise StrandMismatch("inner braid must have 3 strands")
    return BraidWord(4, inner.letters) * outer_twist(4) ** k


def tube2_braid(z: BraidWord, fat: int, m: int) -> BraidWord:
    """Cable of the 3-braid z at ``fat`` followed by m crossings inside the tube."""
    if z.n != 3:
        raise StrandMismatch("outer braid must have 3 strands")
    lifted, f = cable(z, fat)
    return lifted * BraidWord(4, ((f if m > 0 else -f),) * abs(m))


# -- tube decomposition --------------------------------------------------------------


@dataclass(frozen=True)
class TubeDecomposition:
    """P^-1 a P preserves ``round_curve`` and equals the reassembled tube braid.

    Three punctures: ``outer`` is the 2-braid (tube, last strand), ``inner``
    the 3-braid inside, ``windings`` = [turns of the outer strand].
    Two punctures: ``outer`` is the 3-braid with the tube as fat strand
    ``fat``, ``inner`` the 2-braid inside, ``windings`` = [inner crossings].
    """

    conjugator: BraidWord
    round_curve: Curve
    outer: BraidWord
    inner: BraidWord
    windings: tuple[int, ...]
    fat: int | None = None

    def reassemble(self) -> BraidWord:
        if self.round_curve.enclosed == 3:
            k = self.windings[0]
            return tube3_braid(self.inner, k)
        return tube2_braid(self.outer, self.fat, self.windings[0])


def tube_decompose(a: BraidWord, c: Curve) -> TubeDecomposition:
    if a.n != 4 or c.n != 4:
        raise StrandMismatch("tube decomposition is for 4-braids")
    block = is_round(c)
    if block is None:
        raise BraidError("curve is not round")
    if act(c, a) != c:
        raise BraidError("curve is not fixed by the braid")
    lo, hi = block
    if c.enclosed == 3:
        q = BraidWord.identity(4) if block == (1, 3) else delta_word(4)
        b = conjugate_word(a, q)
        v = outer_crossing_count(b, 4)
        if v % 6:
            raise BraidError("outer strand does not wind an integral number of times")  # pragma: no cover
        inner = remove_strand(b, 4)
        k = v // 6
        outer = BraidWord(2, (1,) * (2 * k) if k >= 0 else (-1,) * (-2 * k))
        return TubeDecomposition(q, act(c, q), outer, inner, (k,))
    z, _ = delete_strand(a, hi)
    lifted, _ = cable(z, lo)
    m = exponent_sum(a) - exponent_sum(lifted)
    inner = BraidWord(2, (1,) * m if m >= 0 else (-1,) * (-m))
    return TubeDecomposition(BraidWord.identity(4), c, z, inner, (m,), fat=lo)


# -- round positions ---------------------------------------------------------------


def round_positions(a: BraidWord, kind: NTType | None = None) -> list[tuple[BraidWord, Curve]]:
    """Pairs (P, R): R round and fixed by P^-1 a P itself (not only a power)."""
    kind = kind or nt_type(a)
    w = kind.witness
    if w is None:
        return []
    out = []
    for c in kind.curves or (w.curve,):
        cand = ReductionWitness(w.conjugator, c, w.via, w.braid, w.j)
        p, r = reduction_to_round(a, cand)
        if act(r, conjugate_word(a, p)) == r:
            out.append((p, r))
    if w.via == BLOW_UP and out:
        out.extend(_second_tubes(a, out[0]))
    return out


def _second_tubes(a: BraidWord, pos: tuple[BraidWord, Curve]) -> list[tuple[BraidWord, Curve]]:
    """Round positions for a second 2-puncture tube, disjoint from the first."""
    p, r = pos
    td = tube_decompose(conjugate_word(a, p), r)
    z, fat = td.outer, td.fat
    y, g, _ = sss_representative(z)
    mark = underlying_permutation(g)[fat - 1] + 1
    out = []
    for lo in (1, 2):
        if mark in (lo, lo + 1):
            continue
        c = round_curve(3, lo, lo + 1)
        if act(c, y.word()) != c:
            continue
        lifted, _ = cable(g, fat)
        q = p * lifted
        big = lo if mark > lo + 1 else lo + 1
        rr = round_curve(4, big, big + 1)
        if act(rr, conjugate_word(a, q)) == rr:
            out.append((q, rr))
    return out


# -- deciders ----------------------------------------------------------------------


def _checked(a: BraidWord, b: BraidWord, g: BraidWord) -> ConjugacyAnswer:
    if not verify_conjugator(a, b, g):
        raise BraidError("assembled conjugator does not verify")  # pragma: no cover
    return ConjugacyAnswer(CONJUGATE, witness=g)


def _by_summit_sets(a: BraidWord, b: BraidWord, cap: int = 20000) -> ConjugacyAnswer:
    """Complete search through the super summit set of a (bounded)."""
    try:
        sa = sss_enumerate_bounded(a, cap)
    except SSSOverflow:
        return ConjugacyAnswer(UNDECIDED)
    yb, gb, _ = sss_representative(b)
    if yb not in sa:
        return ConjugacyAnswer(NOT_CONJUGATE, obstruction="super-summit-set")
    return _checked(a, b, sa.conjugators[yb] * ~gb)


def conjugate_periodic(a: BraidWord, b: BraidWord) -> ConjugacyAnswer:
    return _periodic(a, b, nt_type(a), nt_type(b))


def _periodic(a, b, ka, kb) -> ConjugacyAnswer:
    if ka.tag != PERIODIC or kb.tag != PERIODIC:
        raise BraidError("conjugate_periodic needs two periodic braids")
    if exponent_sum(a) != exponent_sum(b):
        return ConjugacyAnswer(NOT_CONJUGATE, obstruction="exponent-sum")
    ans = _by_summit_sets(a, b)
    if ans.tag == NOT_CONJUGATE:
        raise BraidError("periodic braids with equal exponent sums must be conjugate")  # pragma: no cover
    return ans


def _tube3_compare(a, pa, ra, b, pb, rb) -> ConjugacyAnswer:
    ta = tube_decompose(conjugate_word(a, pa), ra)
    tb = tube_decompose(conjugate_word(b, pb), rb)
    if ta.windings != tb.windings:
        return ConjugacyAnswer(NOT_CONJUGATE, obstruction="winding-numbers")
    if exponent_sum(a) != exponent_sum(b):
        return ConjugacyAnswer(NOT_CONJUGATE, obstruction="exponent-sum")
    inner = b3_conjugacy(ta.inner, tb.inner)
    if not inner.conjugate:
        return ConjugacyAnswer(NOT_CONJUGATE, obstruction="inner-braid-class")
    lifted = BraidWord(4, inner.witness.letters)
    return _checked(a, b, pa * ta.conjugator * lifted * ~tb.conjugator * ~pb)


def _tube2_compare(a, pa, ra, b, pb, rb) -> ConjugacyAnswer:
    ta = tube_decompose(conjugate_word(a, pa), ra)
    tb = tube_decompose(conjugate_word(b, pb), rb)
    if ta.windings != tb.windings:
        return ConjugacyAnswer(NOT_CONJUGATE, obstruction="winding-numbers")
    if exponent_sum(a) != exponent_sum(b):
        return ConjugacyAnswer(NOT_CONJUGATE, obstruction="exponent-sum")
    states = marked_sss_enumerate(ta.outer, ta.fat)
    yb, gb, _ = sss_representative(tb.outer)
    key = (yb, underlying_permutation(gb)[tb.fat - 1] + 1)
    if key not in states:
        return ConjugacyAnswer(NOT_CONJUGATE, obstruction="inner-braid-class")
    h = states[key] * ~gb
    lifted, _ = cable(h, ta.fat)
    return _checked(a, b, pa * lifted * ~pb)


def _compare_positions(a, pos_a, b, pos_b, compare) -> ConjugacyAnswer:
    """Match the first tube of a against every tube of b.

    Without a tube on either side (the braid only permutes its reduction
    curves) the super summit sets are compared directly.
    """
    if not pos_a or not pos_b:
        return _by_summit_sets(a, b)
    pa, ra = pos_a[0]
    first = None
    for pb, rb in pos_b:
        ans = compare(a, pa, ra, b, pb, rb)
        if ans.conjugate:
            return ans
        first = first or ans
    return first


def _reducible(a, b, ka, kb, via) -> ConjugacyAnswer:
    for k in (ka, kb):
        if k.witness is None or k.witness.via != via:
            raise BraidError(f"both braids must be reducible via {via}")
    pos_a = round_positions(a, ka)
    pos_b = round_positions(b, kb)
    if via == DIRECT:
        pos_a = [p for p in pos_a if p[1].enclosed == 3]
        pos_b = [p for p in pos_b if p[1].enclosed == 3]
        return _compare_positions(a, pos_a, b, pos_b, _tube3_compare)
    return _compare_positions(a, pos_a, b, pos_b, _tube2_compare)


def conjugate_reducible3(a: BraidWord, b: BraidWord) -> ConjugacyAnswer:
    return _reducible(a, b, nt_type(a), nt_type(b), DIRECT)


def conjugate_reducible2(a: BraidWord, b: BraidWord) -> ConjugacyAnswer:
    return _reducible(a, b, nt_type(a), nt_type(b), BLOW_UP)


def conjugate_nonpa(a: BraidWord, b: BraidWord) -> ConjugacyAnswer:
    if a.n != 4 or b.n != 4:
        raise StrandMismatch("conjugacy is implemented for 4-braids")
    ka, kb = nt_type(a), nt_type(b)
    if ka.tag == PSEUDO_ANOSOV and kb.tag == PSEUDO_ANOSOV:
        return ConjugacyAnswer(UNDECIDED_PA)
    if ka.tag != kb.tag:
        return ConjugacyAnswer(NOT_CONJUGATE, obstruction="type-mismatch")
    if ka.tag == PERIODIC:
        return _periodic(a, b, ka, kb)
    if ka.witness.via != kb.witness.via:
        return ConjugacyAnswer(NOT_CONJUGATE, obstruction="type-mismatch")
    return _reducible(a, b, ka, kb, ka.witness.via)
