import random

import pytest
from hypothesis import given, settings, strategies as st

from braidnt.garside import (
    NormalForm,
    SimpleBraid,
    all_simples,
    complement,
    delta_nf,
    is_prefix,
    left_weighted,
    meet,
    normal_form,
    perm_word,
    same_element,
    tau,
)
from braidnt.words import BraidWord, delta_word, parse_word
from helpers import X1, Y2, U4, all_perms, b3_normal_form_oracle, brute_meet, dotted, random_word

letters4 = st.lists(st.integers(1, 3).flatmap(lambda i: st.sampled_from([i, -i])), max_size=25)


def S(*letters, n=4):
    return SimpleBraid.from_word(n, letters)


def test_delta_is_a_pure_delta_power():
    d = normal_form(BraidWord(4, (1, 2, 1, 3, 2, 1)))
    assert (d.p, d.factors) == (1, ())
    assert normal_form(delta_word(4) ** 2) == delta_nf(4, 2)


@pytest.mark.parametrize("text", [X1, Y2, U4])
def test_examples_are_left_normal_as_written(text):
    w, groups = dotted(text, 4)
    x = normal_form(w)
    assert x.p == 0
    assert [perm_word(f.perm) for f in x.factors] == [perm_word(S(*g).perm) for g in groups]
    assert x.is_valid()


def test_normal_form_matches_b3_rewriting_oracle():
    rng = random.Random(3)
    for _ in range(400):
        w = random_word(rng, 3, rng.randint(0, 8))
        x = normal_form(w)
        assert (x.p, [perm_word(f.perm) for f in x.factors]) == b3_normal_form_oracle(w.letters)


def test_left_weighted_examples():
    assert not left_weighted(S(1), S(2))
    assert left_weighted(S(2), S(2))
    w, groups = dotted(X1, 4)
    facs = [S(*g) for g in groups]
    assert all(left_weighted(a, b) for a, b in zip(facs, facs[1:]))


def test_meet_and_complement():
    assert meet(S(1), S(2)).is_identity()
    assert meet(S(1, 2), S(1, 3)) == S(1)
    d = SimpleBraid.delta(4)
    for a in all_simples(4):
        assert meet(d, a) == a
        assert is_prefix(a, d)
        # a * complement(a) = Delta
        assert normal_form(a.word() * complement(a).word()) == delta_nf(4)


def test_meet_agrees_with_lattice_brute_force():
    perms = all_perms(4)
    for a in perms:
        for b in perms:
            m = meet(SimpleBraid(4, a), SimpleBraid(4, b))
            assert m.perm == brute_meet(4, a, b)
            assert m == meet(SimpleBraid(4, b), SimpleBraid(4, a))
    for a in perms:
        assert meet(SimpleBraid(4, a), SimpleBraid(4, a)).perm == a


def test_tau_on_generators_and_normal_forms():
    assert tau(BraidWord(4, (1, -3))) == BraidWord(4, (3, -1))
    assert tau(S(1)) == S(3)
    rng = random.Random(5)
    for _ in range(100):
        w = random_word(rng, 4, 12)
        x = normal_form(w)
        assert normal_form(tau(w)) == tau(x)
        assert same_element(tau(w), (~delta_word(4)) * w * delta_word(4))


def test_b3_products_of_proper_simples_are_normal():
    rng = random.Random(8)
    proper = [s for s in all_simples(3) if not s.is_identity() and not s.is_delta()]
    hits = 0
    for _ in range(200):
        facs = [rng.choice(proper) for _ in range(rng.randint(1, 6))]
        p = rng.randint(-3, 3)
        w = delta_word(3) ** p
        for f in facs:
            w = w * f.word()
        x = normal_form(w)
        if x.p == p and x.canonical_length == len(facs):
            hits += 1
            assert list(x.factors) == facs
    assert hits > 20


def test_relator_insertion_does_not_change_normal_form():
    rng = random.Random(9)
    relators = [(1, 2, 1, -2, -1, -2), (2, 3, 2, -3, -2, -3), (1, 3, -1, -3), (1, -1), (-3, 3)]
    for _ in range(200):
        w = random_word(rng, 4, 15).letters
        k = rng.randint(0, len(w))
        v = w[:k] + rng.choice(relators) + w[k:]
        assert normal_form(BraidWord(4, w)) == normal_form(BraidWord(4, v))


@settings(max_examples=150, deadline=None)
@given(letters4, letters4)
def test_normal_form_properties(a, b):
    wa, wb = BraidWord(4, tuple(a)), BraidWord(4, tuple(b))
    x = normal_form(wa)
    assert x.is_valid()
    assert normal_form(x.word()) == x
    assert x.sup == x.p + len(x.factors)
    assert normal_form(wa * ~wa) == NormalForm(4, 0, ())
    assert normal_form(wa * wb) == normal_form(x.word() * normal_form(wb).word())


def test_text_of_normal_form():
    x = normal_form(parse_word("n=4 s1 s2 s2"))
    assert str(x) == "D^0 . s1.s2 . s2"
