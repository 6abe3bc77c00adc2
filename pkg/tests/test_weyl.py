import itertools

import pytest

from twistflag import (BudgetExceeded, CartanMatrix, ParabolicContext,
                       bruhat_leq, canonical_reduced_word, cartan_A,
                       cartan_B2, cartan_G2, cartan_affine_A1, descents,
                       enumerate_ball, inversion_set, simple_reflection)
from twistflag.weyl import weyl_group


@pytest.fixture
def A2():
    return weyl_group(cartan_A(2))


def test_cartan_validation():
    with pytest.raises(ValueError):
        CartanMatrix([[2, -1], [0, 2]])  # broken vanishing pattern
    with pytest.raises(ValueError):
        CartanMatrix([[1, 0], [0, 2]])  # bad diagonal
    with pytest.raises(ValueError):
        CartanMatrix([[2, 1], [1, 2]])  # positive off-diagonal
    cm = cartan_B2()
    d = cm.symmetrizer
    for i in range(2):
        for j in range(2):
            assert d[i] * cm.entries[i][j] == d[j] * cm.entries[j][i]
    assert all(x > 0 for x in d)


def test_cartan_json_roundtrip():
    cm = CartanMatrix.from_json('{"cartan": [[2,-1],[-1,2]], "labels": ["1","2"]}')
    assert cm == cartan_A(2)
    assert cm.node_of_label("2") == 1
    assert CartanMatrix.from_config(cm.to_config()) == cm


def test_simple_reflection_convention(A2):
    s1 = A2.simple(0)
    # s_1(alpha_1) = -alpha_1, s_1(alpha_2) = alpha_2 + alpha_1
    assert s1.act((1, 0)) == (-1, 0)
    assert s1.act((0, 1)) == (1, 1)
    assert (s1 * s1).is_identity()
    a1 = weyl_group(cartan_A(1))
    assert a1.simple(0).mat == ((-1,),)
    with pytest.raises(IndexError):
        simple_reflection(cartan_A(2), 5)


def test_multiply_and_length(A2):
    s1, s2 = A2.simple(0), A2.simple(1)
    e = A2.identity
    assert e * s1 == s1
    assert (s1 * s1).is_identity()
    prod = s1 * s2
    assert prod.length() == 2
    assert prod.act((1, 0)) == (0, 1)  # s1 s2 (alpha_1) = alpha_2
    assert e.length() == 0
    assert (s1 * s2 * s1).length() == 3


def test_descents(A2):
    s1, s2 = A2.simple(0), A2.simple(1)
    assert descents(A2.identity, "right") == set()
    assert descents(s1, "right") == {0}
    assert descents(s1, "left") == {0}
    assert descents(s1 * s2, "right") == {1}
    assert descents(s1 * s2, "left") == {0}


def test_canonical_word(A2):
    s1, s2 = A2.simple(0), A2.simple(1)
    w0 = s1 * s2 * s1
    assert canonical_reduced_word(A2.identity) == ()
    assert canonical_reduced_word(w0) == (0, 1, 0)
    assert canonical_reduced_word(s2) == (1,)
    # evaluates back
    for w in A2.ball(3):
        assert A2.from_word(canonical_reduced_word(w)) == w


def _all_subwords_reduced(group, word, v):
    """Exhaustive subword oracle for the Bruhat order."""
    n = len(word)
    lv = group.length(v)
    for mask in range(1 << n):
        picked = [word[i] for i in range(n) if mask >> i & 1]
        if len(picked) == lv and group.from_word(picked) == v:
            return True
    return False


def test_bruhat_leq_against_subword_oracle(A2):
    s1, s2 = A2.simple(0), A2.simple(1)
    assert bruhat_leq(s1, s1 * s2)
    assert not bruhat_leq(s1 * s2, s2 * s1)
    for v in A2.ball(3):
        for w in A2.ball(3):
            expected = _all_subwords_reduced(A2, canonical_reduced_word(w), v)
            assert bruhat_leq(v, w) == expected
    b2 = weyl_group(cartan_B2())
    for v in b2.ball(4):
        for w in b2.ball(4):
            expected = _all_subwords_reduced(b2, canonical_reduced_word(w), v)
            assert bruhat_leq(v, w) == expected


def test_random_subwords_stay_below():
    """Evaluating any subword of a reduced word lands weakly below."""
    import random
    rng = random.Random(42)
    for cartan in (cartan_A(3), cartan_G2()):
        g = weyl_group(cartan)
        els = g.ball(5)
        for _ in range(60):
            w = rng.choice(els)
            word = canonical_reduced_word(w)
            picked = [i for i in word if rng.random() < 0.6]
            v = g.from_word(picked)
            assert bruhat_leq(v, w)


def test_bruhat_partial_order_axioms(A2):
    els = A2.ball(3)
    for v in els:
        assert bruhat_leq(v, v)
    for v in els:
        for w in els:
            if bruhat_leq(v, w) and bruhat_leq(w, v):
                assert v == w
    for a, b, c in itertools.product(els, repeat=3):
        if bruhat_leq(a, b) and bruhat_leq(b, c):
            assert bruhat_leq(a, c)


def test_parabolic_decompose(A2):
    s1, s2 = A2.simple(0), A2.simple(1)
    J = ParabolicContext(A2, {1})
    rep, part = J.decompose(s2)
    assert rep.is_identity() and part == s2
    rep, part = J.decompose(s1 * s2)
    assert rep == s1 and part == s2
    Jempty = ParabolicContext(A2, set())
    for w in A2.ball(3):
        rep, part = Jempty.decompose(w)
        assert rep == w and part.is_identity()
    # lengths add and the product reassembles, for every J
    for Jset in [set(), {0}, {1}, {0, 1}]:
        J = ParabolicContext(A2, Jset)
        for w in A2.ball(3):
            rep, part = J.decompose(w)
            assert rep * part == w
            assert rep.length() + part.length() == w.length()
            assert J.in_min_coset_reps(rep)
            assert J.contains(part)


@pytest.mark.parametrize("cartan,order", [
    (cartan_A(2), 6), (cartan_A(3), 24), (cartan_B2(), 8), (cartan_G2(), 12)])
def test_finite_group_orders(cartan, order):
    g = weyl_group(cartan)
    assert len(g.ball(30)) == order


def test_enumerate_ball(A2):
    assert len(enumerate_ball(cartan_A(2), 3)) == 6
    ball1 = enumerate_ball(cartan_A(2), 1)
    assert {w.canonical_word() for w in ball1} == {(), (0,), (1,)}
    aff = enumerate_ball(cartan_affine_A1(), 4)
    assert len(aff) == 9
    by_len = {}
    g = weyl_group(cartan_affine_A1())
    for w in aff:
        by_len.setdefault(g.length(w), []).append(w)
    assert {k: len(v) for k, v in by_len.items()} == {0: 1, 1: 2, 2: 2, 3: 2, 4: 2}
    with pytest.raises(BudgetExceeded):
        weyl_group(cartan_affine_A1(), budget=5).ball(100)
    # restriction to a parabolic
    g2 = weyl_group(cartan_A(2))
    J = ParabolicContext(g2, {1})
    assert len(enumerate_ball(cartan_A(2), 5, restrict_to=J)) == 2


def test_inversion_set(A2):
    s1, s2 = A2.simple(0), A2.simple(1)
    assert inversion_set(A2.identity) == []
    assert inversion_set(s1) == [(1, 0)]
    assert inversion_set(s1 * s2) == [(1, 0), (1, 1)]
    for w in A2.ball(3):
        inv = inversion_set(w)
        assert len(inv) == w.length()
        assert len(set(inv)) == len(inv)
        for beta in inv:
            assert all(x >= 0 for x in beta) and any(x > 0 for x in beta)


def test_length_equals_inversion_count_g2():
    g = weyl_group(cartan_G2())
    for w in g.ball(6):
        assert len(inversion_set(w)) == w.length()
        assert len(canonical_reduced_word(w)) == w.length()


def test_parabolic_longest():
    g = weyl_group(cartan_A(3))
    J = ParabolicContext(g, {0, 1})
    assert J.longest().length() == 3
    assert J.is_finite()
    aff = weyl_group(cartan_affine_A1(), budget=200)
    Jaff = ParabolicContext(aff, {0, 1})
    assert not Jaff.is_finite()


def test_element_serialization(A2):
    from twistflag.weyl import element_from_json, element_to_json
    w = A2.simple(0) * A2.simple(1)
    assert element_to_json(w) == [0, 1]
    assert element_from_json(A2, [0, 1]) == w


def test_mismatched_groups_rejected():
    g1 = weyl_group(cartan_A(2))
    g2 = weyl_group(cartan_B2())
    with pytest.raises(ValueError):
        g1.simple(0) * g2.simple(0)
